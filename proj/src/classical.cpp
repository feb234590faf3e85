#include "ricciforge/classical.hpp"

#include <sstream>
#include <stdexcept>

namespace ricciforge {

CMat CMat::unit(int n, int i, int j, Rat re_v, Rat im_v) {
  CMat m(n, n);
  m.re(i, j) = re_v;
  m.im(i, j) = im_v;
  return m;
}

CMat CMat::identity(int n) {
  CMat m(n, n);
  for (int i = 0; i < n; ++i) m.re(i, i) = 1;
  return m;
}

std::vector<Rat> MatrixRealization::expand(const CMat& m) const {
  int n2 = ambient * ambient;
  int dim = int(matrices.size());
  // Flatten to real vectors of length 2 n^2 and solve the exact system.
  RatMatrix A(2 * n2, dim);
  for (int b = 0; b < dim; ++b)
    for (int i = 0; i < ambient; ++i)
      for (int j = 0; j < ambient; ++j) {
        A(i * ambient + j, b) = matrices[b].re(i, j);
        A(n2 + i * ambient + j, b) = matrices[b].im(i, j);
      }
  std::vector<Rat> rhs(2 * n2, Rat(0));
  for (int i = 0; i < ambient; ++i)
    for (int j = 0; j < ambient; ++j) {
      rhs[i * ambient + j] = m.re(i, j);
      rhs[n2 + i * ambient + j] = m.im(i, j);
    }
  // Normal equations are exact and invertible for a linearly independent basis.
  RatMatrix AtA = A.transpose() * A;
  std::vector<Rat> Atb(dim, Rat(0));
  for (int b = 0; b < dim; ++b)
    for (int r = 0; r < 2 * n2; ++r)
      if (A(r, b) != 0) Atb[b] += A(r, b) * rhs[r];
  std::vector<Rat> coeff = AtA.solve(Atb);
  // Residual must vanish exactly: the commutator has to lie in the span.
  for (int i = 0; i < ambient; ++i)
    for (int j = 0; j < ambient; ++j) {
      Rat re_acc(0), im_acc(0);
      for (int b = 0; b < dim; ++b) {
        if (coeff[b] == 0) continue;
        re_acc += coeff[b] * matrices[b].re(i, j);
        im_acc += coeff[b] * matrices[b].im(i, j);
      }
      if (re_acc != m.re(i, j) || im_acc != m.im(i, j))
        throw std::runtime_error("matrix is not in the rational span of the realization");
    }
  return coeff;
}

ClassicalFamily family_from_string(const std::string& s) {
  if (s == "su") return ClassicalFamily::su;
  if (s == "so") return ClassicalFamily::so;
  if (s == "sp") return ClassicalFamily::sp;
  if (s == "sl") return ClassicalFamily::sl;
  throw std::invalid_argument("unknown family: " + s);
}

std::string family_to_string(ClassicalFamily f) {
  switch (f) {
    case ClassicalFamily::su: return "su";
    case ClassicalFamily::so: return "so";
    case ClassicalFamily::sp: return "sp";
    case ClassicalFamily::sl: return "sl";
  }
  return "?";
}

namespace {

std::vector<int> evec(int len, int i, int ci, int j = -1, int cj = 0) {
  std::vector<int> v(len, 0);
  v[i] = ci;
  if (j >= 0) v[j] = cj;
  return v;
}

/// Computes the structure tensor from exact commutators of the realization
/// matrices and verifies closure and Jacobi.
LieAlgebra algebra_from_realization(std::vector<BasisLabel> labels, const MatrixRealization& real,
                                    std::optional<RootDatum> roots) {
  int dim = int(labels.size());
  StructureTensor t(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      CMat c = real.matrices[i].commutator(real.matrices[j]);
      if (c.is_zero()) continue;
      std::vector<Rat> coeff = real.expand(c);
      for (int k = 0; k < dim; ++k)
        if (coeff[k] != 0) t.add(i, j, k, coeff[k]);
    }
  LieAlgebra L = make_lie_algebra(std::move(labels), std::move(t), std::move(roots));
  JacobiReport rep = check_jacobi(L);
  if (!rep.ok) throw std::runtime_error("realization commutators violate the Jacobi identity");
  return L;
}

// 2x2 blocks used by the so realizations, written into an ambient matrix at
// block position (bi, bj) with blocks of size 2 (the final odd row/column is
// handled separately).
void put_block(RatMatrix& m, int bi, int bj, Rat a00, Rat a01, Rat a10, Rat a11) {
  m(2 * bi, 2 * bj) = a00;
  m(2 * bi, 2 * bj + 1) = a01;
  m(2 * bi + 1, 2 * bj) = a10;
  m(2 * bi + 1, 2 * bj + 1) = a11;
}

CompactBuild build_su(int m) {
  if (m < 2) throw std::invalid_argument("su(m) requires m >= 2");
  RootDatum rd;
  rd.family = RootFamily::A;
  rd.rank = m - 1;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      rd.positive_roots.push_back(evec(m, i, 1, j, -1));
      pairs.push_back({i, j});
      if (j == i + 1) rd.simple_indices.push_back(int(rd.positive_roots.size()) - 1);
    }
  rd.validate();

  std::vector<BasisLabel> labels;
  MatrixRealization real;
  real.ambient = m;
  for (size_t s = 0; s < rd.simple_indices.size(); ++s) {
    int l = int(s);
    labels.push_back(BasisLabel::cartan(l, root_name(rd.positive_roots[rd.simple_indices[s]])));
    CMat h(m, m);
    h.im(l, l) = 1;
    h.im(l + 1, l + 1) = -1;
    real.matrices.push_back(h);
  }
  for (size_t r = 0; r < pairs.size(); ++r) {
    labels.push_back(BasisLabel::root_x(int(r), root_name(rd.positive_roots[r])));
    auto [i, j] = pairs[r];
    CMat x(m, m);
    x.re(i, j) = 1;
    x.re(j, i) = -1;
    real.matrices.push_back(x);
  }
  for (size_t r = 0; r < pairs.size(); ++r) {
    labels.push_back(BasisLabel::root_y(int(r), root_name(rd.positive_roots[r])));
    auto [i, j] = pairs[r];
    CMat y(m, m);
    y.im(i, j) = 1;
    y.im(j, i) = 1;
    real.matrices.push_back(y);
  }
  LieAlgebra L = algebra_from_realization(std::move(labels), real, rd);
  return {std::move(L), std::move(real), std::move(rd)};
}

// so(2l+1) and so(2l): real antisymmetric matrices in the 2x2-block shape.
CompactBuild build_so(int m) {
  if (m < 3) throw std::invalid_argument("so(m) requires m >= 3");
  int l = m / 2;
  bool odd = m % 2 == 1;
  RootDatum rd;
  rd.family = odd ? RootFamily::B : RootFamily::D;
  rd.rank = l;

  struct RootSpec {
    std::vector<int> vec;
    int type;  // 0: e_k - e_j, 1: e_k + e_j, 2: e_r (short, odd only)
    int k, j;  // block indices (0-based); j unused for short roots
  };
  std::vector<RootSpec> roots;
  for (int k = 0; k < l; ++k)
    for (int j = k + 1; j < l; ++j) {
      roots.push_back({evec(l, k, 1, j, -1), 0, k, j});
      roots.push_back({evec(l, k, 1, j, 1), 1, k, j});
    }
  if (odd)
    for (int r = 0; r < l; ++r) roots.push_back({evec(l, r, 1), 2, r, -1});
  for (const auto& rs : roots) rd.positive_roots.push_back(rs.vec);
  for (size_t ri = 0; ri < roots.size(); ++ri) {
    const auto& rs = roots[ri];
    bool simple = false;
    if (rs.type == 0 && rs.j == rs.k + 1) simple = true;
    if (odd && rs.type == 2 && rs.k == l - 1) simple = true;
    if (!odd && rs.type == 1 && rs.k == l - 2 && rs.j == l - 1) simple = true;
    if (simple) rd.simple_indices.push_back(int(ri));
  }
  rd.validate();

  auto rotation_cartan = [&](int block, Rat sign) {
    // the 2x2 block [[0,-1],[1,0]] at diagonal position `block`
    RatMatrix h(m, m);
    put_block(h, block, block, Rat(0), -sign, sign, Rat(0));
    return h;
  };

  std::vector<BasisLabel> labels;
  MatrixRealization real;
  real.ambient = m;
  // simple Cartans
  int cartan_count = 0;
  for (int s : rd.simple_indices) {
    const auto& rs = roots[s];
    RatMatrix h(m, m);
    if (rs.type == 0) {
      h = rotation_cartan(rs.k, Rat(1)) + rotation_cartan(rs.j, Rat(-1));
    } else if (rs.type == 1) {
      h = rotation_cartan(rs.k, Rat(1)) + rotation_cartan(rs.j, Rat(1));
    } else {
      h = rotation_cartan(rs.k, Rat(1));
    }
    labels.push_back(BasisLabel::cartan(cartan_count++, root_name(rs.vec)));
    CMat hc(m, m);
    hc.re = h;
    real.matrices.push_back(hc);
  }
  auto off_blocks = [&](int k, int j, Rat a00, Rat a01, Rat a10, Rat a11) {
    RatMatrix x(m, m);
    put_block(x, k, j, a00, a01, a10, a11);
    // antisymmetry: block (j, k) = -transpose of block (k, j)
    x(2 * j, 2 * k) = -a00;
    x(2 * j, 2 * k + 1) = -a10;
    x(2 * j + 1, 2 * k) = -a01;
    x(2 * j + 1, 2 * k + 1) = -a11;
    return x;
  };
  auto short_blocks = [&](int r, Rat top, Rat bot) {
    RatMatrix x(m, m);
    x(2 * r, m - 1) = top;
    x(2 * r + 1, m - 1) = bot;
    x(m - 1, 2 * r) = -top;
    x(m - 1, 2 * r + 1) = -bot;
    return x;
  };
  for (size_t ri = 0; ri < roots.size(); ++ri) {
    const auto& rs = roots[ri];
    RatMatrix x(m, m);
    if (rs.type == 0)
      x = off_blocks(rs.k, rs.j, Rat(2), Rat(0), Rat(0), Rat(2));
    else if (rs.type == 1)
      x = off_blocks(rs.k, rs.j, Rat(2), Rat(0), Rat(0), Rat(-2));
    else
      x = short_blocks(rs.k, Rat(2), Rat(0));
    labels.push_back(BasisLabel::root_x(int(ri), root_name(rs.vec)));
    CMat xc(m, m);
    xc.re = x;
    real.matrices.push_back(xc);
  }
  for (size_t ri = 0; ri < roots.size(); ++ri) {
    const auto& rs = roots[ri];
    RatMatrix y(m, m);
    if (rs.type == 0)
      y = off_blocks(rs.k, rs.j, Rat(0), Rat(-2), Rat(2), Rat(0));
    else if (rs.type == 1)
      y = off_blocks(rs.k, rs.j, Rat(0), Rat(2), Rat(2), Rat(0));
    else
      y = short_blocks(rs.k, Rat(0), Rat(2));
    labels.push_back(BasisLabel::root_y(int(ri), root_name(rs.vec)));
    CMat yc(m, m);
    yc.re = y;
    real.matrices.push_back(yc);
  }
  LieAlgebra L = algebra_from_realization(std::move(labels), real, rd);
  if (m == 3) L.notes.push_back("so(3) is isomorphic to su(2)");
  return {std::move(L), std::move(real), std::move(rd)};
}

CompactBuild build_sp(int m) {
  if (m < 2) throw std::invalid_argument("sp(m) requires m >= 2");
  int n = 2 * m;
  RootDatum rd;
  rd.family = RootFamily::C;
  rd.rank = m;
  struct RootSpec {
    std::vector<int> vec;
    int type;  // 0: e_k - e_j, 1: e_k + e_j, 2: 2 e_r
    int k, j;
  };
  std::vector<RootSpec> roots;
  for (int k = 0; k < m; ++k)
    for (int j = k + 1; j < m; ++j) {
      roots.push_back({evec(m, k, 1, j, -1), 0, k, j});
      roots.push_back({evec(m, k, 1, j, 1), 1, k, j});
    }
  for (int r = 0; r < m; ++r) roots.push_back({evec(m, r, 2), 2, r, -1});
  for (const auto& rs : roots) rd.positive_roots.push_back(rs.vec);
  for (size_t ri = 0; ri < roots.size(); ++ri) {
    const auto& rs = roots[ri];
    if ((rs.type == 0 && rs.j == rs.k + 1) || (rs.type == 2 && rs.k == m - 1))
      rd.simple_indices.push_back(int(ri));
  }
  rd.validate();

  std::vector<BasisLabel> labels;
  MatrixRealization real;
  real.ambient = n;
  int cartan_count = 0;
  for (int s : rd.simple_indices) {
    const auto& rs = roots[s];
    CMat h(n, n);
    if (rs.type == 0) {
      int i = rs.k, j = rs.j;
      h.im(i, i) = 1;
      h.im(j, j) = -1;
      h.im(m + i, m + i) = -1;
      h.im(m + j, m + j) = 1;
    } else {  // 2 e_m
      h.im(m - 1, m - 1) = 1;
      h.im(n - 1, n - 1) = -1;
    }
    labels.push_back(BasisLabel::cartan(cartan_count++, root_name(rs.vec)));
    real.matrices.push_back(h);
  }
  for (size_t ri = 0; ri < roots.size(); ++ri) {
    const auto& rs = roots[ri];
    CMat x(n, n);
    int k = rs.k, j = rs.j;
    if (rs.type == 0) {
      x.re(k, j) = 1;
      x.re(m + j, m + k) = -1;
      x.re(j, k) = -1;
      x.re(m + k, m + j) = 1;
    } else if (rs.type == 1) {
      x.re(k, m + j) = 1;
      x.re(j, m + k) = 1;
      x.re(m + k, j) = -1;
      x.re(m + j, k) = -1;
    } else {
      x.re(k, m + k) = 1;
      x.re(m + k, k) = -1;
    }
    labels.push_back(BasisLabel::root_x(int(ri), root_name(rs.vec)));
    real.matrices.push_back(x);
  }
  for (size_t ri = 0; ri < roots.size(); ++ri) {
    const auto& rs = roots[ri];
    CMat y(n, n);
    int k = rs.k, j = rs.j;
    if (rs.type == 0) {
      y.im(k, j) = 1;
      y.im(m + j, m + k) = -1;
      y.im(j, k) = 1;
      y.im(m + k, m + j) = -1;
    } else if (rs.type == 1) {
      y.im(k, m + j) = 1;
      y.im(j, m + k) = 1;
      y.im(m + k, j) = 1;
      y.im(m + j, k) = 1;
    } else {
      y.im(k, m + k) = 1;
      y.im(m + k, k) = 1;
    }
    labels.push_back(BasisLabel::root_y(int(ri), root_name(rs.vec)));
    real.matrices.push_back(y);
  }
  LieAlgebra L = algebra_from_realization(std::move(labels), real, rd);
  return {std::move(L), std::move(real), std::move(rd)};
}

}  // namespace

CompactBuild build_compact(ClassicalFamily family, int m) {
  switch (family) {
    case ClassicalFamily::su: return build_su(m);
    case ClassicalFamily::so: return build_so(m);
    case ClassicalFamily::sp: return build_sp(m);
    case ClassicalFamily::sl: break;
  }
  throw std::invalid_argument("build_compact expects su, so or sp");
}

NoncompactBuild build_noncompact_sl(int m, bool with_center) {
  if (m < 2) throw std::invalid_argument("sl(m,R) requires m >= 2");
  RootDatum rd;
  rd.family = RootFamily::A;
  rd.rank = m - 1;
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      rd.positive_roots.push_back(evec(m, i, 1, j, -1));
      pairs.push_back({i, j});
      if (j == i + 1) rd.simple_indices.push_back(int(rd.positive_roots.size()) - 1);
    }
  rd.validate();

  std::vector<BasisLabel> labels;
  MatrixRealization real;
  real.ambient = m;
  if (with_center) {
    labels.push_back(BasisLabel::z());
    real.matrices.push_back(CMat::identity(m));
  }
  for (size_t s = 0; s < rd.simple_indices.size(); ++s) {
    int l = int(s);
    labels.push_back(BasisLabel::cartan(l, root_name(rd.positive_roots[rd.simple_indices[s]])));
    CMat h(m, m);
    h.re(l, l) = 1;
    h.re(l + 1, l + 1) = -1;
    real.matrices.push_back(h);
  }
  for (size_t r = 0; r < pairs.size(); ++r) {
    labels.push_back(BasisLabel::root_x(int(r), root_name(rd.positive_roots[r])));
    auto [i, j] = pairs[r];
    CMat x(m, m);
    x.re(i, j) = 1;
    x.re(j, i) = -1;
    real.matrices.push_back(x);
  }
  for (size_t r = 0; r < pairs.size(); ++r) {
    labels.push_back(BasisLabel::root_y(int(r), root_name(rd.positive_roots[r])));
    auto [i, j] = pairs[r];
    CMat y(m, m);
    y.re(i, j) = 1;
    y.re(j, i) = 1;
    real.matrices.push_back(y);
  }
  LieAlgebra L = algebra_from_realization(std::move(labels), real, rd);
  return {std::move(L), std::move(real), std::move(rd)};
}

std::vector<VarForm> so_variables(int m) {
  if (m < 2) throw std::invalid_argument("so_variables requires m >= 2");
  std::vector<VarForm> vars;
  int l = m / 2;
  for (int k = 0; k < l; ++k) {
    VarForm zp, zm;
    zp.terms = {{2 * k, {Rat(1), Rat(0)}}, {2 * k + 1, {Rat(0), Rat(1)}}};
    zm.terms = {{2 * k, {Rat(1), Rat(0)}}, {2 * k + 1, {Rat(0), Rat(-1)}}};
    vars.push_back(zp);
    vars.push_back(zm);
  }
  if (m % 2 == 1) {
    VarForm last;
    last.terms = {{m - 1, {Rat(1), Rat(0)}}};
    vars.push_back(last);
  }
  return vars;
}

CMat variable_action(ClassicalFamily family, const CMat& a, int m) {
  if (family == ClassicalFamily::so) {
    // z = C x, so the matrix acting on the z-coordinates is C A C^{-1}.
    std::vector<VarForm> vars = so_variables(m);
    CMat C(m, m);
    for (int r = 0; r < m; ++r)
      for (const auto& [xi, coeff] : vars[r].terms) {
        C.re(r, xi) = coeff.first;
        C.im(r, xi) = coeff.second;
      }
    // exact complex inverse via the realified 2m x 2m system
    RatMatrix big(2 * m, 2 * m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        big(i, j) = C.re(i, j);
        big(i, m + j) = -C.im(i, j);
        big(m + i, j) = C.im(i, j);
        big(m + i, m + j) = C.re(i, j);
      }
    RatMatrix biginv = big.inverse();
    CMat Cinv(m, m);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        Cinv.re(i, j) = biginv(i, j);
        Cinv.im(i, j) = biginv(m + i, j);
      }
    return (C * a * Cinv) * Rat(-1);
  }
  return a * Rat(-1);
}

}  // namespace ricciforge
