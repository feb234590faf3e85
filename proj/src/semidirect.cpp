#include "ricciforge/semidirect.hpp"

#include <sstream>
#include <stdexcept>

namespace ricciforge {

ProductLayout product_layout(const LieAlgebra& L) {
  ProductLayout lay;
  for (int i = 0; i < L.dim(); ++i) {
    switch (L.labels[i].kind) {
      case LabelKind::Z: lay.z = i; break;
      case LabelKind::CartanH:
      case LabelKind::RootX:
      case LabelKind::RootY: lay.left.push_back(i); break;
      case LabelKind::Monomial: lay.right.push_back(i); break;
      case LabelKind::Generic: lay.right.push_back(i); break;
    }
  }
  return lay;
}

LieAlgebra central_semidirect(const LieAlgebra& u, const Representation& rep) {
  if (rep.source.dim() != u.dim())
    throw std::invalid_argument("representation source does not match the algebra");
  if (!rep.homomorphism_holds())
    throw std::runtime_error("representation violates the homomorphism identity");
  int du = u.dim(), dv = rep.dim_v;
  int n = 1 + du + dv;
  StructureTensor t(n);
  // internal u brackets, shifted by 1
  for (const auto& e : u.bracket.entries()) t.add(e.i + 1, e.j + 1, e.k + 1, e.c);
  // [Z, v] = v
  for (int v = 0; v < dv; ++v) t.add(0, 1 + du + v, 1 + du + v, Rat(1));
  // [x, v] = pi(x) v
  for (int x = 0; x < du; ++x)
    for (int col = 0; col < dv; ++col)
      for (const auto& [row, c] : rep.operators[x].column(col))
        t.add(1 + x, 1 + du + col, 1 + du + row, c);

  std::vector<BasisLabel> labels;
  labels.push_back(BasisLabel::z());
  for (const auto& l : u.labels) labels.push_back(l);
  if (rep.monomials) {
    for (const auto& [exps, imag] : rep.monomials->elements)
      labels.push_back(BasisLabel::monomial(exps, imag));
  } else {
    for (int v = 0; v < dv; ++v) labels.push_back(BasisLabel::generic("v" + std::to_string(v + 1)));
  }
  LieAlgebra L = make_lie_algebra(std::move(labels), std::move(t), u.root_meta);
  JacobiReport rep_j = check_jacobi(L);
  if (!rep_j.ok) throw std::runtime_error("central semidirect product violates Jacobi");
  return L;
}

LieAlgebra general_semidirect(const SemidirectSpec& in) {
  SemidirectSpec spec = in;
  int dl = spec.left.dim(), dr = spec.right.dim();
  // z_scaling replaces the action of the leading (central) basis element by
  // a positive diagonal, one weight per right-factor direction.
  if (!spec.z_scaling.empty()) {
    if (int(spec.z_scaling.size()) != dr)
      throw std::invalid_argument("z_scaling needs one weight per right basis element");
    for (const auto& w : spec.z_scaling)
      if (w <= 0) throw std::invalid_argument("z_scaling weights must be positive");
    if (spec.action.empty()) spec.action.resize(dl, RatMatrix(dr, dr));
    spec.action[0] = RatMatrix::diagonal(spec.z_scaling);
  }
  if (int(spec.action.size()) != dl)
    throw std::invalid_argument("one action matrix per left basis element required");

  // Each action matrix must be a derivation of the right algebra:
  // D [x, y] = [D x, y] + [x, D y].
  for (int a = 0; a < dl; ++a) {
    const RatMatrix& D = spec.action[a];
    if (D.rows() != dr || D.cols() != dr)
      throw std::invalid_argument("action matrix size mismatch");
    for (int i = 0; i < dr; ++i)
      for (int j = i + 1; j < dr; ++j) {
        std::vector<Rat> lhs = D.apply(spec.right.bracket.bracket_basis(i, j));
        std::vector<Rat> di(dr), dj(dr);
        for (int r = 0; r < dr; ++r) {
          di[r] = D(r, i);
          dj[r] = D(r, j);
        }
        std::vector<Rat> rhs = bracket_eval(spec.right, di, basis_vector(dr, j));
        std::vector<Rat> rhs2 = bracket_eval(spec.right, basis_vector(dr, i), dj);
        for (int r = 0; r < dr; ++r)
          if (lhs[r] != rhs[r] + rhs2[r]) {
            std::ostringstream os;
            os << "not a derivation: action of left basis element " << a
               << " fails Leibniz on right pair (" << i << ", " << j << ")";
            throw std::runtime_error(os.str());
          }
      }
  }
  // The action must be a homomorphism: action([x,y]) = [action x, action y].
  for (int a = 0; a < dl; ++a)
    for (int b = a + 1; b < dl; ++b) {
      std::vector<Rat> br = spec.left.bracket.bracket_basis(a, b);
      RatMatrix lhs(dr, dr);
      for (int k = 0; k < dl; ++k)
        if (br[k] != 0) lhs = lhs + spec.action[k] * br[k];
      RatMatrix rhs = spec.action[a] * spec.action[b] - spec.action[b] * spec.action[a];
      if (!(lhs - rhs).is_zero()) {
        std::ostringstream os;
        os << "action is not a homomorphism on left pair (" << a << ", " << b << ")";
        throw std::runtime_error(os.str());
      }
    }

  int n = dl + dr;
  StructureTensor t(n);
  for (const auto& e : spec.left.bracket.entries()) t.add(e.i, e.j, e.k, e.c);
  for (const auto& e : spec.right.bracket.entries()) t.add(dl + e.i, dl + e.j, dl + e.k, e.c);
  for (int a = 0; a < dl; ++a)
    for (int j = 0; j < dr; ++j)
      for (int r = 0; r < dr; ++r)
        if (spec.action[a](r, j) != 0) t.add(a, dl + j, dl + r, spec.action[a](r, j));

  std::vector<BasisLabel> labels;
  for (const auto& l : spec.left.labels) labels.push_back(l);
  for (const auto& l : spec.right.labels) {
    // keep right labels distinct from left ones
    BasisLabel nl = l;
    bool clash = false;
    for (const auto& ll : spec.left.labels) clash = clash || ll.text == nl.text;
    if (clash) nl = BasisLabel::generic("n:" + nl.text);
    labels.push_back(nl);
  }
  LieAlgebra L = make_lie_algebra(std::move(labels), std::move(t), spec.left.root_meta);
  JacobiReport rep = check_jacobi(L);
  if (!rep.ok) throw std::runtime_error("semidirect product violates Jacobi");
  return L;
}

}  // namespace ricciforge
