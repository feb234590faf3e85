#include "ricciforge/lie_algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ricciforge {

void StructureTensor::add(int i, int j, int k, const Rat& c) {
  if (i == j || c == 0) {
    if (i == j && c != 0) throw std::invalid_argument("bracket [x,x] must vanish");
    return;
  }
  int a = i, b = j;
  Rat v = c;
  if (a > b) {
    std::swap(a, b);
    v = -v;
  }
  if (a < 0 || b >= dim_ || k < 0 || k >= dim_) throw std::out_of_range("tensor index out of range");
  auto it = std::find_if(entries_.begin(), entries_.end(),
                         [&](const TensorEntry& e) { return e.i == a && e.j == b && e.k == k; });
  if (it != entries_.end()) {
    it->c += v;
    if (it->c == 0) entries_.erase(it);
  } else {
    entries_.push_back({a, b, k, v});
  }
  normalize();
}

void StructureTensor::set(int i, int j, int k, const Rat& c) {
  Rat cur = coeff(i, j, k);
  add(i, j, k, c - cur);
}

void StructureTensor::normalize() {
  std::sort(entries_.begin(), entries_.end(), [](const TensorEntry& a, const TensorEntry& b) {
    return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
  });
  index_.clear();
  for (size_t p = 0; p < entries_.size();) {
    size_t q = p;
    while (q < entries_.size() && entries_[q].i == entries_[p].i && entries_[q].j == entries_[p].j) ++q;
    index_[{entries_[p].i, entries_[p].j}] = {int(p), int(q)};
    p = q;
  }
}

Rat StructureTensor::coeff(int i, int j, int k) const {
  if (i == j) return Rat(0);
  int a = i, b = j;
  bool flip = false;
  if (a > b) {
    std::swap(a, b);
    flip = true;
  }
  auto it = index_.find({a, b});
  if (it == index_.end()) return Rat(0);
  for (int p = it->second.first; p < it->second.second; ++p)
    if (entries_[p].k == k) return flip ? -entries_[p].c : entries_[p].c;
  return Rat(0);
}

std::vector<Rat> StructureTensor::bracket_basis(int i, int j) const {
  std::vector<Rat> v(dim_, Rat(0));
  if (i == j) return v;
  int a = i, b = j;
  bool flip = false;
  if (a > b) {
    std::swap(a, b);
    flip = true;
  }
  auto it = index_.find({a, b});
  if (it == index_.end()) return v;
  for (int p = it->second.first; p < it->second.second; ++p)
    v[entries_[p].k] = flip ? -entries_[p].c : entries_[p].c;
  return v;
}

bool StructureTensor::operator==(const StructureTensor& o) const {
  if (dim_ != o.dim_ || entries_.size() != o.entries_.size()) return false;
  for (size_t p = 0; p < entries_.size(); ++p) {
    const auto& a = entries_[p];
    const auto& b = o.entries_[p];
    if (a.i != b.i || a.j != b.j || a.k != b.k || a.c != b.c) return false;
  }
  return true;
}

LieAlgebra make_lie_algebra(std::vector<BasisLabel> labels, StructureTensor t,
                            std::optional<RootDatum> roots) {
  if (int(labels.size()) != t.dim()) throw std::invalid_argument("label count must equal dimension");
  check_labels_distinct(labels);
  LieAlgebra L{std::move(labels), std::move(t), std::move(roots), {}};
  return L;
}

std::vector<Rat> bracket_eval(const LieAlgebra& L, const std::vector<Rat>& x,
                              const std::vector<Rat>& y) {
  int n = L.dim();
  if (int(x.size()) != n || int(y.size()) != n)
    throw std::invalid_argument("bracket_eval: vector dimension mismatch");
  std::vector<Rat> out(n, Rat(0));
  for (const auto& e : L.bracket.entries()) {
    Rat w = x[e.i] * y[e.j] - x[e.j] * y[e.i];
    if (w != 0) out[e.k] += w * e.c;
  }
  return out;
}

JacobiReport check_jacobi(const LieAlgebra& L) {
  int n = L.dim();
  JacobiReport rep;
  rep.residual = Rat(0);
  // A triple with all three pairwise brackets zero satisfies Jacobi
  // trivially, so it suffices to take each stored pair together with every
  // third index.  Triples are canonicalized to avoid re-evaluation.
  std::set<std::pair<int, int>> pairs;
  for (const auto& e : L.bracket.entries()) pairs.insert({e.i, e.j});
  std::set<std::tuple<int, int, int>> done;
  for (auto [pi, pj] : pairs) {
    for (int pk = 0; pk < n; ++pk) {
      if (pk == pi || pk == pj) continue;
      int i = pi, j = pj, k = pk;
      if (i > j) std::swap(i, j);
      if (j > k) std::swap(j, k);
      if (i > j) std::swap(i, j);
      if (!done.insert({i, j, k}).second) continue;
      // J = [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
      std::vector<Rat> acc(n, Rat(0));
      auto fold = [&](int a, int b, int c) {
        std::vector<Rat> bab = L.bracket.bracket_basis(a, b);
        for (int t = 0; t < n; ++t)
          if (bab[t] != 0) {
            std::vector<Rat> v = L.bracket.bracket_basis(t, c);
            for (int s = 0; s < n; ++s) acc[s] += bab[t] * v[s];
          }
      };
      fold(i, j, k);
      fold(j, k, i);
      fold(k, i, j);
      Rat worst(0);
      for (const auto& v : acc) {
        Rat av = abs(v);
        if (av > worst) worst = av;
      }
      if (worst > rep.residual) {
        rep.residual = worst;
        rep.i = i;
        rep.j = j;
        rep.k = k;
      }
    }
  }
  rep.ok = rep.residual == 0;
  return rep;
}

RatMatrix ad_matrix(const LieAlgebra& L, const std::vector<Rat>& x) {
  int n = L.dim();
  if (int(x.size()) != n) throw std::invalid_argument("ad_matrix: dimension mismatch");
  RatMatrix m(n, n);
  for (const auto& e : L.bracket.entries()) {
    // [x, e_j] column j picks up x_i c_{ij}^k; [x, e_i] column i picks up -x_j c_{ij}^k
    if (x[e.i] != 0) m(e.k, e.j) += x[e.i] * e.c;
    if (x[e.j] != 0) m(e.k, e.i) -= x[e.j] * e.c;
  }
  return m;
}

SparseRatMatrix ad_basis_sparse(const LieAlgebra& L, int i) {
  int n = L.dim();
  SparseRatMatrix m(n, n);
  for (const auto& e : L.bracket.entries()) {
    if (e.i == i) m.add(e.k, e.j, e.c);
    if (e.j == i) m.add(e.k, e.i, -e.c);
  }
  return m;
}

RatMatrix killing_form(const LieAlgebra& L) {
  int n = L.dim();
  // K_{ab} = sum_{i,j} c_{ai}^j c_{bj}^i; group expanded entries by (i, j).
  // expanded: (a, i, j, c) meaning [e_a, e_i] has coefficient c on e_j.
  std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> by_arg_out;
  for (const auto& e : L.bracket.entries()) {
    by_arg_out[{e.j, e.k}].push_back({e.i, e.c});
    by_arg_out[{e.i, e.k}].push_back({e.j, -e.c});
  }
  RatMatrix K(n, n);
  for (const auto& [ij, lst] : by_arg_out) {
    auto it = by_arg_out.find({ij.second, ij.first});
    if (it == by_arg_out.end()) continue;
    for (const auto& [a, ca] : lst)
      for (const auto& [b, cb] : it->second) K(a, b) += ca * cb;
  }
  return K;
}

RatMatrix killing_operator(const LieAlgebra& L, const RatMatrix& gram) {
  if (!gram.is_positive_definite())
    throw std::invalid_argument("killing_operator: gram matrix is not symmetric positive definite");
  return gram.inverse() * killing_form(L);
}

LieAlgebra gl_action(const RatMatrix& g, const LieAlgebra& L) {
  int n = L.dim();
  if (g.rows() != n || g.cols() != n) throw std::invalid_argument("gl_action: size mismatch");
  RatMatrix ginv = g.inverse();  // throws on singular g
  StructureTensor t(n);
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> gi(n);
    for (int r = 0; r < n; ++r) gi[r] = ginv(r, i);
    for (int j = i + 1; j < n; ++j) {
      std::vector<Rat> gj(n);
      for (int r = 0; r < n; ++r) gj[r] = ginv(r, j);
      std::vector<Rat> br = bracket_eval(L, gi, gj);
      std::vector<Rat> out = g.apply(br);
      for (int k = 0; k < n; ++k)
        if (out[k] != 0) t.add(i, j, k, out[k]);
    }
  }
  LieAlgebra out{L.labels, std::move(t), L.root_meta, {}};
  JacobiReport rep = check_jacobi(out);
  if (!rep.ok) throw std::runtime_error("gl_action produced a non-Jacobi tensor");
  return out;
}

namespace {

std::vector<std::vector<Rat>> bracket_span(const LieAlgebra& L,
                                           const std::vector<std::vector<Rat>>& a,
                                           const std::vector<std::vector<Rat>>& b) {
  std::vector<std::vector<Rat>> rows;
  for (const auto& x : a)
    for (const auto& y : b) {
      std::vector<Rat> v = bracket_eval(L, x, y);
      bool nz = false;
      for (const auto& c : v) nz = nz || c != 0;
      if (nz) rows.push_back(std::move(v));
    }
  return span_basis(rows);
}

std::vector<std::vector<Rat>> full_basis(int n) {
  std::vector<std::vector<Rat>> rows;
  for (int i = 0; i < n; ++i) rows.push_back(basis_vector(n, i));
  return rows;
}

}  // namespace

std::vector<std::vector<std::vector<Rat>>> lower_central_series(const LieAlgebra& L) {
  std::vector<std::vector<std::vector<Rat>>> series;
  auto g = full_basis(L.dim());
  series.push_back(g);
  auto cur = g;
  while (!cur.empty()) {
    auto next = bracket_span(L, g, cur);
    if (int(next.size()) == int(cur.size())) {  // stabilized, not nilpotent
      series.push_back(next);
      break;
    }
    series.push_back(next);
    cur = series.back();
  }
  return series;
}

std::vector<std::vector<std::vector<Rat>>> derived_series(const LieAlgebra& L) {
  std::vector<std::vector<std::vector<Rat>>> series;
  series.push_back(full_basis(L.dim()));
  auto cur = series.back();
  while (!cur.empty()) {
    auto next = bracket_span(L, cur, cur);
    if (int(next.size()) == int(cur.size())) {
      series.push_back(next);
      break;
    }
    series.push_back(next);
    cur = series.back();
  }
  return series;
}

bool is_nilpotent(const LieAlgebra& L) {
  auto s = lower_central_series(L);
  return s.back().empty();
}

bool is_solvable(const LieAlgebra& L) {
  auto s = derived_series(L);
  return s.back().empty();
}

bool is_abelian(const LieAlgebra& L) { return L.bracket.is_zero(); }

std::vector<std::vector<Rat>> center(const LieAlgebra& L) {
  int n = L.dim();
  // x in center iff sum_i x_i c_{ij}^k = 0 for all (j, k).
  RatMatrix A(n * n, n);
  for (const auto& e : L.bracket.entries()) {
    A(e.j * n + e.k, e.i) += e.c;
    A(e.i * n + e.k, e.j) -= e.c;
  }
  RatMatrix ker = A.nullspace();
  std::vector<std::vector<Rat>> out;
  for (int c = 0; c < ker.cols(); ++c) {
    std::vector<Rat> v(n);
    for (int r = 0; r < n; ++r) v[r] = ker(r, c);
    out.push_back(std::move(v));
  }
  return out;
}

LieAlgebra subalgebra_on_indices(const LieAlgebra& L, const std::vector<int>& idx) {
  int m = int(idx.size());
  std::vector<int> pos(L.dim(), -1);
  for (int p = 0; p < m; ++p) pos[idx[p]] = p;
  StructureTensor t(m);
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      std::vector<Rat> v = L.bracket.bracket_basis(idx[a], idx[b]);
      for (int k = 0; k < L.dim(); ++k) {
        if (v[k] == 0) continue;
        if (pos[k] < 0)
          throw std::runtime_error("subspace is not closed under the bracket");
        t.add(a, b, pos[k], v[k]);
      }
    }
  std::vector<BasisLabel> labels;
  for (int i : idx) labels.push_back(L.labels[i]);
  return LieAlgebra{std::move(labels), std::move(t), std::nullopt, {}};
}

bool indices_form_ideal(const LieAlgebra& L, const std::vector<int>& idx) {
  std::vector<bool> in(L.dim(), false);
  for (int i : idx) in[i] = true;
  for (const auto& e : L.bracket.entries()) {
    bool touches = in[e.i] || in[e.j];
    if (touches && !in[e.k]) return false;
  }
  return true;
}

std::vector<Rat> basis_vector(int dim, int i) {
  std::vector<Rat> v(dim, Rat(0));
  v[i] = 1;
  return v;
}

std::vector<Rat> trace_vector(const LieAlgebra& L) {
  std::vector<Rat> t(L.dim(), Rat(0));
  for (const auto& e : L.bracket.entries()) {
    if (e.k == e.j) t[e.i] += e.c;  // [e_i, e_j] component on e_j
    if (e.k == e.i) t[e.j] -= e.c;  // [e_j, e_i] component on e_i
  }
  return t;
}

}  // namespace ricciforge
