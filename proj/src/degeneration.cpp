#include "ricciforge/degeneration.hpp"

#include <sstream>
#include <stdexcept>

#include "ricciforge/semidirect.hpp"

namespace ricciforge {

void ScalingFamily::validate() const {
  if (exponents.size() != constants.size())
    throw std::invalid_argument("scaling family: exponent/constant length mismatch");
  for (const auto& c : constants)
    if (c == 0) throw std::invalid_argument("scaling family constants must be nonzero");
}

StructureTensor LaurentBracket::instantiate(const Rat& t) const {
  if (t <= 0) throw std::invalid_argument("instantiate requires t > 0");
  StructureTensor out(dim);
  for (const auto& [ijk, poly] : entries) {
    auto [i, j, k] = ijk;
    Rat acc(0);
    for (const auto& [e, c] : poly) {
      Rat p(1);
      for (int q = 0; q < (e > 0 ? e : -e); ++q) p *= t;
      if (e >= 0)
        acc += c * p;
      else
        acc += c / p;
    }
    if (acc != 0) out.add(i, j, k, acc);
  }
  return out;
}

LaurentBracket scale_bracket(const LieAlgebra& L, const ScalingFamily& f) {
  f.validate();
  if (f.dim() != L.dim()) throw std::invalid_argument("scaling family dimension mismatch");
  LaurentBracket lb;
  lb.dim = L.dim();
  for (const auto& e : L.bracket.entries()) {
    int expo = f.exponents[e.k] - f.exponents[e.i] - f.exponents[e.j];
    Rat coeff = e.c * f.constants[e.k] / (f.constants[e.i] * f.constants[e.j]);
    auto& poly = lb.entries[{e.i, e.j, e.k}];
    poly[expo] += coeff;
    if (poly[expo] == 0) poly.erase(expo);
  }
  return lb;
}

LieAlgebra take_limit(const LaurentBracket& lb, const std::vector<BasisLabel>& labels,
                      std::vector<std::string>* dropped_log) {
  StructureTensor t(lb.dim);
  for (const auto& [ijk, poly] : lb.entries) {
    auto [i, j, k] = ijk;
    for (const auto& [e, c] : poly) {
      if (c == 0) continue;
      if (e > 0) {
        std::ostringstream os;
        os << "limit diverges at bracket (" << i << ", " << j << ", " << k << ") with t-exponent "
           << e;
        throw std::runtime_error(os.str());
      }
      if (e == 0) {
        t.add(i, j, k, c);
      } else if (dropped_log) {
        std::ostringstream os;
        os << "dropped [" << labels[i].text << ", " << labels[j].text << "] -> " << labels[k].text
           << " (coefficient " << rat_to_string(c) << ", exponent " << e << ")";
        dropped_log->push_back(os.str());
      }
    }
  }
  LieAlgebra out = make_lie_algebra(labels, std::move(t));
  JacobiReport rep = check_jacobi(out);
  if (!rep.ok) throw std::runtime_error("limit bracket violates Jacobi");
  return out;
}

ScalingFamily lemma0_family(const LieAlgebra& L, const SubspaceSplit& split, const Rat& rho) {
  if (rho == 0) throw std::invalid_argument("rho must be nonzero");
  ProductLayout lay = product_layout(L);
  if (lay.z < 0 || lay.right.empty())
    throw std::invalid_argument("lemma0_family expects a central semidirect product");
  ScalingFamily f;
  f.exponents.assign(L.dim(), 0);
  f.constants.assign(L.dim(), Rat(1));
  for (int i : lay.left) {
    if (L.labels[i].kind == LabelKind::RootX || L.labels[i].kind == LabelKind::RootY)
      f.exponents[i] = 1;
  }
  std::vector<bool> in_v1(split.v1.size() + split.v2.size(), false);
  for (int v : split.v1) in_v1[v] = true;
  for (size_t v = 0; v < lay.right.size(); ++v) {
    int idx = lay.right[v];
    if (in_v1[v]) {
      f.exponents[idx] = 1;
      f.constants[idx] = 1 / rho;
    } else {
      f.exponents[idx] = 2;
    }
  }
  return f;
}

ScalingFamily abelianization_family(int dim, const std::vector<int>& n_indices) {
  ScalingFamily f;
  f.exponents.assign(dim, 0);
  f.constants.assign(dim, Rat(1));
  for (int i : n_indices) f.exponents[i] = 1;
  return f;
}

RatMatrix scaling_matrix(const ScalingFamily& f, const Rat& t) {
  f.validate();
  std::vector<Rat> d(f.dim());
  for (int i = 0; i < f.dim(); ++i) {
    Rat p(1);
    int e = f.exponents[i];
    for (int q = 0; q < (e > 0 ? e : -e); ++q) p *= t;
    d[i] = f.constants[i] * (e >= 0 ? p : 1 / p);
  }
  return RatMatrix::diagonal(d);
}

}  // namespace ricciforge
