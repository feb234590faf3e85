#include "ricciforge/roots.hpp"

#include <sstream>
#include <stdexcept>

#include "ricciforge/rational.hpp"

namespace ricciforge {

char family_letter(RootFamily f) {
  switch (f) {
    case RootFamily::A: return 'A';
    case RootFamily::B: return 'B';
    case RootFamily::C: return 'C';
    case RootFamily::D: return 'D';
  }
  return '?';
}

RootFamily family_from_letter(char c) {
  switch (c) {
    case 'A': return RootFamily::A;
    case 'B': return RootFamily::B;
    case 'C': return RootFamily::C;
    case 'D': return RootFamily::D;
  }
  throw std::invalid_argument(std::string("unknown root family: ") + c);
}

int RootDatum::expected_positive_count() const {
  switch (family) {
    case RootFamily::A: return (rank + 1) * rank / 2;  // A_{m-1} has m(m-1)/2, rank = m-1
    case RootFamily::B: return rank * rank;
    case RootFamily::C: return rank * rank;
    case RootFamily::D: return rank * (rank - 1);
  }
  return 0;
}

void RootDatum::validate() const {
  if (int(positive_roots.size()) != expected_positive_count())
    throw std::runtime_error("positive root count mismatch for family " +
                             std::string(1, family_letter(family)));
  // Each positive root must be a nonnegative integer combination of the
  // simple ones.  Solve the small linear system exactly.
  std::vector<std::vector<int>> simples;
  for (int idx : simple_indices) simples.push_back(positive_roots[idx]);
  if (simples.empty()) throw std::runtime_error("no simple roots");
  int dim = int(simples[0].size());
  int k = int(simples.size());
  for (const auto& root : positive_roots) {
    RatMatrix A(dim, k);
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < dim; ++i) A(i, j) = simples[j][i];
    // least-squares free exact solve: A has full column rank for simple roots
    RatMatrix AtA = A.transpose() * A;
    std::vector<Rat> rhs(k, Rat(0));
    for (int j = 0; j < k; ++j)
      for (int i = 0; i < dim; ++i) rhs[j] += Rat(simples[j][i]) * Rat(root[i]);
    std::vector<Rat> coeff = AtA.solve(rhs);
    // verify the solution reproduces the root and is a nonnegative integer vector
    for (int i = 0; i < dim; ++i) {
      Rat acc(0);
      for (int j = 0; j < k; ++j) acc += coeff[j] * Rat(simples[j][i]);
      if (acc != Rat(root[i]))
        throw std::runtime_error("root not in simple-root lattice: " + root_name(root));
    }
    for (const auto& c : coeff)
      if (c < 0 || c.get_den() != 1)
        throw std::runtime_error("root is not a nonnegative integer combination: " + root_name(root));
  }
}

std::string root_name(const std::vector<int>& root) {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < root.size(); ++i) {
    int c = root[i];
    if (c == 0) continue;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c > 0 ? "+" : "-");
    }
    int a = c > 0 ? c : -c;
    if (a != 1) os << a;
    os << "e" << (i + 1);
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace ricciforge
