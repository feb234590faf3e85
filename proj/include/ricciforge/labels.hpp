#ifndef RICCIFORGE_LABELS_HPP
#define RICCIFORGE_LABELS_HPP

#include <string>
#include <vector>

namespace ricciforge {

enum class LabelKind { Z, CartanH, RootX, RootY, Monomial, Generic };

/// A named basis direction of a Lie algebra.  The `text` field is the
/// stable serialized form ("Z", "H[e1-e2]", "X[2e1]", "p[2,0]i", ...).
struct BasisLabel {
  LabelKind kind = LabelKind::Generic;
  int index = -1;              // simple-root index (CartanH) or positive-root id (RootX/RootY)
  std::vector<int> exponents;  // Monomial only
  bool imag = false;           // Monomial only: phase i
  std::string text;

  static BasisLabel z();
  static BasisLabel cartan(int simple_index, const std::string& root_name);
  static BasisLabel root_x(int root_id, const std::string& root_name);
  static BasisLabel root_y(int root_id, const std::string& root_name);
  static BasisLabel monomial(const std::vector<int>& exps, bool imag);
  static BasisLabel generic(const std::string& name);

  static BasisLabel parse(const std::string& text);

  bool operator==(const BasisLabel& o) const { return text == o.text; }
};

void check_labels_distinct(const std::vector<BasisLabel>& labels);

}  // namespace ricciforge

#endif
