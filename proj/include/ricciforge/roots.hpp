#ifndef RICCIFORGE_ROOTS_HPP
#define RICCIFORGE_ROOTS_HPP

#include <string>
#include <vector>

namespace ricciforge {

enum class RootFamily { A, B, C, D };

char family_letter(RootFamily f);
RootFamily family_from_letter(char c);

/// Root bookkeeping for one classical family: positive roots as integer
/// vectors in the e_i coordinates, plus the positions of the simple ones.
struct RootDatum {
  RootFamily family = RootFamily::A;
  int rank = 0;
  std::vector<std::vector<int>> positive_roots;
  std::vector<int> simple_indices;  // indices into positive_roots

  int expected_positive_count() const;
  /// Validates counts and that each positive root is a nonnegative integer
  /// combination of the simple ones; throws on violation.
  void validate() const;
};

/// "e1-e2", "e1+e2", "2e1", "e3" style name of a root vector.
std::string root_name(const std::vector<int>& root);

}  // namespace ricciforge

#endif
