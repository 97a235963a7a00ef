#pragma once

// Backtracking enumeration of structure-preserving maps between finite
// partial magmas (groups, groupoids). Every assignment f(a) = x is closed
// under the source operation: whenever a*b is defined and both sides are
// assigned, f(a*b) is forced to f(a)*f(b). Branching happens only on the
// lowest unassigned element, over its candidate list.

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace fingpd {

struct HomSearch {
  std::string what = "homomorphism search";
  std::size_t source_size = 0;
  // Sorted admissible images for each source element.
  std::vector<std::vector<std::uint32_t>> candidates;
  // a * b in the source, kNone when undefined.
  std::function<std::uint32_t(std::uint32_t, std::uint32_t)> source_op;
  // x * y in the target, kNone when undefined.
  std::function<std::uint32_t(std::uint32_t, std::uint32_t)> target_op;
  // Elements b for which a * b may be defined, and for which b * a may be.
  std::function<std::span<const std::uint32_t>(std::uint32_t)> right_partners;
  std::function<std::span<const std::uint32_t>(std::uint32_t)> left_partners;
};

// All solutions in lexicographic order. Throws CapExceeded when more than
// cap branch nodes would be visited.
std::vector<std::vector<std::uint32_t>> enumerate_homs(const HomSearch& s,
                                                       std::uint64_t    cap);

}  // namespace fingpd
