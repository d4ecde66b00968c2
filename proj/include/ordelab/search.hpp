#pragma once

#include <cstdint>
#include <vector>

#include "ordelab/cone.hpp"

namespace ordelab {

inline constexpr std::size_t kDefaultSearchLimit = 10000;

struct SearchConstraints {
  // Signs fixed before the search starts; inverse partners follow suit.
  std::vector<std::pair<std::size_t, Sign>> forced;
};

struct SearchOutcome {
  std::vector<SignAssignment> assignments;
  std::uint64_t nodes = 0;  // branch entries; independent of the job count
  bool hit_limit = false;
};

// Depth-first enumeration of every relative cone on the ball, deterministic
// in index order: branch on the first undecided element, signs tried +1,
// then -1, then *.  Inverse pairs are assigned atomically and forced
// products are propagated before descending; surviving leaves still run the
// full cone check.  jobs > 1 splits the root element's three branches
// across threads and merges them in branch order, so output and node
// counts match the sequential run.
SearchOutcome search_cones(const Ball& ball, const SearchConstraints& constraints = {},
                           std::size_t limit = kDefaultSearchLimit, unsigned jobs = 1);

}  // namespace ordelab
