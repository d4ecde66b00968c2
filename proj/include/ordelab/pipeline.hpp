#pragma once

#include "ordelab/catalog.hpp"
#include "ordelab/rational.hpp"

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace ordelab {

// Cross-checks the order side of a preset against its abelian certificate.
// A recurrent order with genuine crossings forces a surjection onto the
// integers, so the only way to report "inconsistent" is certified evidence
// of such an order next to a certified non-surjection. Bounded cone probes
// only ever produce candidates, hence the conservative verdict rules:
// exploratory presets and truncated searches cap out at "undecided".
struct PipelineReport {
  enum class Verdict { consistent, inconsistent, undecided };

  Verdict verdict = Verdict::undecided;
  bool surjects = false;
  std::vector<Integer> diagonal;
  std::size_t cones_examined = 0;
  bool search_truncated = false;
  bool exploratory = false;
  bool crossing_found = false;  // exact-model crossings only
  std::vector<std::string> cone_lines;
  std::string note;
};

std::string_view to_string(PipelineReport::Verdict v);

PipelineReport pipeline_check(const CatalogEntry& preset, std::size_t radius,
                              std::size_t limit, std::size_t n_bound);

}  // namespace ordelab
