#pragma once

#include <cstdint>

#include "galdist/segments.hpp"

namespace galdist {

struct GenParams {
  int max_t = 6;          // segments per family
  int max_len = 4;        // lattice length of one segment
  int universe_size = 6;  // labels in the universe
  int max_degree = 2;
  int max_retries = 64;   // rejection budget for genericity
};

// Deterministic random family: same seed and params, same family, on every
// platform.  The result is always generic and closed under dual-sigma:
// non-autodual segments enter together with their dual-sigma partner,
// autodual ones enter centered.  Throws GenerationFailed when no generic
// family appears within the retry budget.
GenericFamily generate_family(std::uint64_t seed, const GenParams& params = {});

// Same labels and segments, fresh random distinction table.  Useful for
// exercising both verdicts of the decision procedure on one family shape.
GenericFamily reassign_dist_table(const GenericFamily& family,
                                  std::uint64_t seed);

}  // namespace galdist
