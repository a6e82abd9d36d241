#pragma once

// Random builders shared by the test binaries.  Kept independent of the
// library's own family generator so the two never validate each other.

#include <map>
#include <utility>
#include <vector>

#include "galdist/rng.hpp"
#include "galdist/segments.hpp"

namespace galdist::testing {

// Random universe assembled from orbits of the four possible shapes under a
// pair of commuting involutions.
inline LabelUniverse random_universe(Rng& rng, int label_target,
                                     int max_degree, int max_len) {
  std::vector<int> degrees;
  std::vector<LabelId> sig, dua;
  while (static_cast<int>(degrees.size()) < label_target) {
    int room = label_target - static_cast<int>(degrees.size());
    int kind = rng.range(0, room >= 4 ? 4 : (room >= 2 ? 3 : 0));
    int a = static_cast<int>(degrees.size());
    int deg = rng.range(1, max_degree);
    auto add = [&](int count) {
      for (int k = 0; k < count; ++k) {
        degrees.push_back(deg);
        sig.push_back(0);
        dua.push_back(0);
      }
    };
    switch (kind) {
      case 0:  // fixed by both
        add(1);
        sig[a] = a;
        dua[a] = a;
        break;
      case 1:  // sigma swaps, dual fixes
        add(2);
        sig[a] = a + 1;
        sig[a + 1] = a;
        dua[a] = a;
        dua[a + 1] = a + 1;
        break;
      case 2:  // dual swaps, sigma fixes
        add(2);
        sig[a] = a;
        sig[a + 1] = a + 1;
        dua[a] = a + 1;
        dua[a + 1] = a;
        break;
      case 3:  // both swap the same pair
        add(2);
        sig[a] = a + 1;
        sig[a + 1] = a;
        dua[a] = a + 1;
        dua[a + 1] = a;
        break;
      default:  // free orbit of size four
        add(4);
        sig[a] = a + 1;
        sig[a + 1] = a;
        sig[a + 2] = a + 3;
        sig[a + 3] = a + 2;
        dua[a] = a + 2;
        dua[a + 1] = a + 3;
        dua[a + 2] = a;
        dua[a + 3] = a + 1;
        break;
    }
  }
  std::map<std::pair<LabelId, int>, DistFlags> table;
  for (LabelId b = 0; b < label_target; ++b) {
    if (dua[sig[b]] != b) continue;
    for (int l = 1; l <= max_len; ++l) {
      if (rng.chance(1, 2)) continue;
      DistFlags flags;
      if (rng.chance(1, 2))
        flags.distinguished = true;
      else
        flags.eta_distinguished = true;
      table[{b, l}] = flags;
    }
  }
  return LabelUniverse(degrees, sig, dua, table);
}

inline Segment random_segment(Rng& rng, const LabelUniverse& u, int max_len) {
  int b = rng.range(0, u.label_count() - 1);
  int l = rng.range(1, max_len);
  Rational c = Rational(1 - l, 2) + rng.range(-2, 2);
  return Segment(b, c, l);
}

}  // namespace galdist::testing
