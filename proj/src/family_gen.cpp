#include "galdist/family_gen.hpp"

#include <map>
#include <utility>
#include <vector>

#include "galdist/errors.hpp"
#include "galdist/rng.hpp"

namespace galdist {

namespace {

// Labels come in orbits under the two commuting involutions; degrees are
// constant on each orbit by construction.
void add_orbit(Rng& rng, int room, int max_degree, std::vector<int>& degrees,
               std::vector<LabelId>& sig, std::vector<LabelId>& dua) {
  int kind = rng.range(0, room >= 4 ? 4 : (room >= 2 ? 3 : 0));
  int a = static_cast<int>(degrees.size());
  int deg = rng.range(1, max_degree);
  int width = kind == 0 ? 1 : (kind == 4 ? 4 : 2);
  for (int k = 0; k < width; ++k) {
    degrees.push_back(deg);
    sig.push_back(a + k);
    dua.push_back(a + k);
  }
  switch (kind) {
    case 0:  // fixed by both: the label is autodual
      break;
    case 1:  // sigma swaps, dual fixes
      sig[a] = a + 1;
      sig[a + 1] = a;
      break;
    case 2:  // dual swaps, sigma fixes
      dua[a] = a + 1;
      dua[a + 1] = a;
      break;
    case 3:  // both swap: the pair is autodual
      sig[a] = a + 1;
      sig[a + 1] = a;
      dua[a] = a + 1;
      dua[a + 1] = a;
      break;
    default:  // free orbit of four labels
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

std::map<std::pair<LabelId, int>, DistFlags> random_table(
    Rng& rng, const std::vector<LabelId>& sig, const std::vector<LabelId>& dua,
    int max_len) {
  std::map<std::pair<LabelId, int>, DistFlags> table;
  for (LabelId b = 0; b < static_cast<LabelId>(sig.size()); ++b) {
    if (dua[sig[b]] != b) continue;
    for (int l = 1; l <= max_len; ++l) {
      if (rng.chance(1, 3)) continue;
      DistFlags flags;
      if (rng.chance(3, 4))
        flags.distinguished = true;
      else
        flags.eta_distinguished = true;
      table[{b, l}] = flags;
    }
  }
  return table;
}

LabelUniverse random_universe(Rng& rng, const GenParams& params) {
  std::vector<int> degrees;
  std::vector<LabelId> sig, dua;
  while (static_cast<int>(degrees.size()) < params.universe_size)
    add_orbit(rng, params.universe_size - static_cast<int>(degrees.size()),
              params.max_degree, degrees, sig, dua);
  return LabelUniverse(degrees, sig, dua,
                       random_table(rng, sig, dua, params.max_len));
}

}  // namespace

GenericFamily generate_family(std::uint64_t seed, const GenParams& params) {
  if (params.max_t < 1 || params.max_len < 1 || params.universe_size < 1 ||
      params.max_degree < 1 || params.max_retries < 1)
    throw InvalidArgument("generation parameters must be positive");
  Rng rng(seed);
  for (int attempt = 0; attempt < params.max_retries; ++attempt) {
    LabelUniverse u = random_universe(rng, params);
    std::vector<LabelId> autodual;
    for (LabelId b = 0; b < u.label_count(); ++b)
      if (u.label_autodual(b)) autodual.push_back(b);

    int target = rng.range(1, params.max_t);
    // Without autodual labels every addition is a dual pair, so the count
    // must be even.
    if (autodual.empty()) {
      if (params.max_t < 2) continue;
      if (target % 2 != 0) target = target > 1 ? target - 1 : 2;
    }

    std::vector<Segment> segs;
    while (static_cast<int>(segs.size()) < target) {
      int room = target - static_cast<int>(segs.size());
      int l = rng.range(1, params.max_len);
      bool single = !autodual.empty() && (room == 1 || rng.chance(1, 2));
      if (single) {
        LabelId b = autodual[rng.range(0, static_cast<int>(autodual.size()) - 1)];
        segs.emplace_back(b, Rational(1 - l, 2), l);
      } else {
        LabelId b = rng.range(0, u.label_count() - 1);
        Segment d(b, Rational(1 - l, 2) + rng.range(-2, 2), l);
        segs.push_back(d);
        segs.push_back(dual_sigma(u, d));
      }
    }
    rng.shuffle(segs);
    if (!is_generic(segs)) continue;
    return GenericFamily{u, std::move(segs)};
  }
  throw GenerationFailed("no generic family within the retry budget");
}

GenericFamily reassign_dist_table(const GenericFamily& family,
                                  std::uint64_t seed) {
  Rng rng(seed);
  const LabelUniverse& u = family.universe;
  int max_len = 1;
  for (const Segment& d : family.segments)
    if (d.length > max_len) max_len = d.length;
  LabelUniverse fresh(u.degrees(), u.sigma_map(), u.dual_map(),
                      random_table(rng, u.sigma_map(), u.dual_map(), max_len));
  return GenericFamily{fresh, family.segments};
}

}  // namespace galdist
