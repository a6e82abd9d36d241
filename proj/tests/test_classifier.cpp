#include "doctest.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include "galdist/classifier.hpp"
#include "galdist/errors.hpp"
#include "galdist/rng.hpp"
#include "support.hpp"

using namespace galdist;
using galdist::testing::random_universe;

namespace {

Rational rat(int num, int den = 1) { return Rational(num, den); }

// Oracle for the pairing verdict: try every ordering and every pairing
// radius directly.  Exponential, fine for t <= 6.
bool pairing_exists_oracle(const LabelUniverse& u,
                           const std::vector<Segment>& segs) {
  int t = static_cast<int>(segs.size());
  std::vector<int> idx(t);
  std::iota(idx.begin(), idx.end(), 0);
  do {
    for (int r = 0; 2 * r <= t; ++r) {
      bool ok = true;
      for (int k = 0; k < r && ok; ++k)
        if (dual_sigma(u, segs[idx[2 * k]]) != segs[idx[2 * k + 1]]) ok = false;
      for (int p = 2 * r; p < t && ok; ++p)
        if (!is_distinguished_segment(u, segs[idx[p]])) ok = false;
      if (ok) return true;
    }
  } while (std::next_permutation(idx.begin(), idx.end()));
  return false;
}

// Oracle for the normal form: checks the layout directly instead of
// rebuilding it.  Within each run of equal matrix sizes there must be a
// split point with alternating dual pairs before it (runs of one class
// contiguous, keyed ascending by the smaller member) and autodual segments
// in non-decreasing order after it.
bool is_normal_form(const LabelUniverse& u, const std::vector<Segment>& segs) {
  int t = static_cast<int>(segs.size());
  for (int i = 0; i + 1 < t; ++i)
    if (matrix_size(u, segs[i]) > matrix_size(u, segs[i + 1])) return false;
  int i = 0;
  while (i < t) {
    int j = i;
    while (j < t && matrix_size(u, segs[j]) == matrix_size(u, segs[i])) ++j;
    // Alternating dual pairs first.
    int p = i;
    std::vector<Segment> reps;
    while (p + 1 < j && dual_sigma(u, segs[p]) != segs[p] &&
           segs[p + 1] == dual_sigma(u, segs[p])) {
      if (segs[p + 1] < segs[p]) return false;  // smaller member leads
      reps.push_back(segs[p]);
      p += 2;
    }
    // Non-decreasing keys keep runs of one class contiguous.
    for (std::size_t k = 0; k + 1 < reps.size(); ++k)
      if (reps[k + 1] < reps[k]) return false;
    // Remaining segments of this size must be autodual, sorted.
    for (int q = p; q < j; ++q) {
      if (dual_sigma(u, segs[q]) != segs[q]) return false;
      if (q + 1 < j && segs[q + 1] < segs[q]) return false;
    }
    i = j;
  }
  return true;
}

// One autodual label of degree 1; centered length-1 segments carry the
// distinguished flag.
LabelUniverse dist_label() {
  return LabelUniverse({1}, {0}, {0}, {{{0, 1}, DistFlags{true, false}}});
}

// Same shape but with no table entries at all.
LabelUniverse plain_label() { return LabelUniverse({1}, {0}, {0}, {}); }

GenericFamily random_closed_family(Rng& rng, bool need_generic) {
  for (int attempt = 0; attempt < 400; ++attempt) {
    LabelUniverse u = random_universe(rng, rng.range(1, 5), 2, 3);
    int target = rng.range(1, 5);
    std::vector<Segment> segs;
    bool stuck = false;
    while (static_cast<int>(segs.size()) < target && !stuck) {
      int room = target - static_cast<int>(segs.size());
      int b = rng.range(0, u.label_count() - 1);
      int l = rng.range(1, 3);
      if (u.label_autodual(b) && rng.chance(1, 2)) {
        segs.emplace_back(b, Rational(1 - l, 2), l);
      } else if (room >= 2) {
        Segment d(b, Rational(1 - l, 2) + rng.range(-2, 2), l);
        segs.push_back(d);
        segs.push_back(dual_sigma(u, d));
      } else {
        stuck = true;
      }
    }
    if (stuck) continue;
    // Keep exhaustive index scans in the tests affordable.
    int total = 0;
    for (const Segment& d : segs) total += matrix_size(u, d);
    if (total > 12) continue;
    rng.shuffle(segs);
    if (need_generic && !is_generic(segs)) continue;
    return GenericFamily{u, segs};
  }
  throw std::runtime_error("no family after bounded attempts");
}

}  // namespace

TEST_CASE("pairing certificates validate against their family") {
  LabelUniverse u = plain_label();
  // (0,1,1) and its dual-sigma image (0,-1,1).
  GenericFamily f{u, {Segment(0, rat(1), 1), Segment(0, rat(-1), 1)}};
  CHECK(validate_pairing(f, PairingCertificate{{1, 2}, 1}));
  CHECK(validate_pairing(f, PairingCertificate{{2, 1}, 1}));
  // r = 0 leaves two undistinguished singletons.
  CHECK_FALSE(validate_pairing(f, PairingCertificate{{1, 2}, 0}));
  // Malformed orders and radii never validate.
  CHECK_FALSE(validate_pairing(f, PairingCertificate{{1, 1}, 1}));
  CHECK_FALSE(validate_pairing(f, PairingCertificate{{1}, 0}));
  CHECK_FALSE(validate_pairing(f, PairingCertificate{{1, 2}, 2}));
  CHECK_FALSE(validate_pairing(f, PairingCertificate{{0, 1}, 1}));

  LabelUniverse v = dist_label();
  GenericFamily g{v, {Segment(0, rat(0), 1)}};
  CHECK(validate_pairing(g, PairingCertificate{{1}, 0}));
}

TEST_CASE("pairing search on pinned examples") {
  LabelUniverse u = plain_label();

  // A dual pair with no distinguished member pairs off at r = 1.
  GenericFamily pair{u, {Segment(0, rat(1), 1), Segment(0, rat(-1), 1)}};
  auto cert = find_pairing_form(pair);
  REQUIRE(cert.has_value());
  CHECK(cert->r == 1);
  CHECK(cert->order == std::vector<int>{1, 2});
  CHECK(validate_pairing(pair, *cert));

  // A single autodual segment without the distinguished flag has no form.
  GenericFamily lone{u, {Segment(0, rat(0), 1)}};
  CHECK_FALSE(find_pairing_form(lone).has_value());

  // With the flag the singleton stands alone at r = 0.
  LabelUniverse v = dist_label();
  GenericFamily flagged{v, {Segment(0, rat(0), 1)}};
  auto single = find_pairing_form(flagged);
  REQUIRE(single.has_value());
  CHECK(*single == PairingCertificate{{1}, 0});

  // Mixed family: the pair leads the order, the singleton trails.
  GenericFamily mixed{v,
                      {Segment(0, rat(0), 1), Segment(0, rat(1), 1),
                       Segment(0, rat(-1), 1)}};
  auto m = find_pairing_form(mixed);
  REQUIRE(m.has_value());
  CHECK(m->r == 1);
  CHECK(m->order == std::vector<int>{2, 3, 1});
  CHECK(validate_pairing(mixed, *m));

  // Two copies of one autodual undistinguished class still pair up.
  GenericFamily doubled{u, {Segment(0, rat(0), 1), Segment(0, rat(0), 1)}};
  auto d = find_pairing_form(doubled);
  REQUIRE(d.has_value());
  CHECK(d->r == 1);

  // An odd third copy breaks it again.
  GenericFamily tripled{
      u, {Segment(0, rat(0), 1), Segment(0, rat(0), 1), Segment(0, rat(0), 1)}};
  CHECK_FALSE(find_pairing_form(tripled).has_value());

  // The empty family is trivially paired.
  GenericFamily empty{u, {}};
  auto e = find_pairing_form(empty);
  REQUIRE(e.has_value());
  CHECK(*e == PairingCertificate{{}, 0});
}

TEST_CASE("pairing search agrees with the exhaustive oracle") {
  Rng rng(4001);
  for (int trial = 0; trial < 3000; ++trial) {
    GenericFamily f = random_closed_family(rng, false);
    bool expected = pairing_exists_oracle(f.universe, f.segments);
    auto cert = find_pairing_form(f);
    CHECK(cert.has_value() == expected);
    if (cert) CHECK(validate_pairing(f, *cert));
  }
}

TEST_CASE("normal form on pinned examples") {
  LabelUniverse u = plain_label();
  Segment a(0, rat(1), 1), ad(0, rat(-1), 1);  // dual pair, ad < a

  GenericFamily f{u, {a, a, ad, ad}};
  GenericFamily n = normalize_order(f);
  CHECK(n.segments == std::vector<Segment>{ad, a, ad, a});

  // Sizes ascend before anything else.
  GenericFamily g{u,
                  {Segment(0, rat(0), 2), Segment(0, rat(0), 1),
                   Segment(0, rat(-1), 2)}};
  GenericFamily gn = normalize_order(g);
  CHECK(gn.segments == std::vector<Segment>{Segment(0, rat(0), 1),
                                            Segment(0, rat(-1), 2),
                                            Segment(0, rat(0), 2)});

  // Within one size, dual pairs come before autodual segments.
  GenericFamily h{u, {Segment(0, rat(0), 1), a, ad}};
  GenericFamily hn = normalize_order(h);
  CHECK(hn.segments ==
        std::vector<Segment>{ad, a, Segment(0, rat(0), 1)});

  // Distinct pair classes are keyed by their smaller member.
  Segment b(0, rat(2), 1), bd(0, rat(-2), 1);
  GenericFamily k{u, {b, a, bd, ad}};
  GenericFamily kn = normalize_order(k);
  CHECK(kn.segments == std::vector<Segment>{bd, b, ad, a});

  CHECK_THROWS_AS(normalize_order(GenericFamily{u, {a}}), NotAutodualFamily);
  CHECK_THROWS_AS(normalize_order(GenericFamily{u, {a, a, ad}}),
                  NotAutodualFamily);
}

TEST_CASE("normal form properties") {
  Rng rng(4002);
  for (int trial = 0; trial < 2000; ++trial) {
    GenericFamily f = random_closed_family(rng, false);
    GenericFamily n = normalize_order(f);

    CHECK(is_normal_form(n.universe, n.segments));

    // Same multiset of segments.
    std::vector<Segment> lhs = f.segments, rhs = n.segments;
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    CHECK(lhs == rhs);

    // Idempotent, and invariant under shuffling the input.
    CHECK(normalize_order(n) == n);
    GenericFamily shuffled = f;
    rng.shuffle(shuffled.segments);
    CHECK(normalize_order(shuffled) == n);
  }
}

TEST_CASE("witness checking on pinned examples") {
  LabelUniverse v = dist_label();

  // Singleton distinguished segment: the 1x1 identity index works.
  GenericFamily g{v, {Segment(0, rat(0), 1)}};
  CosetIndex one(Composition({1}), {{1}});
  auto w = check_witness(g, one);
  REQUIRE(w.has_value());
  REQUIRE(w->splits[0][0].has_value());
  CHECK(*w->splits[0][0] == Segment(0, rat(0), 1));

  // Without the flag the same index is rejected.
  LabelUniverse u = plain_label();
  GenericFamily lone{u, {Segment(0, rat(0), 1)}};
  CHECK_FALSE(check_witness(lone, one).has_value());

  // Dual pair of size-1 segments: the antidiagonal index matches them.
  GenericFamily pair{u, {Segment(0, rat(1), 1), Segment(0, rat(-1), 1)}};
  CosetIndex anti(Composition({1, 1}), {{0, 1}, {1, 0}});
  CosetIndex diag(Composition({1, 1}), {{1, 0}, {0, 1}});
  CHECK(check_witness(pair, anti).has_value());
  CHECK_FALSE(check_witness(pair, diag).has_value());

  // Base mismatch is a contract violation, not a negative verdict.
  CHECK_THROWS_AS(check_witness(pair, one), PreconditionViolated);
}

TEST_CASE("witness splits follow rows in column order") {
  LabelUniverse v = dist_label();
  // Both segments split into a distinguished diagonal piece and one half of
  // a dual pair; (0,-1,2) and (0,0,2) are dual-sigma images of each other.
  GenericFamily f{v, {Segment(0, rat(-1), 2), Segment(0, rat(0), 2)}};
  CosetIndex s(Composition({2, 2}), {{1, 1}, {1, 1}});
  auto w = check_witness(f, s);
  REQUIRE(w.has_value());
  REQUIRE(w->splits[0][0].has_value());
  REQUIRE(w->splits[0][1].has_value());
  REQUIRE(w->splits[1][0].has_value());
  REQUIRE(w->splits[1][1].has_value());
  CHECK(*w->splits[0][0] == Segment(0, rat(0), 1));
  CHECK(*w->splits[0][1] == Segment(0, rat(-1), 1));
  CHECK(*w->splits[1][0] == Segment(0, rat(1), 1));
  CHECK(*w->splits[1][1] == Segment(0, rat(0), 1));

  // The first index in enumeration order is the antidiagonal one, accepted
  // because the whole segments are dual to each other.
  auto found = exists_witness(f);
  REQUIRE(found.has_value());
  CHECK(found->first == CosetIndex(Composition({2, 2}), {{0, 2}, {2, 0}}));

  // A split whose diagonal piece is undistinguished is rejected.
  LabelUniverse u = plain_label();
  GenericFamily bare{u, {Segment(0, rat(-1), 2), Segment(0, rat(0), 2)}};
  CHECK_FALSE(check_witness(bare, s).has_value());

  // Indivisible rows reject before any condition is checked.
  LabelUniverse two({2}, {0}, {0}, {});
  GenericFamily even{two, {Segment(0, rat(1), 1), Segment(0, rat(-1), 1)}};
  CosetIndex odd_cut(Composition({2, 2}), {{1, 1}, {1, 1}});
  CHECK_FALSE(check_witness(even, odd_cut).has_value());
}

TEST_CASE("witness search scans indices in enumeration order") {
  LabelUniverse u = plain_label();
  GenericFamily pair{u, {Segment(0, rat(1), 1), Segment(0, rat(-1), 1)}};
  auto found = exists_witness(pair);
  REQUIRE(found.has_value());
  CHECK(found->first == CosetIndex(Composition({1, 1}), {{0, 1}, {1, 0}}));
  CHECK(check_witness(pair, found->first).has_value());

  GenericFamily lone{u, {Segment(0, rat(0), 1)}};
  CHECK_FALSE(exists_witness(lone).has_value());

  // No index earlier in enumeration order is ever accepted.
  Rng rng(4003);
  for (int trial = 0; trial < 200; ++trial) {
    GenericFamily f = random_closed_family(rng, false);
    auto hit = exists_witness(f);
    bool before = true;
    bool scanned_all = for_each_coset_index(
        f.composition(), [&](const CosetIndex& s) {
          if (hit && s == hit->first) {
            before = false;
            return true;
          }
          if (before) CHECK_FALSE(check_witness(f, s).has_value());
          return true;
        });
    CHECK(scanned_all);
    if (hit) CHECK_FALSE(before);  // the hit really occurs in the scan
  }
}

TEST_CASE("certificates convert to accepted indices") {
  LabelUniverse v = dist_label();
  GenericFamily mixed{v,
                      {Segment(0, rat(0), 1), Segment(0, rat(1), 1),
                       Segment(0, rat(-1), 1)}};
  auto cert = find_pairing_form(mixed);
  REQUIRE(cert.has_value());
  CosetIndex s = certificate_to_coset(mixed, *cert);
  CHECK(s == CosetIndex(Composition({1, 1, 1}),
                        {{1, 0, 0}, {0, 0, 1}, {0, 1, 0}}));
  CHECK(check_witness(mixed, s).has_value());

  // Paired positions of unequal size cannot fill one square block.
  LabelUniverse u = plain_label();
  GenericFamily bad{u, {Segment(0, rat(5), 1), Segment(0, rat(-2), 2)}};
  CHECK_THROWS_AS(certificate_to_coset(bad, PairingCertificate{{1, 2}, 1}),
                  InvalidArgument);

  Rng rng(4004);
  for (int trial = 0; trial < 500; ++trial) {
    GenericFamily f = random_closed_family(rng, false);
    auto c = find_pairing_form(f);
    if (!c) continue;
    CosetIndex idx = certificate_to_coset(f, *c);
    CHECK(check_witness(f, idx).has_value());
  }
}

TEST_CASE("decision routes agree on generic closed families") {
  LabelUniverse u = plain_label();

  // Unlinked dual pair: both routes positive.
  GenericFamily good{u, {Segment(0, rat(5), 2), Segment(0, rat(-6), 2)}};
  CHECK(theorem_equivalence(good));
  CHECK(find_pairing_form(good).has_value());

  // Autodual undistinguished singleton: both routes negative.
  GenericFamily lone{u, {Segment(0, rat(0), 1)}};
  CHECK(theorem_equivalence(lone));
  CHECK_FALSE(find_pairing_form(lone).has_value());

  // Linked families are out of contract.
  GenericFamily linked_pair{
      u, {Segment(0, rat(-1), 2), Segment(0, rat(0), 2)}};
  CHECK_THROWS_AS(theorem_equivalence(linked_pair), PreconditionViolated);
  // So are families not closed under dual-sigma.
  GenericFamily open{u, {Segment(0, rat(1), 1)}};
  CHECK_THROWS_AS(theorem_equivalence(open), PreconditionViolated);

  Rng rng(4005);
  int positives = 0, negatives = 0;
  for (int trial = 0; trial < 400; ++trial) {
    GenericFamily f = random_closed_family(rng, true);
    CHECK(theorem_equivalence(f));
    if (find_pairing_form(f)) ++positives; else ++negatives;
  }
  CHECK(positives > 0);
  CHECK(negatives > 0);
}

TEST_CASE("witnesses force the pairing verdict") {
  // One direction of the equivalence, checked without normalizing: any
  // accepted witness implies the counting criterion holds.
  Rng rng(4006);
  for (int trial = 0; trial < 300; ++trial) {
    GenericFamily f = random_closed_family(rng, false);
    if (exists_witness(f).has_value())
      CHECK(find_pairing_form(f).has_value());
  }
}
