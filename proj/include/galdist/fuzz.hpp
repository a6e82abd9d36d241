#pragma once

#include <cstdint>
#include <vector>

#include "galdist/family_gen.hpp"
#include "galdist/segments.hpp"

namespace galdist {

struct FuzzParams {
  long long trials = 100;
  std::uint64_t seed = 0;
  int workers = 1;
  int tables_per_family = 1;  // distinction tables tried per family
  GenParams gen;
};

// Outcome of one (family, table) evaluation.  Every field is a pure
// function of the seeds, never of timing or scheduling.
struct TrialRecord {
  std::uint64_t family_seed = 0;
  int table_index = 0;
  bool generated = true;    // false when generation hit its retry budget
  bool positive = false;    // pairing verdict on the normalized family
  bool agree = true;        // pairing verdict == witness verdict, normalized
  bool converse_ok = true;  // certificate index accepted on positive trials
  bool raw_agree = true;    // same comparison without normalizing first

  friend bool operator==(const TrialRecord& x, const TrialRecord& y) {
    return x.family_seed == y.family_seed && x.table_index == y.table_index &&
           x.generated == y.generated && x.positive == y.positive &&
           x.agree == y.agree && x.converse_ok == y.converse_ok &&
           x.raw_agree == y.raw_agree;
  }
};

struct FuzzReport {
  std::vector<TrialRecord> records;  // trial-major, then table index
  long long positives = 0;
  long long negatives = 0;
  long long disagreements = 0;
  long long converse_failures = 0;
  long long raw_disagreements = 0;
  long long generation_failures = 0;
  // Families behind records with agree or converse_ok false, in record
  // order, for replay.
  std::vector<GenericFamily> failing;
  // Families where only the un-normalized comparison came out different.
  // That comparison is an experiment about the ordering hypothesis, so these
  // are data to study rather than failures.
  std::vector<GenericFamily> raw_outliers;
  double wall_seconds = 0.0;

  bool all_passed() const {
    return disagreements == 0 && converse_failures == 0;
  }
};

// Trial i draws its family from seed + i, then evaluates tables_per_family
// distinction tables on it.  Each trial is independent, so workers only
// change the schedule: records, verdicts, and counters are identical for
// any worker count.
FuzzReport run_fuzz(const FuzzParams& params);

}  // namespace galdist
