#pragma once

#include <optional>
#include <string>

#include "galdist/quad.hpp"

namespace galdist {

struct VerifyOptions {
  int max_n = 4;            // all compositions of every n up to this bound
  Rational d = Rational(2);  // field constant for the matrix checks
  int workers = 1;
};

struct VerifyFailure {
  std::string composition;
  std::string index;  // entries of the failing index matrix
  std::string check;  // which property failed

  friend bool operator==(const VerifyFailure& x, const VerifyFailure& y) {
    return x.composition == y.composition && x.index == y.index &&
           x.check == y.check;
  }
};

struct VerifyReport {
  long long compositions = 0;
  long long indices = 0;  // index matrices visited
  long long checks = 0;   // individual properties evaluated
  std::optional<VerifyFailure> first_failure;
  double wall_seconds = 0.0;
};

// Runs the five per-index properties (representative involution, Levi
// admissibility, unipotent pairing, modulus identity, flag roundtrip) over
// every composition of every n ≤ max_n and every index matrix.  Workers
// split the compositions; the report is independent of the worker count,
// and first_failure is the earliest failure in enumeration order.  Bounds:
// 1 ≤ max_n ≤ 8, workers ≥ 1.
VerifyReport run_verify(const VerifyOptions& options);

}  // namespace galdist
