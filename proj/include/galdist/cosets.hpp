#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "galdist/quad_matrix.hpp"
#include "galdist/root_data.hpp"

namespace galdist {

// Symmetric t×t matrix of nonnegative integers whose i-th row sums to the
// i-th part of the base composition.  These matrices index the double cosets
// of the standard parabolic (over the extension) against the rational points
// of GL(n); everything downstream of this header is keyed on them.
class CosetIndex {
 public:
  CosetIndex(Composition base, std::vector<std::vector<int>> entries);

  int t() const { return base_.size(); }
  const Composition& base() const { return base_; }

  // 1-based block access.
  int entry(int i, int j) const;
  const std::vector<std::vector<int>>& entries() const { return entries_; }

  bool is_diagonal() const;

  friend bool operator==(const CosetIndex& x, const CosetIndex& y) {
    return x.base_ == y.base_ && x.entries_ == y.entries_;
  }
  friend bool operator!=(const CosetIndex& x, const CosetIndex& y) {
    return !(x == y);
  }

 private:
  Composition base_;
  std::vector<std::vector<int>> entries_;
};

// Visits every index matrix for the base composition in ascending
// lexicographic order of the upper triangle read row by row.  The visitor
// returns false to stop early; the function reports whether the walk ran to
// completion.
bool for_each_coset_index(const Composition& base,
                          const std::function<bool(const CosetIndex&)>& visit);

std::vector<CosetIndex> enumerate_I(const Composition& base);

// The coordinate intervals I(i,j): consecutive runs of sizes n(i,j) laid out
// in row-major block order, empty blocks skipped.  Interval (i,j) refines
// part i of the base composition, and the k-th coordinates of I(i,j) and
// I(j,i) are exchanged by the coset involution.
class IntervalLayout {
 public:
  explicit IntervalLayout(const CosetIndex& s);

  int size(int i, int j) const;
  // First coordinate of the interval, 1-based; only meaningful when
  // size(i, j) > 0.
  int first(int i, int j) const;
  // Block owning coordinate k.
  std::pair<int, int> block_of(int k) const;

 private:
  int t_;
  std::vector<std::vector<int>> first_, size_;
};

// Coset representative u: identity on each diagonal interval, and the block
// [[1, -δ], [1, δ]] (one copy per matched coordinate pair) across each pair
// of opposite intervals I(i,j), I(j,i) with i < j.
QuadMatrix representative(const CosetIndex& s);

// The permutation u·u^{-σ}: fixes diagonal intervals pointwise and exchanges
// opposite intervals coordinate by coordinate.
WeylPerm involution_of(const CosetIndex& s);

// Checks u·u^{-σ} == the permutation matrix of involution_of(s), with u the
// representative and σ entrywise conjugation, over the given field.
bool verify_w_equals_uu_sigma(const QuadField& field, const CosetIndex& s);

// Composition of the intersection of the Levi with its conjugate under the
// coset involution: the nonzero entries of s read row by row.  A second,
// independent route computes the common refinement of the base block
// structure with its image under the involution; disagreement throws
// InternalCheckFailed.
Composition levi_intersection(const CosetIndex& s);

// The involution preserves the root set of the refined Levi and maps the
// positive roots of the base Levi to positive roots.
bool check_admissible(const CosetIndex& s);

// For every positive root of the base Levi outside the refined one: its
// image under the involution is positive and outside the base Levi, and
// root plus image is not a root.  These two facts make the corresponding
// root subgroups commute, which is what the coset integral manipulations
// rely on.
bool check_unipotent_pairing(const CosetIndex& s);

// Nonzero blocks of s grouped by the involution: matched off-diagonal pairs
// {(i,j), (j,i)} with i < j, and fixed diagonal blocks (i,i).
struct ThetaStructure {
  std::vector<std::pair<std::pair<int, int>, std::pair<int, int>>> pairs;
  std::vector<std::pair<int, int>> fixed;

  friend bool operator==(const ThetaStructure& x, const ThetaStructure& y) {
    return x.pairs == y.pairs && x.fixed == y.fixed;
  }
};

ThetaStructure theta_structure(const CosetIndex& s);

// Modulus identity on the fixed torus of the refined Levi, computed with one
// formal variable per unordered nonzero block of s.  Verifies that the
// F-exponents of the product over positive roots outside the refined Levi
// whose image stays positive and outside match the F-exponents of the full
// product, and that coarse times relative modulus equals refined modulus at
// the exponent level.
bool verify_modulus_identity(const CosetIndex& s);

// Closed-form flag intersection dimensions: d(i,j) = sum of the entries of
// s over rows ≤ i and columns ≤ j.
std::vector<std::vector<long long>> flag_invariants(const CosetIndex& s);

// Exact linear-algebra route to the same numbers for an arbitrary invertible
// u: the flag V_i spanned by the first prefix(i) columns of u⁻¹ is
// intersected with the conjugate flag.
std::vector<std::vector<long long>> flag_dims(const QuadField& field,
                                              const QuadMatrix& u,
                                              const Composition& base);

// Recovers the index matrix from the flag dimensions of u by second
// differences.  Throws InvalidArgument if the recovered matrix is not a
// valid index (wrong row sums or asymmetric), SingularMatrix if u is not
// invertible.
CosetIndex roundtrip_s(const QuadField& field, const QuadMatrix& u,
                       const Composition& base);

}  // namespace galdist
