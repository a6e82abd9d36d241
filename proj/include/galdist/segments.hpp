#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "galdist/rational.hpp"
#include "galdist/root_data.hpp"

namespace galdist {

using LabelId = int;

struct DistFlags {
  bool distinguished = false;
  bool eta_distinguished = false;

  friend bool operator==(const DistFlags& x, const DistFlags& y) {
    return x.distinguished == y.distinguished &&
           x.eta_distinguished == y.eta_distinguished;
  }
};

// The cuspidal data all segments refer to: finitely many labels 0..L-1, a
// degree per label, two commuting involutions on labels (Galois twist and
// contragredient), and an externally supplied table saying which centered
// self-dual segments are distinguished.  The table is input data, not
// something this library decides.
class LabelUniverse {
 public:
  LabelUniverse(std::vector<int> degrees, std::vector<LabelId> sigma_map,
                std::vector<LabelId> dual_map,
                std::map<std::pair<LabelId, int>, DistFlags> dist_table);

  int label_count() const { return static_cast<int>(degrees_.size()); }
  int degree(LabelId b) const;
  LabelId sigma(LabelId b) const;
  LabelId dual(LabelId b) const;

  // dual(sigma(b)) == b: the label supports Galois-autodual segments.
  bool label_autodual(LabelId b) const;

  // Both flags false when (b, length) is absent from the table.
  DistFlags dist_flags(LabelId b, int length) const;

  const std::vector<int>& degrees() const { return degrees_; }
  const std::vector<LabelId>& sigma_map() const { return sigma_; }
  const std::vector<LabelId>& dual_map() const { return dual_; }
  const std::map<std::pair<LabelId, int>, DistFlags>& dist_table() const {
    return dist_table_;
  }

  friend bool operator==(const LabelUniverse& x, const LabelUniverse& y) {
    return x.degrees_ == y.degrees_ && x.sigma_ == y.sigma_ &&
           x.dual_ == y.dual_ && x.dist_table_ == y.dist_table_;
  }
  friend bool operator!=(const LabelUniverse& x, const LabelUniverse& y) {
    return !(x == y);
  }

 private:
  std::vector<int> degrees_;
  std::vector<LabelId> sigma_, dual_;
  std::map<std::pair<LabelId, int>, DistFlags> dist_table_;
};

// The segment [ρ|·|^{c+l-1}, ..., ρ|·|^{c}]: a base label ρ, the exponent c
// of the lowest element, and the length l ≥ 1.  Twists are rational because
// centered segments of even length sit at half-integers.
struct Segment {
  LabelId base = 0;
  Rational twist;
  int length = 1;

  Segment() = default;
  Segment(LabelId base_label, Rational twist_value, int length_value)
      : base(base_label), twist(std::move(twist_value)), length(length_value) {}

  friend bool operator==(const Segment& x, const Segment& y) {
    return x.base == y.base && x.twist == y.twist && x.length == y.length;
  }
  friend bool operator!=(const Segment& x, const Segment& y) {
    return !(x == y);
  }
  // Fixed total order (base, twist, length); used for deterministic
  // tie-breaking and multiset comparisons.
  friend bool operator<(const Segment& x, const Segment& y) {
    if (x.base != y.base) return x.base < y.base;
    if (x.twist != y.twist) return x.twist < y.twist;
    return x.length < y.length;
  }
};

// l · degree(base): the size of the general linear group the segment lives on.
int matrix_size(const LabelUniverse& u, const Segment& d);

// Galois twist: the label moves, the exponents stay.
Segment sigma(const LabelUniverse& u, const Segment& d);

// Contragredient: the label moves and the exponent window reflects through
// zero, so the lowest exponent becomes -c-l+1.
Segment dual(const LabelUniverse& u, const Segment& d);

Segment dual_sigma(const LabelUniverse& u, const Segment& d);

// dual(sigma(d)) == d: autodual label and centered window 2c = 1-l.
bool galois_autodual(const LabelUniverse& u, const Segment& d);

// Same line, integer offset, contiguous union, neither nested in the other.
bool linked(const Segment& x, const Segment& y);

// x sits directly above y: same base and twist(x) = twist(y) + length(y).
bool precedes(const Segment& x, const Segment& y);

// The union segment; throws NotAdjacent unless precedes(x, y).
Segment concat(const Segment& x, const Segment& y);

// Splits d into consecutive pieces from the top, piece i of matrix size
// parts[i].  Returns nothing when some part is not a multiple of the base
// degree (the restriction vanishes).  Throws SizeMismatch unless the parts
// sum to matrix_size(d).
std::optional<std::vector<Segment>> jacquet_split(const LabelUniverse& u,
                                                  const Segment& d,
                                                  const Composition& parts);

bool is_generic(const std::vector<Segment>& family);

// Multiset invariance under dual_sigma.
bool is_galois_autodual_family(const LabelUniverse& u,
                               const std::vector<Segment>& family);

// Galois-autodual and flagged in the table.
bool is_distinguished_segment(const LabelUniverse& u, const Segment& d);
bool is_eta_distinguished_segment(const LabelUniverse& u, const Segment& d);

// Ordered, pairwise-unlinked segments over a self-contained universe.
struct GenericFamily {
  LabelUniverse universe;
  std::vector<Segment> segments;

  // Matrix sizes, in order.
  Composition composition() const;

  friend bool operator==(const GenericFamily& x, const GenericFamily& y) {
    return x.universe == y.universe && x.segments == y.segments;
  }
  friend bool operator!=(const GenericFamily& x, const GenericFamily& y) {
    return !(x == y);
  }
};

}  // namespace galdist
