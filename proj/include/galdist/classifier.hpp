#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "galdist/cosets.hpp"
#include "galdist/segments.hpp"

namespace galdist {

// A reordering plus a pairing radius r: after applying `order`, positions
// 1,3,...,2r-1 each carry a segment whose dual-sigma image sits right after
// it, and every position past 2r carries a distinguished segment.
struct PairingCertificate {
  std::vector<int> order;  // permutation of {1, ..., t}, 1-based images
  int r = 0;

  friend bool operator==(const PairingCertificate& x,
                         const PairingCertificate& y) {
    return x.order == y.order && x.r == y.r;
  }
};

// True when the certificate's invariants hold against the family.
bool validate_pairing(const GenericFamily& family,
                      const PairingCertificate& certificate);

// An index matrix s together with the pieces of each segment cut along its
// row of s: splits[i-1][j-1] is set exactly when s(i,j) > 0.  Diagonal
// pieces are distinguished; opposite off-diagonal pieces are dual-sigma
// images of one another.
struct WitnessCertificate {
  CosetIndex s;
  std::vector<std::vector<std::optional<Segment>>> splits;

  friend bool operator==(const WitnessCertificate& x,
                         const WitnessCertificate& y) {
    return x.s == y.s && x.splits == y.splits;
  }
};

// Deterministic normal form of a closed family: ascending matrix size;
// within one size the non-autodual classes come first, each class paired
// with its dual-sigma partner in an alternating run C, C^{∨σ}, C, ...,
// C^{∨σ}; autodual classes follow, each repeated to multiplicity.  Ties are
// broken by the fixed (base, twist, length) order, with each run keyed by
// the smaller member of its class pair.  Throws NotAutodualFamily when the
// multiset is not closed under dual-sigma.
GenericFamily normalize_order(const GenericFamily& family);

// Searches for a pairing certificate.  Two independent routes run on every
// call: a backtracking matcher over pairs and singletons, and a counting
// criterion on isomorphism classes (dual pairs balanced; autodual classes
// without the distinguished flag even).  Disagreement between the routes
// throws InternalCheckFailed.
std::optional<PairingCertificate> find_pairing_form(const GenericFamily& family);

// Tries to split every segment along its row of s and checks the diagonal
// distinction and off-diagonal duality conditions.  Returns nothing when a
// split vanishes or a condition fails.  Throws PreconditionViolated unless
// the base composition of s matches the family's matrix sizes.
std::optional<WitnessCertificate> check_witness(const GenericFamily& family,
                                                const CosetIndex& s);

// First index matrix (in enumeration order) accepted by check_witness.
std::optional<std::pair<CosetIndex, WitnessCertificate>> exists_witness(
    const GenericFamily& family);

// The index matrix a pairing certificate promises: each pair occupies one
// off-diagonal block of its common size, each singleton its diagonal block.
CosetIndex certificate_to_coset(const GenericFamily& family,
                                const PairingCertificate& certificate);

// Whether the pairing criterion and the witness search agree on the
// normalized family.  Requires the family generic and closed under
// dual-sigma; throws PreconditionViolated otherwise.
bool theorem_equivalence(const GenericFamily& family);

}  // namespace galdist
