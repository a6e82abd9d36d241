#pragma once

// JSON serialization for every type the CLI reads or writes.  Emitters and
// parsers are inverse to each other: parse(emit(x)) == x.  Parsers throw
// ParseError on anything malformed, including data that fails the target
// type's own validation.

#include <json.hpp>

#include "galdist/classifier.hpp"
#include "galdist/cosets.hpp"
#include "galdist/quad_matrix.hpp"
#include "galdist/segments.hpp"

namespace galdist {

using Json = nlohmann::json;

// "p" or "p/q", always in lowest terms.
Json emit(const Rational& x);
// {"a": "p/q", "b": "p/q"} for a + b·δ.
Json emit(const QuadScalar& x);
// Array of rows of scalar entries.
Json emit(const QuadMatrix& m);
// {"base": [n1, ..., nt], "entries": [[...], ...]}.
Json emit(const CosetIndex& s);
// {"degrees": [...], "sigma": [...], "dual": [...],
//  "dist_table": [{"label", "length", "distinguished", "eta"}, ...]}.
Json emit(const LabelUniverse& u);
// {"base": id, "twist": "p/q", "length": l}.
Json emit(const Segment& d);
// {"universe": {...}, "segments": [...]}; self-contained family files.
Json emit(const GenericFamily& f);
// {"order": [...], "r": r}.
Json emit(const PairingCertificate& c);
// {"s": {...}, "splits": [[segment or null, ...], ...]}.
Json emit(const WitnessCertificate& c);

Rational parse_rational(const Json& j);
QuadScalar parse_quad_scalar(const Json& j);
QuadMatrix parse_quad_matrix(const Json& j);
CosetIndex parse_coset_index(const Json& j);
LabelUniverse parse_label_universe(const Json& j);
Segment parse_segment(const Json& j);
GenericFamily parse_family(const Json& j);
PairingCertificate parse_pairing(const Json& j);
WitnessCertificate parse_witness(const Json& j);

}  // namespace galdist
