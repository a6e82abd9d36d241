#include "galdist/json_io.hpp"

#include <map>
#include <utility>
#include <vector>

#include "galdist/errors.hpp"

namespace galdist {

namespace {

// Every parser funnels through this so schema errors and failed target
// validation surface uniformly.
template <typename F>
auto guarded(const char* what, F&& body) -> decltype(body()) {
  try {
    return body();
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

int int_field(const Json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer())
    throw ParseError(std::string("expected integer field '") + key + "'");
  return j.at(key).get<int>();
}

std::vector<int> int_array(const Json& j) {
  if (!j.is_array()) throw ParseError("expected an array of integers");
  std::vector<int> out;
  for (const Json& v : j) {
    if (!v.is_number_integer()) throw ParseError("expected an integer");
    out.push_back(v.get<int>());
  }
  return out;
}

Rational rational_value(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return rational_from_string(j.get<std::string>());
  throw ParseError("expected a rational as \"p/q\" or an integer");
}

}  // namespace

Json emit(const Rational& x) { return rational_to_string(x); }

Json emit(const QuadScalar& x) {
  return Json{{"a", rational_to_string(x.a)}, {"b", rational_to_string(x.b)}};
}

Json emit(const QuadMatrix& m) {
  Json rows = Json::array();
  for (int i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (int j = 0; j < m.cols(); ++j) row.push_back(emit(m.at(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Json emit(const CosetIndex& s) {
  Json base = Json::array();
  for (int i = 1; i <= s.t(); ++i) base.push_back(s.base().part(i));
  return Json{{"base", std::move(base)}, {"entries", s.entries()}};
}

Json emit(const LabelUniverse& u) {
  Json table = Json::array();
  for (const auto& [key, flags] : u.dist_table())
    table.push_back(Json{{"label", key.first},
                         {"length", key.second},
                         {"distinguished", flags.distinguished},
                         {"eta", flags.eta_distinguished}});
  return Json{{"degrees", u.degrees()},
              {"sigma", u.sigma_map()},
              {"dual", u.dual_map()},
              {"dist_table", std::move(table)}};
}

Json emit(const Segment& d) {
  return Json{{"base", d.base},
              {"twist", rational_to_string(d.twist)},
              {"length", d.length}};
}

Json emit(const GenericFamily& f) {
  Json segments = Json::array();
  for (const Segment& d : f.segments) segments.push_back(emit(d));
  return Json{{"universe", emit(f.universe)},
              {"segments", std::move(segments)}};
}

Json emit(const PairingCertificate& c) {
  return Json{{"order", c.order}, {"r", c.r}};
}

Json emit(const WitnessCertificate& c) {
  Json splits = Json::array();
  for (const auto& row : c.splits) {
    Json out_row = Json::array();
    for (const auto& piece : row)
      out_row.push_back(piece ? emit(*piece) : Json(nullptr));
    splits.push_back(std::move(out_row));
  }
  return Json{{"s", emit(c.s)}, {"splits", std::move(splits)}};
}

Rational parse_rational(const Json& j) {
  return guarded("rational", [&] { return rational_value(j); });
}

QuadScalar parse_quad_scalar(const Json& j) {
  return guarded("scalar", [&] {
    if (!j.is_object() || !j.contains("a") || !j.contains("b"))
      throw ParseError("expected {\"a\": ..., \"b\": ...}");
    return QuadScalar(rational_value(j.at("a")), rational_value(j.at("b")));
  });
}

QuadMatrix parse_quad_matrix(const Json& j) {
  return guarded("matrix", [&] {
    if (!j.is_array() || j.empty())
      throw ParseError("expected a non-empty array of rows");
    int rows = static_cast<int>(j.size());
    int cols = -1;
    for (const Json& row : j) {
      if (!row.is_array() || row.empty())
        throw ParseError("expected non-empty rows");
      if (cols < 0) cols = static_cast<int>(row.size());
      if (static_cast<int>(row.size()) != cols)
        throw ParseError("rows must have equal length");
    }
    QuadMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int k = 0; k < cols; ++k)
        m.at(i, k) = parse_quad_scalar(j.at(i).at(k));
    return m;
  });
}

CosetIndex parse_coset_index(const Json& j) {
  return guarded("coset index", [&] {
    if (!j.is_object() || !j.contains("base") || !j.contains("entries"))
      throw ParseError("expected {\"base\": ..., \"entries\": ...}");
    Composition base(int_array(j.at("base")));
    if (!j.at("entries").is_array())
      throw ParseError("entries must be an array of rows");
    std::vector<std::vector<int>> entries;
    for (const Json& row : j.at("entries")) entries.push_back(int_array(row));
    return CosetIndex(std::move(base), std::move(entries));
  });
}

LabelUniverse parse_label_universe(const Json& j) {
  return guarded("label universe", [&] {
    if (!j.is_object() || !j.contains("degrees") || !j.contains("sigma") ||
        !j.contains("dual"))
      throw ParseError("expected degrees, sigma, and dual arrays");
    std::map<std::pair<LabelId, int>, DistFlags> table;
    if (j.contains("dist_table")) {
      if (!j.at("dist_table").is_array())
        throw ParseError("dist_table must be an array");
      for (const Json& entry : j.at("dist_table")) {
        DistFlags flags;
        if (entry.contains("distinguished"))
          flags.distinguished = entry.at("distinguished").get<bool>();
        if (entry.contains("eta"))
          flags.eta_distinguished = entry.at("eta").get<bool>();
        auto key = std::make_pair(int_field(entry, "label"),
                                  int_field(entry, "length"));
        if (table.count(key)) throw ParseError("duplicate dist_table entry");
        table[key] = flags;
      }
    }
    return LabelUniverse(int_array(j.at("degrees")), int_array(j.at("sigma")),
                         int_array(j.at("dual")), std::move(table));
  });
}

Segment parse_segment(const Json& j) {
  return guarded("segment", [&] {
    if (!j.is_object() || !j.contains("twist"))
      throw ParseError("expected {\"base\", \"twist\", \"length\"}");
    Segment d(int_field(j, "base"), rational_value(j.at("twist")),
              int_field(j, "length"));
    if (d.base < 0) throw ParseError("segment label must be nonnegative");
    if (d.length < 1) throw ParseError("segment length must be positive");
    return d;
  });
}

GenericFamily parse_family(const Json& j) {
  return guarded("family", [&] {
    if (!j.is_object() || !j.contains("universe") || !j.contains("segments"))
      throw ParseError("expected {\"universe\": ..., \"segments\": ...}");
    GenericFamily f{parse_label_universe(j.at("universe")), {}};
    if (!j.at("segments").is_array())
      throw ParseError("segments must be an array");
    for (const Json& d : j.at("segments")) {
      Segment seg = parse_segment(d);
      if (seg.base >= f.universe.label_count())
        throw ParseError("segment label outside the universe");
      // Surface bad lengths against the universe immediately.
      matrix_size(f.universe, seg);
      f.segments.push_back(seg);
    }
    return f;
  });
}

PairingCertificate parse_pairing(const Json& j) {
  return guarded("pairing certificate", [&] {
    if (!j.is_object() || !j.contains("order"))
      throw ParseError("expected {\"order\": ..., \"r\": ...}");
    PairingCertificate c;
    c.order = int_array(j.at("order"));
    c.r = int_field(j, "r");
    return c;
  });
}

WitnessCertificate parse_witness(const Json& j) {
  return guarded("witness certificate", [&] {
    if (!j.is_object() || !j.contains("s") || !j.contains("splits"))
      throw ParseError("expected {\"s\": ..., \"splits\": ...}");
    CosetIndex s = parse_coset_index(j.at("s"));
    std::vector<std::vector<std::optional<Segment>>> splits;
    if (!j.at("splits").is_array())
      throw ParseError("splits must be an array of rows");
    for (const Json& row : j.at("splits")) {
      if (!row.is_array()) throw ParseError("splits rows must be arrays");
      std::vector<std::optional<Segment>> out_row;
      for (const Json& piece : row) {
        if (piece.is_null())
          out_row.emplace_back();
        else
          out_row.emplace_back(parse_segment(piece));
      }
      splits.push_back(std::move(out_row));
    }
    return WitnessCertificate{std::move(s), std::move(splits)};
  });
}

}  // namespace galdist
