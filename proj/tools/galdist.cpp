// galdist: enumeration, verification, classification, and randomized
// experiments for the double-coset and segment machinery in libgaldist.
//
// Exit codes: 0 success, 1 property failure, 2 input error, 3 precondition
// violation.

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include "galdist/classifier.hpp"
#include "galdist/cosets.hpp"
#include "galdist/errors.hpp"
#include "galdist/fuzz.hpp"
#include "galdist/json_io.hpp"
#include "galdist/verify.hpp"

namespace {

using namespace galdist;

constexpr int kOk = 0;
constexpr int kPropertyFailure = 1;
constexpr int kInputError = 2;
constexpr int kPrecondition = 3;

struct RunConfig {
  std::string composition;
  std::string family_file;
  std::string d = "2";
  std::string format = "table";
  std::uint64_t seed = 0;
  bool seed_given = false;
  int max_n = 4;
  long long trials = 100;
  int workers = 1;
  int tables = 1;

  bool json() const { return format == "json"; }

  QuadField field() const { return QuadField(rational_from_string(d)); }

  // --seed wins over the GALDIST_SEED environment variable.
  std::uint64_t resolved_seed() const {
    if (seed_given) return seed;
    const char* env = std::getenv("GALDIST_SEED");
    if (!env) return 0;
    std::uint64_t value = 0;
    const char* end = env + std::string(env).size();
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec != std::errc() || ptr != end)
      throw ParseError("GALDIST_SEED must be an unsigned integer");
    return value;
  }
};

std::string render_entries(const CosetIndex& s) {
  std::string out = "[";
  for (int i = 1; i <= s.t(); ++i) {
    if (i > 1) out += ",";
    out += "[";
    for (int j = 1; j <= s.t(); ++j) {
      if (j > 1) out += ",";
      out += std::to_string(s.entry(i, j));
    }
    out += "]";
  }
  return out + "]";
}

int cmd_cosets(const RunConfig& config) {
  Composition comp = Composition::parse(config.composition);
  QuadField field = config.field();

  bool all_ok = true;
  Json cosets = Json::array();
  for (const CosetIndex& s : enumerate_I(comp)) {
    bool involution = verify_w_equals_uu_sigma(field, s);
    bool admissible = check_admissible(s);
    bool unipotent = check_unipotent_pairing(s);
    bool modulus = verify_modulus_identity(s);
    QuadMatrix u = representative(s);
    bool roundtrip = roundtrip_s(field, u, comp) == s;
    bool ok = involution && admissible && unipotent && modulus && roundtrip;
    all_ok = all_ok && ok;

    if (config.json()) {
      cosets.push_back(Json{{"index", emit(s)},
                            {"representative", emit(u)},
                            {"involution", involution_of(s).to_string()},
                            {"checks",
                             Json{{"involution", involution},
                                  {"admissible", admissible},
                                  {"unipotent", unipotent},
                                  {"modulus", modulus},
                                  {"roundtrip", roundtrip}}},
                            {"flag_invariants", flag_invariants(s)}});
    } else {
      std::cout << "s = " << render_entries(s)
                << "  w = " << involution_of(s).to_string() << "  checks: "
                << (ok ? "all pass" : "FAILED") << "\n";
      if (!ok)
        std::cout << "  involution " << involution << " admissible "
                  << admissible << " unipotent " << unipotent << " modulus "
                  << modulus << " roundtrip " << roundtrip << "\n";
    }
  }
  if (config.json()) {
    Json comp_json = Json::array();
    for (int i = 1; i <= comp.size(); ++i) comp_json.push_back(comp.part(i));
    Json out{{"composition", std::move(comp_json)},
             {"count", cosets.size()},
             {"cosets", std::move(cosets)},
             {"all_checks_pass", all_ok}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "composition " << comp.to_string() << ": " << "listed "
              << enumerate_I(comp).size() << " double cosets, "
              << (all_ok ? "all checks pass" : "CHECK FAILURES above") << "\n";
  }
  return all_ok ? kOk : kPropertyFailure;
}

int cmd_verify(const RunConfig& config) {
  VerifyOptions options;
  options.max_n = config.max_n;
  options.d = rational_from_string(config.d);
  options.workers = config.workers;
  VerifyReport report = run_verify(options);

  if (config.json()) {
    Json failure = nullptr;
    if (report.first_failure)
      failure = Json{{"composition", report.first_failure->composition},
                     {"index", report.first_failure->index},
                     {"check", report.first_failure->check}};
    Json out{{"max_n", config.max_n},
             {"compositions", report.compositions},
             {"indices", report.indices},
             {"checks", report.checks},
             {"first_failure", std::move(failure)}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "verified " << report.checks << " checks over "
              << report.indices << " index matrices in " << report.compositions
              << " compositions (n <= " << config.max_n << ", d = " << config.d
              << ") in " << report.wall_seconds << " s\n";
    if (report.first_failure)
      std::cout << "FAILURE at composition "
                << report.first_failure->composition << ", s = "
                << report.first_failure->index << ", check "
                << report.first_failure->check << "\n";
    else
      std::cout << "all checks pass\n";
  }
  return report.first_failure ? kPropertyFailure : kOk;
}

int cmd_classify(const RunConfig& config) {
  std::ifstream in(config.family_file);
  if (!in) throw ParseError("cannot open file: " + config.family_file);
  Json doc;
  try {
    doc = Json::parse(in);
  } catch (const std::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  GenericFamily family = parse_family(doc);
  if (!is_generic(family.segments))
    throw PreconditionViolated("family has linked segments");
  if (!is_galois_autodual_family(family.universe, family.segments))
    throw PreconditionViolated("family is not closed under dual-sigma");

  GenericFamily normal = normalize_order(family);
  auto pairing = find_pairing_form(normal);
  auto witness = exists_witness(normal);
  bool agree = pairing.has_value() == witness.has_value();
  bool distinguished = pairing.has_value();

  if (config.json()) {
    Json out{{"verdict", distinguished ? "DISTINGUISHED" : "NOT DISTINGUISHED"},
             {"normalized", emit(normal)},
             {"pairing", pairing ? emit(*pairing) : Json(nullptr)},
             {"witness", witness ? emit(witness->second) : Json(nullptr)},
             {"routes_agree", agree}};
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << (distinguished ? "DISTINGUISHED" : "NOT DISTINGUISHED")
              << "\n";
    if (pairing) {
      std::cout << "pairing certificate: order [";
      for (std::size_t i = 0; i < pairing->order.size(); ++i)
        std::cout << (i ? "," : "") << pairing->order[i];
      std::cout << "], r = " << pairing->r << "\n";
    } else {
      std::cout << "pairing certificate: none\n";
    }
    if (witness)
      std::cout << "witness index: " << render_entries(witness->first) << "\n";
    else
      std::cout << "witness index: none\n";
    if (!agree) std::cout << "ROUTE DISAGREEMENT: the searches differ\n";
  }
  return agree ? kOk : kPropertyFailure;
}

int cmd_fuzz(const RunConfig& config) {
  FuzzParams params;
  params.trials = config.trials;
  params.seed = config.resolved_seed();
  params.workers = config.workers;
  params.tables_per_family = config.tables;
  FuzzReport report = run_fuzz(params);

  if (config.json()) {
    Json records = Json::array();
    for (const TrialRecord& rec : report.records)
      records.push_back(Json{{"seed", rec.family_seed},
                             {"table", rec.table_index},
                             {"generated", rec.generated},
                             {"positive", rec.positive},
                             {"agree", rec.agree},
                             {"converse_ok", rec.converse_ok},
                             {"raw_agree", rec.raw_agree}});
    Json failing = Json::array();
    for (const GenericFamily& f : report.failing) failing.push_back(emit(f));
    Json outliers = Json::array();
    for (const GenericFamily& f : report.raw_outliers)
      outliers.push_back(emit(f));
    Json out{{"trials", config.trials},
             {"seed", params.seed},
             {"tables_per_family", config.tables},
             {"positives", report.positives},
             {"negatives", report.negatives},
             {"disagreements", report.disagreements},
             {"converse_failures", report.converse_failures},
             {"raw_disagreements", report.raw_disagreements},
             {"generation_failures", report.generation_failures},
             {"records", std::move(records)},
             {"failing_families", std::move(failing)},
             {"raw_outlier_families", std::move(outliers)}};
    std::cout << out.dump(2) << "\n";
  } else {
    long long evaluated = report.positives + report.negatives;
    std::cout << "fuzz: " << config.trials << " trials, seed " << params.seed
              << ", " << config.tables << " table(s) per family\n"
              << "verdicts: " << evaluated << " evaluated, "
              << report.positives << " positive, " << report.negatives
              << " negative, " << report.generation_failures
              << " generation failures\n"
              << "agreement: " << (evaluated - report.disagreements) << "/"
              << evaluated << ", converse failures "
              << report.converse_failures << ", raw-order disagreements "
              << report.raw_disagreements << "\n"
              << "wall time " << report.wall_seconds << " s\n";
    for (const GenericFamily& f : report.failing)
      std::cerr << "failing family: " << emit(f).dump() << "\n";
    for (const GenericFamily& f : report.raw_outliers)
      std::cerr << "raw-order outlier: " << emit(f).dump() << "\n";
  }
  return report.all_passed() ? kOk : kPropertyFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double coset representatives and distinction certificates"};
  app.require_subcommand(1);
  RunConfig config;

  CLI::App* cosets = app.add_subcommand(
      "cosets", "list the index matrices of one composition with "
                "representatives and checks");
  cosets->add_option("composition", config.composition,
                     "comma-separated positive parts, e.g. 2,1,1")
      ->required();

  CLI::App* verify = app.add_subcommand(
      "verify", "run every per-index property for all compositions of n <= "
                "max-n");
  verify->add_option("--max-n", config.max_n, "exhaustive bound (1..8)");

  CLI::App* classify = app.add_subcommand(
      "classify", "decide distinction for a family file and print both "
                  "certificates");
  classify->add_option("file", config.family_file, "JSON family file")
      ->required();

  CLI::App* fuzz = app.add_subcommand(
      "fuzz", "randomized agreement experiment over generated families");
  fuzz->add_option("--trials", config.trials, "families to generate");
  CLI::Option* seed_opt =
      fuzz->add_option("--seed", config.seed,
                       "base seed (falls back to GALDIST_SEED, then 0)");
  fuzz->add_option("--tables", config.tables,
                   "distinction tables tried per family");

  for (CLI::App* sub : {cosets, verify, classify, fuzz}) {
    sub->add_option("--format", config.format, "json or table")
        ->check(CLI::IsMember({"json", "table"}));
    sub->add_option("--d", config.d,
                    "field constant, a positive non-square rational");
  }
  for (CLI::App* sub : {verify, fuzz})
    sub->add_option("--workers", config.workers, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  config.seed_given = seed_opt->count() > 0;

  try {
    if (cosets->parsed()) return cmd_cosets(config);
    if (verify->parsed()) return cmd_verify(config);
    if (classify->parsed()) return cmd_classify(config);
    return cmd_fuzz(config);
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const InvalidArgument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const OutOfRange& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const PreconditionViolated& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const NotAutodualFamily& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const Error& e) {
    std::cerr << "property failure: " << e.what() << "\n";
    return kPropertyFailure;
  }
}
