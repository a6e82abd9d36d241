#include "galdist/fuzz.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>

#include "galdist/classifier.hpp"
#include "galdist/errors.hpp"

namespace galdist {

namespace {

struct TrialOutcome {
  TrialRecord record;
  std::optional<GenericFamily> family;  // kept when any anomaly occurred
};

// The witness side of the un-normalized comparison.  On positive trials the
// constructed index is tried first; a full scan only runs when that shortcut
// is rejected, or on negative trials where absence must be established.
bool raw_witness_exists(const GenericFamily& family,
                        const std::optional<PairingCertificate>& cert) {
  if (cert && check_witness(family, certificate_to_coset(family, *cert)))
    return true;
  return exists_witness(family).has_value();
}

TrialOutcome evaluate(const GenericFamily& family, std::uint64_t family_seed,
                      int table_index) {
  TrialOutcome out;
  out.record.family_seed = family_seed;
  out.record.table_index = table_index;

  GenericFamily normal = normalize_order(family);
  auto cert = find_pairing_form(normal);
  out.record.positive = cert.has_value();
  out.record.agree = cert.has_value() == exists_witness(normal).has_value();
  if (cert) {
    out.record.converse_ok =
        check_witness(normal, certificate_to_coset(normal, *cert)).has_value();
  }

  auto raw_cert = find_pairing_form(family);
  if (raw_cert.has_value() != cert.has_value())
    throw InternalCheckFailed("pairing verdict depends on segment order");
  out.record.raw_agree =
      raw_cert.has_value() == raw_witness_exists(family, raw_cert);

  if (!out.record.agree || !out.record.converse_ok || !out.record.raw_agree)
    out.family = family;
  return out;
}

}  // namespace

FuzzReport run_fuzz(const FuzzParams& params) {
  if (params.trials < 0) throw InvalidArgument("trials must be nonnegative");
  if (params.workers < 1) throw InvalidArgument("workers must be positive");
  if (params.tables_per_family < 1)
    throw InvalidArgument("tables_per_family must be positive");

  auto start = std::chrono::steady_clock::now();
  int tables = params.tables_per_family;
  std::vector<TrialOutcome> outcomes(
      static_cast<std::size_t>(params.trials) * tables);
  std::atomic<long long> next{0};
  std::exception_ptr error;
  std::mutex error_guard;

  auto work = [&] {
    for (;;) {
      long long i = next.fetch_add(1);
      if (i >= params.trials) return;
      std::uint64_t family_seed = params.seed + static_cast<std::uint64_t>(i);
      try {
        std::optional<GenericFamily> family;
        try {
          family = generate_family(family_seed, params.gen);
        } catch (const GenerationFailed&) {
        }
        for (int k = 0; k < tables; ++k) {
          std::size_t slot = static_cast<std::size_t>(i) * tables + k;
          if (!family) {
            outcomes[slot].record.family_seed = family_seed;
            outcomes[slot].record.table_index = k;
            outcomes[slot].record.generated = false;
            continue;
          }
          GenericFamily f =
              k == 0 ? *family
                     : reassign_dist_table(
                           *family, family_seed + 0x9e3779b97f4a7c15ULL *
                                                      static_cast<std::uint64_t>(k));
          outcomes[slot] = evaluate(f, family_seed, k);
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_guard);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  long long n_threads = std::min<long long>(params.workers,
                                            std::max<long long>(params.trials, 1));
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (long long k = 0; k < n_threads; ++k) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  FuzzReport report;
  report.records.reserve(outcomes.size());
  for (TrialOutcome& out : outcomes) {
    const TrialRecord& rec = out.record;
    report.records.push_back(rec);
    if (!rec.generated) {
      if (rec.table_index == 0) ++report.generation_failures;
      continue;
    }
    if (rec.positive) ++report.positives; else ++report.negatives;
    if (!rec.agree) ++report.disagreements;
    if (!rec.converse_ok) ++report.converse_failures;
    if (!rec.raw_agree) ++report.raw_disagreements;
    if (out.family) {
      if (!rec.agree || !rec.converse_ok) report.failing.push_back(*out.family);
      if (!rec.raw_agree) report.raw_outliers.push_back(std::move(*out.family));
    }
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace galdist
