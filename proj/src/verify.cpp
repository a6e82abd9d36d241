#include "galdist/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>
#include <vector>

#include "galdist/cosets.hpp"
#include "galdist/errors.hpp"

namespace galdist {

namespace {

std::string render_entries(const CosetIndex& s) {
  std::ostringstream out;
  out << '[';
  for (int i = 1; i <= s.t(); ++i) {
    if (i > 1) out << ',';
    out << '[';
    for (int j = 1; j <= s.t(); ++j) {
      if (j > 1) out << ',';
      out << s.entry(i, j);
    }
    out << ']';
  }
  out << ']';
  return out.str();
}

struct CompResult {
  long long indices = 0;
  long long checks = 0;
  std::optional<VerifyFailure> failure;
};

CompResult verify_composition(const QuadField& field, const Composition& comp) {
  CompResult result;
  for_each_coset_index(comp, [&](const CosetIndex& s) {
    ++result.indices;
    const char* failed = nullptr;
    QuadMatrix u = representative(s);

    ++result.checks;
    if (!verify_w_equals_uu_sigma(field, s)) failed = "involution";
    if (!failed) {
      ++result.checks;
      if (!check_admissible(s)) failed = "admissible";
    }
    if (!failed) {
      ++result.checks;
      if (!check_unipotent_pairing(s)) failed = "unipotent";
    }
    if (!failed) {
      ++result.checks;
      if (!verify_modulus_identity(s)) failed = "modulus";
    }
    if (!failed) {
      ++result.checks;
      if (roundtrip_s(field, u, s.base()) != s) failed = "roundtrip";
    }
    if (failed) {
      result.failure =
          VerifyFailure{comp.to_string(), render_entries(s), failed};
      return false;  // stop this composition at its first failure
    }
    return true;
  });
  return result;
}

}  // namespace

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.max_n < 1 || options.max_n > 8)
    throw InvalidArgument("max_n must be between 1 and 8");
  if (options.workers < 1) throw InvalidArgument("workers must be positive");
  QuadField field(options.d);

  std::vector<Composition> comps;
  for (int n = 1; n <= options.max_n; ++n)
    for (const Composition& comp : compositions_of(n)) comps.push_back(comp);

  auto start = std::chrono::steady_clock::now();
  std::vector<CompResult> results(comps.size());
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_guard;

  auto work = [&] {
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= comps.size()) return;
      try {
        results[i] = verify_composition(field, comps[i]);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_guard);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };

  int n_threads = static_cast<int>(
      std::min<std::size_t>(options.workers, comps.size()));
  if (n_threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int k = 0; k < n_threads; ++k) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  VerifyReport report;
  report.compositions = static_cast<long long>(comps.size());
  for (const CompResult& r : results) {
    report.indices += r.indices;
    report.checks += r.checks;
    if (!report.first_failure && r.failure) report.first_failure = r.failure;
  }
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
          .count();
  return report;
}

}  // namespace galdist
