#pragma once

// Runnable verification suites over the circulant families, at a chosen scale.

#include <string>
#include <vector>

#include "circspec/io.hpp"

namespace circspec::verify {

struct CheckResult {
  std::string name;
  std::size_t cases = 0;
  std::vector<std::string> failures;

  bool passed() const { return failures.empty(); }
};

struct SuiteOptions {
  int max_k = 60;
  int max_alpha = 8;
  int max_p = 13;
  /// Largest s for the U_2s lower-bound sweep.
  int max_s = 30;
  /// Largest k for the complement-shift sweep over all generator subsets.
  int lemma_max_k = 16;
  /// Largest k for the NCSC sweep over 2 <= s <= k-3.
  int ncsc_max_k = 30;
};

/// Distinct inertia of the {1,2} pair, closed-form sign counts, same-inertia family.
std::vector<CheckResult> run_inertia(const SuiteOptions& opts);
/// lambda_1 bounds, U_2s lower bound, sign lemmas, odd-index identity.
std::vector<CheckResult> run_bounds(const SuiteOptions& opts);
/// Singular cospectrality implies isomorphism at odd prime order; A^2 round trip.
std::vector<CheckResult> run_prime(const SuiteOptions& opts);
/// Complement-shift soundness and NCSC classification sweeps.
std::vector<CheckResult> run_families(const SuiteOptions& opts);

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opts);

io::Json report_json(const std::string& suite, const std::vector<CheckResult>& results);

}  // namespace circspec::verify
