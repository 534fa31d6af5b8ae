#include "circspec/verify.hpp"

#include <exception>
#include <random>

#include "circspec/chebyshev.hpp"

namespace circspec::verify {

namespace {

// Runs `body` and turns a false result or an exception into a failure line.
template <typename Body>
void check(CheckResult& r, const std::string& label, Body body) {
  ++r.cases;
  try {
    if (!body()) r.failures.push_back(label);
  } catch (const std::exception& e) {
    r.failures.push_back(label + ": " + e.what());
  }
}

std::string ks(int k, int s) { return "k=" + std::to_string(k) + " s=" + std::to_string(s); }

}  // namespace

std::vector<CheckResult> run_inertia(const SuiteOptions& opts) {
  CheckResult distinct{"distinct_inertia_pair", 0, {}};
  CheckResult closed{"closed_form_sign_counts", 0, {}};
  for (int k = 6; k <= opts.max_k; ++k) {
    const auto pair = cospectral::family_thm31(k);
    check(distinct, "k=" + std::to_string(k),
          [&] { return !(spectra::inertia(pair.first) == spectra::inertia(pair.second)); });
    check(closed, "k=" + std::to_string(k), [&] {
      const auto signs = spectra::inertia_odd_index_signs(pair.first);
      cospectral::SignCounts counted;
      for (int s : signs) {
        if (s > 0) ++counted.positive;
        if (s < 0) ++counted.negative;
      }
      const auto formula = cospectral::pk_nk_closed_form(k);
      return counted == formula && formula.positive < formula.negative;
    });
  }
  CheckResult same{"same_inertia_family", 0, {}};
  for (int alpha = 0; alpha <= opts.max_alpha; ++alpha) {
    check(same, "alpha=" + std::to_string(alpha), [&] {
      const auto pair = cospectral::family_thm32(alpha);
      return spectra::inertia(pair.first) == spectra::inertia(pair.second);
    });
  }
  return {distinct, closed, same};
}

std::vector<CheckResult> run_bounds(const SuiteOptions& opts) {
  CheckResult lambda1{"lambda1_bounds", 0, {}};
  CheckResult signs{"sign_lemmas", 0, {}};
  CheckResult identity{"odd_index_identity", 0, {}};
  for (int k = 6; k <= opts.max_k; ++k) {
    for (int s = 2; 2 * s <= k - 1; ++s) {
      check(lambda1, ks(k, s), [&] { return cospectral::lambda1_bounds_check(k, s); });
      check(signs, ks(k, s), [&] { return cospectral::sign_lemma_checks(k, s); });
      for (int j = 0; 2 * j <= k - 1; ++j) {
        check(identity, ks(k, s) + " j=" + std::to_string(j),
              [&] { return cospectral::odd_eigen_identity_check(k, s, j); });
      }
    }
  }
  CheckResult u2s{"u2s_lower_bound", 0, {}};
  for (int s = 2; s <= opts.max_s; ++s) {
    for (int k = 6; k <= opts.max_k; ++k) {
      for (int j = 2; j <= k - 1; ++j) {
        check(u2s, ks(k, s) + " j=" + std::to_string(j),
              [&] { return chebyshev::u2s_lower_bound_check(s, 2 * k, j); });
      }
    }
  }
  return {lambda1, u2s, signs, identity};
}

std::vector<CheckResult> run_prime(const SuiteOptions& opts) {
  CheckResult iso{"sc_implies_isomorphic", 0, {}};
  for (int p = 3; p <= opts.max_p; p += 2) {
    if (!is_prime(p)) continue;
    check(iso, "p=" + std::to_string(p), [&] {
      const auto report = prime::verify_sc_implies_iso(p, std::max(opts.max_p, 31));
      return report.violations.empty();
    });
  }
  CheckResult round_trip{"square_reconstruction", 0, {}};
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + 2 * std::uniform_int_distribution<int>(0, 48)(rng);
    std::vector<int> gens;
    for (int a = 1; a <= (n - 1) / 2; ++a) {
      if (rng() % 2) gens.push_back(a);
    }
    const CirculantGraph g(ConnectionSet::make(n, gens));
    check(round_trip, "n=" + std::to_string(n) + " trial=" + std::to_string(trial), [&] {
      const auto row = spectra::walk_row(g, 2);
      return prime::reconstruct_from_square(n, row) == g.connection_set();
    });
  }
  return {iso, round_trip};
}

std::vector<CheckResult> run_families(const SuiteOptions& opts) {
  CheckResult lemma{"complement_shift_sc", 0, {}};
  for (int k = 6; k <= opts.lemma_max_k; ++k) {
    const int n = 2 * k;
    std::vector<int> gens;
    auto rec = [&](auto&& self, int next) -> void {
      if (!gens.empty()) {
        check(lemma, "n=" + std::to_string(n) + " gens=" + io::Json(gens).dump(), [&] {
          const auto pair = cospectral::family_lemma21(n, gens);
          return cospectral::is_singularly_cospectral(pair.first, pair.second);
        });
      }
      if (gens.size() == 3) return;
      for (int a = next; a <= k - 1; ++a) {
        gens.push_back(a);
        self(self, a + 1);
        gens.pop_back();
      }
    };
    rec(rec, 1);
  }
  CheckResult ncsc{"ncsc_family", 0, {}};
  for (int k = 6; k <= opts.ncsc_max_k; ++k) {
    for (int s = 2; s <= k - 3; ++s) {
      check(ncsc, ks(k, s), [&] {
        const auto pair = cospectral::family_thm44(k, s);
        return cospectral::is_singularly_cospectral(pair.first, pair.second) &&
               !cospectral::is_cospectral(pair.first, pair.second);
      });
    }
  }
  return {lemma, ncsc};
}

std::vector<CheckResult> run_suite(const std::string& suite, const SuiteOptions& opts) {
  if (suite == "inertia") return run_inertia(opts);
  if (suite == "bounds") return run_bounds(opts);
  if (suite == "prime") return run_prime(opts);
  if (suite == "families") return run_families(opts);
  if (suite == "all") {
    std::vector<CheckResult> all;
    for (const char* name : {"inertia", "bounds", "prime", "families"}) {
      auto part = run_suite(name, opts);
      all.insert(all.end(), part.begin(), part.end());
    }
    return all;
  }
  throw DomainError("unknown suite '" + suite + "' (expected all, inertia, bounds, prime, families)");
}

io::Json report_json(const std::string& suite, const std::vector<CheckResult>& results) {
  io::Json j;
  j["suite"] = suite;
  bool ok = true;
  io::Json checks = io::Json::array();
  for (const auto& r : results) {
    io::Json c;
    c["name"] = r.name;
    c["cases"] = r.cases;
    c["passed"] = r.passed();
    c["failures"] = r.failures;
    checks.push_back(std::move(c));
    ok = ok && r.passed();
  }
  j["passed"] = ok;
  j["checks"] = std::move(checks);
  return j;
}

}  // namespace circspec::verify
