// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "circspec/chebyshev.hpp"
#include "circspec/cospectral.hpp"
#include "circspec/prime.hpp"
#include "circspec/spectra.hpp"
#include "support/oracles.hpp"
#include "support/process.hpp"

namespace {

namespace cs = circspec::cospectral;
namespace sp = circspec::spectra;
using circspec::CirculantGraph;
using circspec::ConnectionSet;

struct Outcome {
  std::size_t cases = 0;
  std::vector<std::string> failures;

  void expect(bool ok, const std::string& what) {
    ++cases;
    if (!ok && failures.size() < 5) failures.push_back(what);
    if (!ok && failures.size() == 5) failures.push_back("...");
  }
};

std::string kn(int k, int s = -1) {
  return "k=" + std::to_string(k) + (s >= 0 ? " s=" + std::to_string(s) : "");
}

Outcome complement_shift_soundness() {
  Outcome o;
  for (int k = 6; k <= 16; ++k) {
    const int m = k - 1;
    for (int a = 1; a <= m; ++a) {
      const std::vector<int> one{a};
      const auto p1 = cs::family_lemma21(2 * k, one);
      o.expect(cs::is_singularly_cospectral(p1.first, p1.second), kn(k) + " {" + std::to_string(a) + "}");
      for (int b = a + 1; b <= m; ++b) {
        const std::vector<int> two{a, b};
        const auto p2 = cs::family_lemma21(2 * k, two);
        o.expect(cs::is_singularly_cospectral(p2.first, p2.second), kn(k) + " pair");
        for (int c = b + 1; c <= m; ++c) {
          const std::vector<int> three{a, b, c};
          const auto p3 = cs::family_lemma21(2 * k, three);
          o.expect(cs::is_singularly_cospectral(p3.first, p3.second), kn(k) + " triple");
        }
      }
    }
  }
  return o;
}

Outcome distinct_inertia() {
  Outcome o;
  for (int k = 6; k <= 60; ++k) {
    const auto p = cs::family_thm31(k);
    o.expect(sp::inertia(p.first) != sp::inertia(p.second), kn(k));
  }
  return o;
}

Outcome closed_form_counts() {
  Outcome o;
  for (int k = 6; k <= 200; ++k) {
    cs::SignCounts brute;
    for (int sign : sp::inertia_odd_index_signs(cs::family_thm31(k).first)) {
      if (sign > 0) ++brute.positive;
      if (sign < 0) ++brute.negative;
    }
    const auto closed = cs::pk_nk_closed_form(k);
    o.expect(closed == brute, kn(k) + " counts");
    o.expect(closed.positive < closed.negative, kn(k) + " P<N");
  }
  return o;
}

Outcome same_inertia() {
  Outcome o;
  for (int alpha = 0; alpha <= 8; ++alpha) {
    const auto p = cs::family_thm32(alpha);
    o.expect(sp::inertia(p.first) == sp::inertia(p.second), "alpha=" + std::to_string(alpha));
  }
  return o;
}

Outcome ncsc_family() {
  Outcome o;
  for (int k = 6; k <= 30; ++k) {
    for (int s = 2; s <= k - 3; ++s) {
      const auto p = cs::family_thm44(k, s);
      o.expect(cs::is_singularly_cospectral(p.first, p.second), kn(k, s) + " sc");
      o.expect(!cs::is_cospectral(p.first, p.second), kn(k, s) + " cospectral");
    }
  }
  return o;
}

Outcome lambda1_bounds() {
  Outcome o;
  for (int k = 6; k <= 60; ++k) {
    for (int s = 2; 2 * s <= k - 1; ++s) o.expect(cs::lambda1_bounds_check(k, s), kn(k, s));
  }
  return o;
}

Outcome u2s_bound() {
  Outcome o;
  for (int s = 2; s <= 30; ++s) {
    for (int k = 6; k <= 60; ++k) {
      for (int j = 2; j <= k - 1; ++j) {
        o.expect(circspec::chebyshev::u2s_lower_bound_check(s, 2 * k, j), kn(k, s) + " j=" + std::to_string(j));
      }
    }
  }
  return o;
}

Outcome sign_facts_and_identity() {
  Outcome o;
  for (int k = 6; k <= 60; ++k) {
    for (int s = 2; 2 * s <= k - 1; ++s) {
      o.expect(cs::sign_lemma_checks(k, s), kn(k, s) + " signs");
      for (int j = 0; 2 * j <= k - 1; ++j) {
        o.expect(cs::odd_eigen_identity_check(k, s, j), kn(k, s) + " j=" + std::to_string(j));
      }
    }
  }
  return o;
}

Outcome prime_exhaustive() {
  Outcome o;
  for (int p : {3, 5, 7, 11, 13}) {
    const auto r = circspec::prime::verify_sc_implies_iso(p);
    o.expect(r.num_sets == (std::size_t{1} << ((p - 1) / 2)), "p=" + std::to_string(p) + " set count");
    o.expect(r.violations.empty(), "p=" + std::to_string(p) + " violations");
  }
  return o;
}

Outcome square_round_trip() {
  Outcome o;
  std::mt19937 rng(20261018);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + 2 * static_cast<int>(rng() % 49);
    const CirculantGraph g(circspec::oracle::random_set(n, rng));
    const auto row = sp::walk_row(g, 2);
    o.expect(circspec::prime::reconstruct_from_square(n, row) == g.connection_set(), "n=" + std::to_string(n));
  }
  return o;
}

Outcome cross_route_agreement() {
  Outcome o;
  std::mt19937 rng(64);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 62);
    // No self-inverse element, so the Chebyshev route applies to every graph.
    const CirculantGraph g(circspec::oracle::random_set(n, rng, false));
    auto fourier = sp::spectrum(g).values;
    std::vector<double> chebyshev;
    for (int j = 0; j < n; ++j) chebyshev.push_back(sp::eigenvalue_chebyshev(g, j).to_double());
    std::vector<std::vector<double>> dense(static_cast<std::size_t>(n));
    const auto a = g.adjacency_matrix();
    for (int i = 0; i < n; ++i) dense[i].assign(a[i].begin(), a[i].end());
    const auto jacobi = circspec::oracle::jacobi_eigenvalues(dense);
    std::sort(fourier.begin(), fourier.end());
    std::sort(chebyshev.begin(), chebyshev.end());
    double worst = 0;
    for (int j = 0; j < n; ++j) {
      worst = std::max({worst, std::abs(fourier[j] - jacobi[j]), std::abs(chebyshev[j] - jacobi[j]),
                        std::abs(fourier[j] - chebyshev[j])});
    }
    o.expect(worst <= 1e-9, "n=" + std::to_string(n));
  }
  return o;
}

Outcome search_determinism() {
  Outcome o;
  const std::string base = std::string(CIRCSPEC_CLI) + " search --n 12 --max-s 2";
  const auto first = circspec::testing::run_command(base + " --workers 1");
  const auto second = circspec::testing::run_command(base + " --workers 1");
  const auto parallel = circspec::testing::run_command(base + " --workers 4");
  o.expect(first.exit_code == 0 && !first.out.empty(), "exit status");
  o.expect(first.out == second.out, "two runs differ");
  o.expect(first.out == parallel.out, "1 vs 4 workers differ");
  return o;
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {"complement-shift pairs singularly cospectral (k 6..16, |gens| <= 3)", complement_shift_soundness},
      {"{1,2} vs {k-2,k-1} inertias differ (k 6..60)", distinct_inertia},
      {"closed-form P_k, N_k match sign counts, P_k < N_k (k 6..200)", closed_form_counts},
      {"k = 4a+9, s = 2a+4 pairs share inertia (a 0..8)", same_inertia},
      {"<1..s> vs <k-s..k-1> singularly cospectral, not cospectral (k 6..30)", ncsc_family},
      {"lambda_1 strict bounds at width 1e-12 (k 6..60)", lambda1_bounds},
      {"U_2s(Y_j) >= -(s+1)/2 (s 2..30, k 6..60)", u2s_bound},
      {"sign facts and odd-index identity (k 6..60)", sign_facts_and_identity},
      {"singularly cospectral implies multiplier isomorphic (p <= 13)", prime_exhaustive},
      {"S recovered from the first row of A^2 (200 odd n <= 99)", square_round_trip},
      {"Fourier, Chebyshev and Jacobi spectra agree to 1e-9 (300 graphs)", cross_route_agreement},
      {"search --n 12 --max-s 2 byte-identical across runs and workers", search_determinism},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o.expect(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool ok = o.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("[%s] %2zu %s: %zu cases, %.1f s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].name, o.cases, secs);
    for (const auto& f : o.failures) std::printf("       %s\n", f.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
