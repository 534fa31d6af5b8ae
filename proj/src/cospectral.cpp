#include "circspec/cospectral.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "circspec/prime.hpp"

namespace circspec::cospectral {

namespace {

void require_same_order(const CirculantGraph& g1, const CirculantGraph& g2) {
  if (g1.order() != g2.order()) {
    throw DomainError("graphs have different orders " + std::to_string(g1.order()) + " and " +
                      std::to_string(g2.order()));
  }
}

std::vector<int> range(int from, int to) {
  std::vector<int> v;
  for (int a = from; a <= to; ++a) v.push_back(a);
  return v;
}

CirculantGraph consecutive_graph(int n, int from, int to) {
  const auto gens = range(from, to);
  return CirculantGraph(ConnectionSet::make(n, gens));
}

void require_half_range(int k, int s, const char* what) {
  if (k < 6) throw DomainError(std::string(what) + " needs k ≥ 6, got k = " + std::to_string(k));
  if (s < 2 || 2 * s > k - 1) {
    throw DomainError(std::string(what) + " needs 2 ≤ s ≤ (k−1)/2, got s = " + std::to_string(s) +
                      " with k = " + std::to_string(k));
  }
}

// Doubles precision until `decide` returns a verdict; throws at the cap.
template <typename Decide>
bool certify(Decide decide, const std::string& what) {
  const auto refine = spectra::default_refinement();
  for (mp::Precision prec = refine.start; prec <= refine.cap; prec *= 2) {
    if (auto verdict = decide(prec)) return *verdict;
  }
  throw RefinementExhausted(what + " undecided at the precision cap");
}

}  // namespace

GraphProfile profile(const CirculantGraph& g, spectra::Refinement refine) {
  const int n = g.order();
  GraphProfile p{g, spectra::power_sums(g, 2 * n), spectra::inertia(g, refine), 0, {}};
  p.nullity = p.inertia.zero;
  const auto square = spectra::char_poly_of_square(p.sums, n);
  // A^2 is symmetric, so the multiplicity of 0 as a root equals the nullity.
  if (square.trailing_zero_count() != p.nullity) {
    throw std::logic_error("char(A^2) zero multiplicity disagrees with the exact nullity");
  }
  p.square_nonzero = square.shift_down(p.nullity);
  return p;
}

bool is_cospectral(const CirculantGraph& g1, const CirculantGraph& g2) {
  require_same_order(g1, g2);
  const int n = g1.order();
  return spectra::power_sums(g1, n) == spectra::power_sums(g2, n);
}

bool is_singularly_cospectral(const CirculantGraph& g1, const CirculantGraph& g2) {
  require_same_order(g1, g2);
  const int n = g1.order();
  const auto a = spectra::power_sums(g1, 2 * n);
  const auto b = spectra::power_sums(g2, 2 * n);
  for (int t = 2; t <= 2 * n; t += 2) {
    if (a[t] != b[t]) return false;
  }
  return true;
}

PairVerdict classify_profiles(const GraphProfile& a, const GraphProfile& b) {
  require_same_order(a.graph, b.graph);
  const int n = a.graph.order();
  PairVerdict v;
  v.cospectral = true;
  v.singularly_cospectral = true;
  for (int t = 1; t <= 2 * n; ++t) {
    if (a.sums[t] == b.sums[t]) continue;
    if (t <= n) v.cospectral = false;
    if (t % 2 == 0) v.singularly_cospectral = false;
  }
  v.equal_nonzero_abs_spectrum = a.square_nonzero == b.square_nonzero;
  v.inertia1 = a.inertia;
  v.inertia2 = b.inertia;
  v.same_inertia = a.inertia == b.inertia;

  v.multiplier = prime::find_multiplier(a.graph.connection_set(), b.graph.connection_set());
  if (v.multiplier) {
    v.isomorphic = Tri::yes;
  } else if (is_prime(n) || !v.cospectral) {
    // Prime order: multipliers are complete. Any order: isomorphic implies cospectral.
    v.isomorphic = Tri::no;
  } else {
    v.isomorphic = Tri::unknown;
  }
  return v;
}

PairVerdict classify_pair(const CirculantGraph& g1, const CirculantGraph& g2) {
  require_same_order(g1, g2);
  return classify_profiles(profile(g1), profile(g2));
}

GraphPair family_lemma21(int n, std::span<const int> generators) {
  if (n % 2 != 0) throw DomainError("complement-shift family needs even order n = 2k, got " + std::to_string(n));
  const int k = n / 2;
  if (generators.empty()) throw DomainError("complement-shift family needs at least one generator");
  for (int a : generators) {
    if (a < 1 || a > k - 1) {
      throw DomainError("complement-shift family needs generators 1 ≤ a ≤ k−1, got a = " + std::to_string(a) +
                        " with k = " + std::to_string(k));
    }
  }
  auto s1 = ConnectionSet::make(n, generators);
  auto s2 = complement_shift_set(s1);
  return {CirculantGraph(std::move(s1)), CirculantGraph(std::move(s2))};
}

GraphPair family_thm31(int k) {
  if (k < 6) throw DomainError("distinct-inertia family needs k ≥ 6, got k = " + std::to_string(k));
  const int n = 2 * k;
  return {CirculantGraph(n, {1, 2}), CirculantGraph(n, {k - 2, k - 1})};
}

GraphPair family_thm32(int alpha) {
  if (alpha < 0) throw DomainError("same-inertia family needs α ≥ 0, got α = " + std::to_string(alpha));
  const int k = 4 * alpha + 9;
  const int s = 2 * alpha + 4;
  return {consecutive_graph(2 * k, 1, s), consecutive_graph(2 * k, k - s, k - 1)};
}

GraphPair family_thm44(int k, int s) {
  if (k < 6) throw DomainError("NCSC family needs k ≥ 6, got k = " + std::to_string(k));
  if (s < 2 || s > k - 3) {
    throw DomainError("NCSC family needs 2 ≤ s ≤ k−3, got s = " + std::to_string(s) + " with k = " +
                      std::to_string(k));
  }
  return {consecutive_graph(2 * k, 1, s), consecutive_graph(2 * k, k - s, k - 1)};
}

SignCounts pk_nk_closed_form(int k) {
  if (k < 6) throw DomainError("closed-form counts need k ≥ 6, got k = " + std::to_string(k));
  const int low = (k + 3) / 6;
  const int high = (5 * k + 3) / 6;
  SignCounts c;
  c.positive = k + low - high - (k % 6 == 3 ? 1 : 0);
  int correction = 0;
  if (k % 6 == 3) {
    correction = 2;
  } else if (k % 2 == 1) {
    correction = 1;
  }
  c.negative = high - low - correction;
  return c;
}

bool lambda1_bounds_check(int k, int s) {
  require_half_range(k, s, "λ₁ bounds");
  const auto g = consecutive_graph(2 * k, 1, s);
  const long span = 2L * k - 2L * s - 1;
  return certify(
      [&](mp::Precision prec) -> std::optional<bool> {
        const auto lambda1 = spectra::eigenvalue_enclosure(g, 1, prec);
        if (lambda1.width() > 1e-12) return std::nullopt;
        const auto lower = mp::Interval::rational(s * span, k, prec);
        const auto upper = mp::Interval::rational(7L * s * span, 4L * k, prec);
        if (lower.certainly_less(lambda1) && lambda1.certainly_less(upper)) return true;
        if (lambda1.upper() <= lower.lower() || lambda1.lower() >= upper.upper()) return false;
        return std::nullopt;
      },
      "λ₁ bounds at k = " + std::to_string(k) + ", s = " + std::to_string(s));
}

bool odd_eigen_identity_check(int k, int s, int j) {
  if (s < 2 || 2 * s > k - 1) {
    throw DomainError("odd-index identity needs 2 ≤ s ≤ (k−1)/2, got s = " + std::to_string(s));
  }
  if (j < 0 || 2 * j > k - 1) {
    throw DomainError("odd-index identity needs 0 ≤ j ≤ (k−1)/2, got j = " + std::to_string(j));
  }
  const int n = 2 * k;
  const auto g1 = consecutive_graph(n, 1, s);
  const auto g2 = consecutive_graph(n, 1, k - s - 1);
  const int index = 2 * j + 1;

  // Exact: the difference of the two root-of-unity sums vanishes.
  std::vector<long> weights(static_cast<std::size_t>(n), 0);
  for (int a : g1.connection_set().elements()) weights[static_cast<std::size_t>(a)] += 1;
  for (int b : g2.connection_set().elements()) weights[static_cast<std::size_t>(b)] -= 1;
  const bool equal = root_of_unity_sum_is_zero(weights, index);

  const auto prec = spectra::default_refinement().cap / 8;
  const auto lhs = spectra::eigenvalue_enclosure(g1, index, prec);
  const auto rhs = spectra::eigenvalue_enclosure(g2, index, prec);
  if (equal && !lhs.overlaps(rhs)) {
    throw std::logic_error("exact equality contradicts disjoint enclosures");
  }
  return equal;
}

bool sign_lemma_checks(int k, int s) {
  require_half_range(k, s, "sign lemmas");
  const auto pair = family_thm44(k, s);
  const long lambda_k = spectra::parity_eigenvalue(pair.first);
  return certify(
      [&](mp::Precision prec) -> std::optional<bool> {
        const auto lambda1 = spectra::eigenvalue_enclosure(pair.first, 1, prec);
        const auto beta1 = spectra::eigenvalue_enclosure(pair.second, 1, prec);
        const auto sum = lambda1 + mp::Interval(lambda_k, prec);
        const auto s1 = lambda1.certain_sign();
        const auto s2 = beta1.certain_sign();
        const auto s3 = sum.certain_sign();
        if (s1 && s2 && s3) return *s1 > 0 && *s2 < 0 && *s3 > 0;
        return std::nullopt;
      },
      "sign lemmas at k = " + std::to_string(k) + ", s = " + std::to_string(s));
}

std::vector<ConnectionSet> enumerate_sets(int n, int max_s) {
  if (n < 2) throw DomainError("order n must be at least 2");
  const int half = (n - 1) / 2;
  max_s = std::min(max_s, half);
  std::vector<ConnectionSet> sets;
  std::vector<int> chosen;
  // Depth-first over increasing generator lists.
  auto rec = [&](auto&& self, int next) -> void {
    if (!chosen.empty()) sets.push_back(ConnectionSet::make(n, chosen));
    if (static_cast<int>(chosen.size()) == max_s) return;
    for (int a = next; a <= half; ++a) {
      chosen.push_back(a);
      self(self, a + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 1);
  std::sort(sets.begin(), sets.end());
  return sets;
}

SearchSummary search_ncsc(int n, int max_s, const std::function<void(const SearchRecord&)>& emit,
                          SearchOptions options) {
  if (n < 4) throw DomainError("search needs n ≥ 4, got n = " + std::to_string(n));
  if (max_s < 1) throw DomainError("search needs max_s ≥ 1");
  const int workers = std::max(1, options.workers);

  const auto sets = enumerate_sets(n, max_s);
  SearchSummary summary;
  summary.n = n;
  summary.max_s = max_s;
  summary.sets = sets.size();
  summary.pairs_total = sets.size() * (sets.size() - (sets.empty() ? 0 : 1)) / 2;
  summary.pairs_examined = std::min(summary.pairs_total, options.pair_cap);
  summary.truncated = summary.pairs_examined < summary.pairs_total;

  // Profiles are shared read-only by every pair decision.
  std::vector<std::optional<GraphProfile>> profiles(sets.size());
  auto run_parallel = [workers](std::size_t count, const auto& body) {
    if (workers == 1 || count < 2) {
      for (std::size_t i = 0; i < count; ++i) body(i);
      return;
    }
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t i = static_cast<std::size_t>(w); i < count; i += static_cast<std::size_t>(workers)) body(i);
      });
    }
    for (auto& t : pool) t.join();
  };
  run_parallel(sets.size(), [&](std::size_t i) { profiles[i] = profile(CirculantGraph(sets[i])); });

  // Pair index -> (i, j) in lexicographic order, i < j.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(summary.pairs_examined);
  for (std::size_t i = 0; i < sets.size() && pairs.size() < summary.pairs_examined; ++i) {
    for (std::size_t j = i + 1; j < sets.size() && pairs.size() < summary.pairs_examined; ++j) pairs.emplace_back(i, j);
  }
  std::vector<std::optional<PairVerdict>> found(pairs.size());
  run_parallel(pairs.size(), [&](std::size_t idx) {
    const auto [i, j] = pairs[idx];
    auto v = classify_profiles(*profiles[i], *profiles[j]);
    if (v.ncsc()) found[idx] = std::move(v);
  });

  for (std::size_t idx = 0; idx < pairs.size(); ++idx) {
    if (!found[idx]) continue;
    ++summary.ncsc_found;
    emit({sets[pairs[idx].first], sets[pairs[idx].second], *found[idx]});
  }
  return summary;
}

}  // namespace circspec::cospectral
