#include "circspec/spectra.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>

#include "circspec/chebyshev.hpp"

namespace circspec::spectra {

namespace {

void check_index(const CirculantGraph& g, int j) {
  if (j < 0 || j >= g.order()) {
    throw DomainError("eigen index " + std::to_string(j) + " outside {0, ..., " +
                      std::to_string(g.order() - 1) + "}");
  }
}

// cos(2 pi m / n) at precision prec.
mp::Real cos_turn(long m, long n, mp::Precision prec) {
  m %= n;
  mp::Real angle = mp::Real::pi(prec + 16);
  angle = (2 * m) * angle;
  angle /= mp::Real(n, prec + 16);
  mp::Real c = mp::cos(angle);
  mpfr_prec_round(c.get(), prec, MPFR_RNDN);
  return c;
}

}  // namespace

Refinement default_refinement() {
  Refinement r;
  if (const char* env = std::getenv("CIRCSPEC_PRECISION_CAP")) {
    char* end = nullptr;
    const long cap = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && cap >= r.start) r.cap = cap;
  }
  return r;
}

mp::Real eigenvalue_fourier(const CirculantGraph& g, int j, mp::Precision prec) {
  check_index(g, j);
  const long n = g.order();
  const auto& cs = g.connection_set();
  mp::Real sum(prec);
  for (int a : cs.generators()) sum += 2 * cos_turn(static_cast<long>(j) * a, n, prec);
  if (cs.has_self_inverse()) sum += mp::Real(j % 2 == 0 ? 1L : -1L, prec);
  return sum;
}

mp::Interval eigenvalue_enclosure(const CirculantGraph& g, int j, mp::Precision prec) {
  check_index(g, j);
  const long n = g.order();
  const auto& cs = g.connection_set();
  mp::Interval sum(0L, prec);
  for (int a : cs.generators()) sum += 2 * mp::Interval::cos_turn(static_cast<long>(j) * a, n, prec);
  if (cs.has_self_inverse()) sum += mp::Interval(j % 2 == 0 ? 1L : -1L, prec);
  return sum;
}

mp::Real eigenvalue_chebyshev(const CirculantGraph& g, int j, mp::Precision prec) {
  check_index(g, j);
  const auto& cs = g.connection_set();
  if (cs.has_self_inverse()) {
    throw DomainError("Chebyshev eigenvalue form needs generators in {1, ..., floor((n-1)/2)}; set contains n/2");
  }
  const long n = g.order();
  const auto gens = cs.generators();
  const mp::Real x = cos_turn(j, n, prec);
  mp::Real sum(prec);
  for (int a : gens) sum += chebyshev::T(a, x);
  sum = 2 * sum;

  bool consecutive = !gens.empty();
  for (std::size_t i = 1; i < gens.size(); ++i) consecutive = consecutive && gens[i] == gens[i - 1] + 1;
  if (consecutive) {
    const mp::Real y = cos_turn(j, 2 * n, prec);
    const mp::Real u_form = chebyshev::U(2 * gens.back(), y) - chebyshev::U(2 * (gens.front() - 1), y);
    // Recurrence error grows with the degree; allow a quarter of the bits.
    const double tol = std::ldexp(1.0 + 4.0 * gens.back(), -static_cast<int>(prec * 3 / 4));
    if (mp::abs(u_form - sum).to_double() > tol * (1.0 + std::abs(sum.to_double()))) {
      throw std::logic_error("Chebyshev T-form and U-form disagree at j = " + std::to_string(j) + ": " +
                             sum.to_string() + " vs " + u_form.to_string());
    }
  }
  return sum;
}

Spectrum spectrum(const CirculantGraph& g, mp::Precision prec) {
  Spectrum s;
  s.n = g.order();
  s.precision = prec;
  s.values.resize(static_cast<std::size_t>(s.n));
  for (int j = 0; j <= s.n / 2; ++j) {
    const double v = eigenvalue_fourier(g, j, prec).to_double();
    s.values[static_cast<std::size_t>(j)] = v;
    if (j > 0) s.values[static_cast<std::size_t>(s.n - j)] = v;
  }
  return s;
}

std::vector<mpz_class> walk_row(const CirculantGraph& g, int t) {
  if (t < 0) throw DomainError("walk length must be >= 0");
  const int n = g.order();
  const auto& elements = g.connection_set().elements();
  std::vector<mpz_class> row(static_cast<std::size_t>(n), 0);
  row[0] = 1;
  std::vector<mpz_class> next(static_cast<std::size_t>(n));
  for (int step = 0; step < t; ++step) {
    for (int m = 0; m < n; ++m) {
      mpz_class acc = 0;
      for (int a : elements) acc += row[static_cast<std::size_t>((m - a + n) % n)];
      next[static_cast<std::size_t>(m)] = std::move(acc);
    }
    std::swap(row, next);
  }
  return row;
}

PowerSums power_sums(const CirculantGraph& g, int max_power) {
  if (max_power < 1) throw DomainError("max_power must be >= 1");
  const int n = g.order();
  const auto& elements = g.connection_set().elements();
  std::vector<mpz_class> row(static_cast<std::size_t>(n), 0);
  row[0] = 1;
  std::vector<mpz_class> next(static_cast<std::size_t>(n));
  std::vector<mpz_class> sums;
  sums.reserve(static_cast<std::size_t>(max_power));
  for (int t = 1; t <= max_power; ++t) {
    for (int m = 0; m < n; ++m) {
      mpz_class acc = 0;
      for (int a : elements) acc += row[static_cast<std::size_t>((m - a + n) % n)];
      next[static_cast<std::size_t>(m)] = std::move(acc);
    }
    std::swap(row, next);
    sums.emplace_back(row[0] * n);
  }
  return PowerSums(std::move(sums));
}

IntPolynomial char_poly(const PowerSums& sums, int n) {
  return polynomial_from_power_sums(sums.sums(), n);
}

IntPolynomial char_poly(const CirculantGraph& g) {
  return char_poly(power_sums(g, g.order()), g.order());
}

IntPolynomial char_poly_of_square(const PowerSums& sums, int n) {
  if (sums.max_power() < 2 * n) throw DomainError("char_poly_of_square needs p_1..p_2n");
  std::vector<mpz_class> even;
  even.reserve(static_cast<std::size_t>(n));
  for (int t = 1; t <= n; ++t) even.push_back(sums[2 * t]);
  return polynomial_from_power_sums(even, n);
}

int rank(const CirculantGraph& g) {
  const int n = g.order();
  std::vector<mpz_class> f(static_cast<std::size_t>(n), 0);
  for (int a : g.connection_set().elements()) f[static_cast<std::size_t>(a)] = 1;
  const IntPolynomial common = gcd(IntPolynomial(std::move(f)), IntPolynomial::x_pow_minus_one(n));
  return n - common.degree();
}

bool eigenvalue_is_zero(const CirculantGraph& g, int j) {
  check_index(g, j);
  std::vector<long> weights(static_cast<std::size_t>(g.order()), 0);
  for (int a : g.connection_set().elements()) weights[static_cast<std::size_t>(a)] = 1;
  return root_of_unity_sum_is_zero(weights, j);
}

long parity_eigenvalue(const CirculantGraph& g) {
  if (g.order() % 2 != 0) throw DomainError("parity eigenvalue needs even order");
  long value = 0;
  for (int a : g.connection_set().elements()) value += (a % 2 == 0) ? 1 : -1;
  return value;
}

std::vector<int> certified_signs(const CirculantGraph& g, Refinement refine) {
  const int n = g.order();
  const int zeros = nullity(g);
  // lambda_j = lambda_{n-j}: decide j = 0..n/2 and mirror.
  const int half = n / 2;
  auto multiplicity = [n](int j) { return (j == 0 || 2 * j == n) ? 1 : 2; };
  std::vector<int> sign_of(static_cast<std::size_t>(half) + 1, 0);
  std::vector<int> unresolved;
  for (int j = 0; j <= half; ++j) unresolved.push_back(j);

  bool settled = false;
  for (mp::Precision prec = refine.start; prec <= refine.cap && !settled; prec *= 2) {
    std::vector<int> still;
    mp::Interval total(0L, prec);
    for (int j = 0; j <= half; ++j) {
      const auto iv = eigenvalue_enclosure(g, j, prec);
      total += multiplicity(j) * iv;
      if (std::find(unresolved.begin(), unresolved.end(), j) == unresolved.end()) continue;
      if (auto s = iv.certain_sign()) {
        sign_of[static_cast<std::size_t>(j)] = *s;
      } else {
        still.push_back(j);
      }
    }
    if (!total.contains_zero()) {
      throw std::logic_error("eigenvalue enclosures do not sum to zero (trace)");
    }
    unresolved = std::move(still);
    int pending = 0;
    for (int j : unresolved) pending += multiplicity(j);
    if (pending < zeros) {
      throw std::logic_error("fewer undecided eigenvalues than the exact nullity " + std::to_string(zeros));
    }
    settled = pending == zeros;
  }
  if (!settled) {
    throw RefinementExhausted("eigenvalue signs undecided at the precision cap of " +
                              std::to_string(refine.cap) + " bits");
  }
  std::vector<int> signs(static_cast<std::size_t>(n), 0);
  for (int j = 0; j <= half; ++j) {
    signs[static_cast<std::size_t>(j)] = sign_of[static_cast<std::size_t>(j)];
    if (j > 0) signs[static_cast<std::size_t>(n - j)] = sign_of[static_cast<std::size_t>(j)];
  }
  return signs;
}

Inertia inertia(const CirculantGraph& g, Refinement refine) {
  Inertia in;
  for (int s : certified_signs(g, refine)) {
    if (s > 0) {
      ++in.positive;
    } else if (s < 0) {
      ++in.negative;
    } else {
      ++in.zero;
    }
  }
  return in;
}

std::vector<int> inertia_odd_index_signs(const CirculantGraph& g, Refinement refine) {
  if (g.order() % 2 != 0) throw DomainError("odd-index signs need even order n = 2k");
  const auto all = certified_signs(g, refine);
  std::vector<int> odd;
  for (std::size_t j = 1; j < all.size(); j += 2) odd.push_back(all[j]);
  return odd;
}

}  // namespace circspec::spectra
