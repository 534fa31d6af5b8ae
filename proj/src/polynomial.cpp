#include "circspec/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace circspec {

IntPolynomial::IntPolynomial(std::vector<mpz_class> ascending) : coeffs_(std::move(ascending)) {
  trim();
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::x_pow_minus_one(int n) {
  std::vector<mpz_class> c(static_cast<std::size_t>(n) + 1, 0);
  c[0] = -1;
  c[static_cast<std::size_t>(n)] += 1;
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::monomial(int degree, mpz_class coeff) {
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1, 0);
  c.back() = std::move(coeff);
  return IntPolynomial(std::move(c));
}

mpz_class IntPolynomial::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

int IntPolynomial::trailing_zero_count() const {
  int m = 0;
  while (m <= degree() && coeffs_[static_cast<std::size_t>(m)] == 0) ++m;
  return m;
}

IntPolynomial IntPolynomial::shift_down(int m) const {
  if (m > trailing_zero_count()) throw std::invalid_argument("shift_down: x^m does not divide");
  return IntPolynomial(std::vector<mpz_class>(coeffs_.begin() + m, coeffs_.end()));
}

mpz_class IntPolynomial::evaluate(const mpz_class& x) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

mpz_class IntPolynomial::content() const {
  mpz_class g = 0;
  for (const auto& c : coeffs_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

IntPolynomial IntPolynomial::primitive_part() const {
  if (is_zero()) return {};
  mpz_class g = content();
  if (leading() < 0) g = -g;
  std::vector<mpz_class> c = coeffs_;
  for (auto& x : c) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::mod_monic(const IntPolynomial& divisor) const {
  if (!divisor.is_monic()) throw std::invalid_argument("mod_monic: divisor is not monic");
  std::vector<mpz_class> r = coeffs_;
  const int dd = divisor.degree();
  for (int i = degree(); i >= dd; --i) {
    const mpz_class q = r[static_cast<std::size_t>(i)];
    if (q == 0) continue;
    for (int t = 0; t <= dd; ++t) r[static_cast<std::size_t>(i - dd + t)] -= q * divisor.coeffs_[t];
  }
  return IntPolynomial(std::move(r));
}

IntPolynomial IntPolynomial::exact_div_monic(const IntPolynomial& divisor) const {
  if (!divisor.is_monic()) throw std::invalid_argument("exact_div_monic: divisor is not monic");
  const int dd = divisor.degree();
  if (degree() < dd) {
    if (is_zero()) return {};
    throw std::logic_error("exact_div_monic: non-zero remainder");
  }
  std::vector<mpz_class> r = coeffs_;
  std::vector<mpz_class> q(static_cast<std::size_t>(degree() - dd) + 1, 0);
  for (int i = degree(); i >= dd; --i) {
    const mpz_class c = r[static_cast<std::size_t>(i)];
    q[static_cast<std::size_t>(i - dd)] = c;
    if (c == 0) continue;
    for (int t = 0; t <= dd; ++t) r[static_cast<std::size_t>(i - dd + t)] -= c * divisor.coeffs_[t];
  }
  for (const auto& x : r) {
    if (x != 0) throw std::logic_error("exact_div_monic: non-zero remainder");
  }
  return IntPolynomial(std::move(q));
}

std::string IntPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const mpz_class& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    const mpz_class mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) out << mag.get_str();
    if (i >= 1) out << "x";
    if (i >= 2) out << "^" << i;
    first = false;
  }
  return out.str();
}

IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b) {
  std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
  for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
  return IntPolynomial(std::move(c));
}

IntPolynomial polynomial_from_power_sums(std::span<const mpz_class> power_sums, int degree) {
  if (degree < 0 || static_cast<int>(power_sums.size()) < degree) {
    throw std::invalid_argument("need power sums p_1..p_n for a degree-n polynomial");
  }
  // Elementary symmetric functions: k e_k = sum_{i=1}^k (-1)^(i-1) e_{k-i} p_i.
  std::vector<mpz_class> e(static_cast<std::size_t>(degree) + 1, 0);
  e[0] = 1;
  for (int k = 1; k <= degree; ++k) {
    mpz_class acc = 0;
    for (int i = 1; i <= k; ++i) {
      const mpz_class term = e[static_cast<std::size_t>(k - i)] * power_sums[static_cast<std::size_t>(i - 1)];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    if (!mpz_divisible_ui_p(acc.get_mpz_t(), static_cast<unsigned long>(k))) {
      throw std::logic_error("Newton's identities produced a non-integral coefficient e_" +
                             std::to_string(k) + " = " + acc.get_str() + "/" + std::to_string(k));
    }
    mpz_divexact_ui(e[static_cast<std::size_t>(k)].get_mpz_t(), acc.get_mpz_t(),
                    static_cast<unsigned long>(k));
  }
  // prod (x - lambda_i) = sum_k (-1)^k e_k x^(n-k).
  std::vector<mpz_class> c(static_cast<std::size_t>(degree) + 1, 0);
  for (int k = 0; k <= degree; ++k) {
    c[static_cast<std::size_t>(degree - k)] = (k % 2 == 0) ? e[k] : mpz_class(-e[k]);
  }
  return IntPolynomial(std::move(c));
}

const IntPolynomial& cyclotomic(int d) {
  if (d < 1) throw std::invalid_argument("cyclotomic index must be >= 1");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<IntPolynomial>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(d); it != cache.end()) return *it->second;
  }
  // Phi_d = (x^d - 1) / prod_{e | d, e < d} Phi_e.
  IntPolynomial p = IntPolynomial::x_pow_minus_one(d);
  for (int e = 1; e < d; ++e) {
    if (d % e == 0) p = p.exact_div_monic(cyclotomic(e));
  }
  std::lock_guard lock(mutex);
  auto [it, inserted] = cache.emplace(d, std::make_unique<IntPolynomial>(std::move(p)));
  return *it->second;
}

bool root_of_unity_sum_is_zero(std::span<const long> weights, int j) {
  const int n = static_cast<int>(weights.size());
  if (n == 0) return true;
  j %= n;
  if (j < 0) j += n;
  // omega^j is a primitive d-th root of unity; reduce exponents mod d and test
  // divisibility by Phi_d.
  const int d = n / std::gcd(j, n);
  const long step = j / (n / d);
  std::vector<mpz_class> folded(static_cast<std::size_t>(d), 0);
  for (int m = 0; m < n; ++m) {
    if (weights[static_cast<std::size_t>(m)] == 0) continue;
    const auto e = static_cast<std::size_t>((step * m) % d);
    folded[e] += weights[static_cast<std::size_t>(m)];
  }
  return IntPolynomial(std::move(folded)).mod_monic(cyclotomic(d)).is_zero();
}

IntPolynomial gcd(IntPolynomial a, IntPolynomial b) {
  if (a.degree() < b.degree()) std::swap(a, b);
  a = a.primitive_part();
  b = b.primitive_part();
  while (!b.is_zero()) {
    // Pseudo-remainder lc(b)^(deg a - deg b + 1) * a mod b, kept over Z.
    std::vector<mpz_class> r = a.coefficients();
    const auto& bc = b.coefficients();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
      const mpz_class q = r[static_cast<std::size_t>(i)];
      for (auto& x : r) x *= b.leading();
      if (q == 0) continue;
      for (int t = 0; t <= db; ++t) r[static_cast<std::size_t>(i - db + t)] -= q * bc[t];
    }
    r.resize(static_cast<std::size_t>(db));
    a = std::move(b);
    b = IntPolynomial(std::move(r)).primitive_part();
  }
  return a;
}

}  // namespace circspec
