#include "circspec/prime.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

#include "circspec/spectra.hpp"

namespace circspec::prime {

ConnectionSet reconstruct_from_square(int n, std::span<const mpz_class> square_row) {
  if (n < 2 || n % 2 == 0) {
    throw DomainError("reconstruction from A^2 needs odd order n (2 invertible mod n), got n = " +
                      std::to_string(n));
  }
  if (static_cast<int>(square_row.size()) != n) throw DomainError("square row must have n entries");
  for (int j = 0; j < n; ++j) {
    const auto& v = square_row[static_cast<std::size_t>(j)];
    if (v < 0) throw DomainError("square row has a negative entry");
    if (v != square_row[static_cast<std::size_t>((n - j) % n)]) {
      throw DomainError("square row is not symmetric at j = " + std::to_string(j));
    }
  }
  const long inverse_two = (n + 1) / 2;
  std::vector<int> elements;
  for (int j = 0; j < n; ++j) {
    if (mpz_odd_p(square_row[static_cast<std::size_t>(j)].get_mpz_t())) {
      elements.push_back(static_cast<int>((j * inverse_two) % n));
    }
  }
  auto cs = ConnectionSet::make(n, elements);
  if (cs.size() != elements.size()) {
    throw std::logic_error("reconstructed set is not closed under negation");
  }
  return cs;
}

std::vector<int> turner_permutation(int p, int q) {
  if (p < 3 || !is_prime(p)) throw DomainError("Turner permutation needs an odd prime p, got " + std::to_string(p));
  if (q < 1 || q > p - 1) throw DomainError("multiplier q must lie in {1, ..., p-1}");
  std::vector<int> sigma(static_cast<std::size_t>(p));
  for (int i = 0; i < p; ++i) sigma[static_cast<std::size_t>(i)] = static_cast<int>((static_cast<long>(q) * i) % p);
  return sigma;
}

std::vector<std::vector<int>> conjugate(const std::vector<std::vector<int>>& a, std::span<const int> sigma) {
  const std::size_t n = a.size();
  if (sigma.size() != n) throw DomainError("permutation size does not match the matrix");
  std::vector<std::vector<int>> b(n, std::vector<int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      b[static_cast<std::size_t>(sigma[i])][static_cast<std::size_t>(sigma[j])] = a[i][j];
    }
  }
  return b;
}

std::optional<int> find_multiplier(const ConnectionSet& s1, const ConnectionSet& s2) {
  const int n = s1.order();
  if (s2.order() != n) throw DomainError("order mismatch");
  if (s1.size() != s2.size()) return std::nullopt;
  std::vector<int> image;
  for (int q = 1; q < n; ++q) {
    if (std::gcd(q, n) != 1) continue;
    image.clear();
    for (int a : s1.elements()) image.push_back(static_cast<int>((static_cast<long>(q) * a) % n));
    std::sort(image.begin(), image.end());
    if (image == s2.elements()) return q;
  }
  return std::nullopt;
}

std::optional<int> multiplier_isomorphic(const CirculantGraph& g1, const CirculantGraph& g2) {
  const int p = g1.order();
  if (g2.order() != p) throw DomainError("order mismatch");
  if (p < 3 || !is_prime(p)) {
    throw DomainError("multiplier isomorphism test needs an odd prime order, got " + std::to_string(p));
  }
  return find_multiplier(g1.connection_set(), g2.connection_set());
}

VerifyReport verify_sc_implies_iso(int p, int max_p) {
  if (p < 3 || !is_prime(p)) throw DomainError("verification needs an odd prime, got " + std::to_string(p));
  if (p > max_p) {
    throw BudgetExceeded("p = " + std::to_string(p) + " exceeds the cap " + std::to_string(max_p));
  }
  const int half = (p - 1) / 2;
  VerifyReport report;
  report.p = p;

  std::map<std::vector<mpz_class>, std::vector<ConnectionSet>> by_even_sums;
  std::map<std::vector<mpz_class>, std::vector<ConnectionSet>> by_char_poly_sums;
  for (unsigned long mask = 0; mask < (1UL << half); ++mask) {
    std::vector<int> gens;
    for (int a = 1; a <= half; ++a) {
      if (mask & (1UL << (a - 1))) gens.push_back(a);
    }
    const CirculantGraph g(ConnectionSet::make(p, gens));
    const auto sums = spectra::power_sums(g, 2 * p);
    std::vector<mpz_class> even, first;
    for (int t = 1; t <= p; ++t) {
      even.push_back(sums[2 * t]);
      first.push_back(sums[t]);
    }
    by_even_sums[std::move(even)].push_back(g.connection_set());
    by_char_poly_sums[std::move(first)].push_back(g.connection_set());
    ++report.num_sets;
  }
  report.num_signature_groups = by_even_sums.size();

  auto check_groups = [&](const auto& groups, std::size_t& counter) {
    for (const auto& [signature, members] : groups) {
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::size_t j = i + 1; j < members.size(); ++j) {
          ++counter;
          if (!find_multiplier(members[i], members[j])) report.violations.push_back({members[i], members[j]});
        }
      }
    }
  };
  check_groups(by_even_sums, report.pairs_checked);
  check_groups(by_char_poly_sums, report.cospectral_pairs_checked);
  return report;
}

}  // namespace circspec::prime
