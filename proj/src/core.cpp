#include "circspec/core.hpp"

#include <algorithm>
#include <string>

namespace circspec {

ConnectionSet ConnectionSet::make(int n, std::span<const int> generators) {
  if (n < 2) throw DomainError("order n must be at least 2, got " + std::to_string(n));
  std::vector<int> elements;
  elements.reserve(2 * generators.size());
  for (int a : generators) {
    if (a <= 0 || a >= n) {
      throw DomainError("residue " + std::to_string(a) + " is not in {1, ..., " +
                        std::to_string(n - 1) + "}");
    }
    elements.push_back(a);
    elements.push_back(n - a);
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return ConnectionSet(n, std::move(elements));
}

bool ConnectionSet::contains(int residue) const {
  return std::binary_search(elements_.begin(), elements_.end(), residue);
}

std::vector<int> ConnectionSet::generators() const {
  std::vector<int> half;
  for (int a : elements_) {
    if (2 * a < n_) half.push_back(a);
  }
  return half;
}

int ConnectionSet::generator_count() const {
  return static_cast<int>(std::count_if(elements_.begin(), elements_.end(),
                                        [this](int a) { return 2 * a < n_; }));
}

bool ConnectionSet::has_self_inverse() const { return n_ % 2 == 0 && contains(n_ / 2); }

ConnectionSet complement_shift_set(const ConnectionSet& cs) {
  const int n = cs.order();
  if (n % 2 != 0) {
    throw DomainError("complement shift needs even order n = 2k, got n = " + std::to_string(n));
  }
  const int k = n / 2;
  if (cs.has_self_inverse()) {
    throw DomainError("complement shift needs generators 1 <= a <= k-1; set contains k = " +
                      std::to_string(k));
  }
  std::vector<int> shifted;
  for (int a : cs.generators()) shifted.push_back(k - a);
  return ConnectionSet::make(n, shifted);
}

std::vector<int> CirculantGraph::first_row() const {
  std::vector<int> row(static_cast<std::size_t>(order()), 0);
  for (int a : cs_.elements()) row[static_cast<std::size_t>(a)] = 1;
  return row;
}

std::vector<std::vector<int>> CirculantGraph::adjacency_matrix() const {
  const int n = order();
  const auto row = first_row();
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = row[static_cast<std::size_t>(((j - i) % n + n) % n)];
  }
  return a;
}

std::string to_string(Tri t) {
  switch (t) {
    case Tri::yes: return "yes";
    case Tri::no: return "no";
    case Tri::unknown: return "unknown";
  }
  return "unknown";
}

std::string verdict_class(const PairVerdict& v) {
  if (v.isomorphic == Tri::yes) return "isomorphic";
  if (v.cospectral) return "cospectral";
  if (v.ncsc()) return "ncsc";
  return "unrelated";
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

}  // namespace circspec
