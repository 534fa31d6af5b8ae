#pragma once

// Domain types shared by every circspec module: connection sets, circulant
// graphs, inertia triples and pair verdicts.

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace circspec {

/// Invalid input: bad residues, out-of-range parameters, hypothesis violations.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An interval refinement hit the precision cap without deciding a sign.
class RefinementExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A resource budget (pair count, prime size) was exceeded.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A symmetric subset S of Z_n \ {0} with S = -S, stored as the full sorted
/// element list. The generator half-set is derived on demand.
class ConnectionSet {
 public:
  /// Symmetric closure of `generators` in Z_n. Rejects n < 2, 0 and residues
  /// outside {1, ..., n-1}.
  static ConnectionSet make(int n, std::span<const int> generators);
  static ConnectionSet make(int n, std::initializer_list<int> generators) {
    return make(n, std::span<const int>(generators.begin(), generators.size()));
  }

  int order() const { return n_; }
  const std::vector<int>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool contains(int residue) const;

  /// Elements a with 1 <= a <= floor((n-1)/2); the paper's a_1 < ... < a_s.
  std::vector<int> generators() const;
  /// Number of generators s (the self-inverse element n/2 is not counted).
  int generator_count() const;
  bool has_self_inverse() const;

  friend bool operator==(const ConnectionSet&, const ConnectionSet&) = default;
  friend auto operator<=>(const ConnectionSet& a, const ConnectionSet& b) {
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    return a.elements_ <=> b.elements_;
  }

 private:
  ConnectionSet(int n, std::vector<int> elements) : n_(n), elements_(std::move(elements)) {}

  int n_ = 0;
  std::vector<int> elements_;
};

/// For n = 2k and a set whose generators all lie in {1, ..., k-1}, returns the
/// set generated by {k - a}. Rejects odd n and sets containing k.
ConnectionSet complement_shift_set(const ConnectionSet& cs);

/// Cay(Z_n, S): vertex i is adjacent to j iff (j - i) mod n lies in S.
class CirculantGraph {
 public:
  explicit CirculantGraph(ConnectionSet cs) : cs_(std::move(cs)) {}
  CirculantGraph(int n, std::initializer_list<int> generators)
      : cs_(ConnectionSet::make(n, generators)) {}

  const ConnectionSet& connection_set() const { return cs_; }
  int order() const { return cs_.order(); }
  int degree() const { return static_cast<int>(cs_.size()); }

  /// 0/1 first row of the adjacency matrix.
  std::vector<int> first_row() const;
  /// Dense n x n adjacency matrix, row-major.
  std::vector<std::vector<int>> adjacency_matrix() const;

  friend bool operator==(const CirculantGraph&, const CirculantGraph&) = default;

 private:
  ConnectionSet cs_;
};

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;

  int order() const { return positive + negative + zero; }
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

enum class Tri { yes, no, unknown };
std::string to_string(Tri t);

struct PairVerdict {
  Tri isomorphic = Tri::unknown;
  /// Multiplier q with q*S1 = S2 when one was found.
  std::optional<int> multiplier;
  bool cospectral = false;
  /// Equal even power sums, i.e. char(A1^2) = char(A2^2).
  bool singularly_cospectral = false;
  /// Equal multisets of nonzero |eigenvalues| (char(A^2) / x^nullity).
  bool equal_nonzero_abs_spectrum = false;
  bool same_inertia = false;
  Inertia inertia1;
  Inertia inertia2;

  bool ncsc() const { return equal_nonzero_abs_spectrum && !cospectral; }
};

std::string verdict_class(const PairVerdict& v);

bool is_prime(std::int64_t n);

}  // namespace circspec
