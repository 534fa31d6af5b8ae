#include <doctest.h>

#include <random>

#include "circspec/prime.hpp"
#include "circspec/spectra.hpp"
#include "support/oracles.hpp"

namespace pr = circspec::prime;
using circspec::CirculantGraph;
using circspec::ConnectionSet;
using circspec::DomainError;

namespace {

std::vector<mpz_class> row(std::initializer_list<long> v) {
  std::vector<mpz_class> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// First row of A^2 from the dense product.
std::vector<mpz_class> dense_square_row(const CirculantGraph& g) {
  const auto a = circspec::oracle::to_mpz(g.adjacency_matrix());
  return circspec::oracle::multiply(a, a)[0];
}

std::vector<int> indicator(int n, const std::vector<int>& elements) {
  std::vector<int> r(static_cast<std::size_t>(n), 0);
  for (int e : elements) r[static_cast<std::size_t>(e)] = 1;
  return r;
}

}  // namespace

TEST_CASE("reconstruction examples") {
  CHECK(pr::reconstruct_from_square(5, row({2, 0, 1, 1, 0})).elements() == std::vector<int>{1, 4});
  CHECK(dense_square_row(CirculantGraph(5, {1})) == row({2, 0, 1, 1, 0}));
  const CirculantGraph g7(7, {1, 2});
  CHECK(pr::reconstruct_from_square(7, dense_square_row(g7)).elements() == std::vector<int>{1, 2, 5, 6});
  CHECK(pr::reconstruct_from_square(3, row({2, 1, 1})).elements() == std::vector<int>{1, 2});
  CHECK_THROWS_AS(pr::reconstruct_from_square(6, row({2, 0, 1, 0, 1, 0})), DomainError);
  CHECK_THROWS_AS(pr::reconstruct_from_square(5, row({2, 1, 0, 0, 0})), DomainError);
  CHECK_THROWS_AS(pr::reconstruct_from_square(3, row({2, -1, -1})), DomainError);
}

TEST_CASE("reconstruction round trip against the dense square") {
  std::mt19937 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 3 + 2 * static_cast<int>(rng() % 49);
    const CirculantGraph g(circspec::oracle::random_set(n, rng));
    const auto square = dense_square_row(g);
    CHECK(square == circspec::spectra::walk_row(g, 2));
    CHECK(pr::reconstruct_from_square(n, square) == g.connection_set());
  }
}

TEST_CASE("Turner permutation") {
  CHECK(pr::turner_permutation(5, 2) == std::vector<int>{0, 2, 4, 1, 3});
  CHECK(pr::turner_permutation(7, 1) == std::vector<int>{0, 1, 2, 3, 4, 5, 6});
  CHECK_THROWS_AS(pr::turner_permutation(9, 2), DomainError);
  CHECK_THROWS_AS(pr::turner_permutation(7, 7), DomainError);
  CHECK_THROWS_AS(pr::turner_permutation(7, 0), DomainError);
  const auto sigma = pr::turner_permutation(5, 2);
  CHECK(pr::conjugate(CirculantGraph(5, {1}).adjacency_matrix(), sigma) == CirculantGraph(5, {2}).adjacency_matrix());
}

TEST_CASE("conjugation by multipliers maps circulants to circulants of qS") {
  std::mt19937 rng(42);
  for (int p : {3, 5, 7, 11, 13}) {
    for (int trial = 0; trial < 6; ++trial) {
      const CirculantGraph g(circspec::oracle::random_set(p, rng));
      for (int q = 1; q < p; ++q) {
        const auto b = pr::conjugate(g.adjacency_matrix(), pr::turner_permutation(p, q));
        std::vector<int> scaled;
        for (int e : g.connection_set().elements()) scaled.push_back(q * e % p);
        CHECK(b[0] == indicator(p, scaled));
        for (int i = 0; i < p; ++i) {
          for (int j = 0; j < p; ++j) CHECK(b[i][j] == b[(i + 1) % p][(j + 1) % p]);
        }
      }
    }
  }
}

TEST_CASE("multiplier isomorphism") {
  CHECK(pr::multiplier_isomorphic(CirculantGraph(5, {1}), CirculantGraph(5, {2})) == 2);
  CHECK(pr::multiplier_isomorphic(CirculantGraph(7, {1}), CirculantGraph(7, {3})) == 3);
  const CirculantGraph g(13, {1, 5});
  CHECK(pr::multiplier_isomorphic(g, g) == 1);
  CHECK_FALSE(pr::multiplier_isomorphic(CirculantGraph(7, {1}), CirculantGraph(7, {1, 2})).has_value());
  CHECK_THROWS_AS(pr::multiplier_isomorphic(CirculantGraph(9, {1}), CirculantGraph(9, {2})), DomainError);
  CHECK(pr::find_multiplier(ConnectionSet::make(12, {1}), ConnectionSet::make(12, {5})) == 5);
  CHECK_FALSE(pr::find_multiplier(ConnectionSet::make(12, {1}), ConnectionSet::make(12, {2})).has_value());
}

TEST_CASE("multiplier certificates conjugate one matrix onto the other") {
  std::mt19937 rng(43);
  for (int p : {5, 7, 11, 13}) {
    for (int trial = 0; trial < 30; ++trial) {
      const CirculantGraph g1(circspec::oracle::random_set(p, rng)), g2(circspec::oracle::random_set(p, rng));
      if (const auto q = pr::multiplier_isomorphic(g1, g2)) {
        CHECK(pr::conjugate(g1.adjacency_matrix(), pr::turner_permutation(p, *q)) == g2.adjacency_matrix());
      }
    }
  }
}

TEST_CASE("singular cospectrality implies isomorphism at prime order") {
  const std::pair<int, std::size_t> expected[] = {{3, 2}, {5, 4}, {7, 8}, {11, 32}, {13, 64}};
  for (auto [p, sets] : expected) {
    const auto r = pr::verify_sc_implies_iso(p);
    CHECK(r.p == p);
    CHECK(r.num_sets == sets);
    CHECK(r.violations.empty());
    CHECK(r.num_signature_groups <= r.num_sets);
  }
  CHECK_THROWS_AS(pr::verify_sc_implies_iso(17, 13), circspec::BudgetExceeded);
  CHECK_THROWS_AS(pr::verify_sc_implies_iso(9), DomainError);
}
