#pragma once

// Prime-order circulants: reconstruction of S from the first row of A^2,
// multiplier permutations, and the exhaustive check that singular
// cospectrality forces isomorphism.

#include <gmpxx.h>

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "circspec/core.hpp"

namespace circspec::prime {

/// S = { j * 2^{-1} mod n : square_row[j] odd } for odd n. The row must be
/// symmetric (row[j] = row[n-j]) and non-negative.
ConnectionSet reconstruct_from_square(int n, std::span<const mpz_class> square_row);

/// The relabelling i -> q i mod p, as the image list of 0..p-1.
std::vector<int> turner_permutation(int p, int q);

/// B with B[sigma(i)][sigma(j)] = A[i][j].
std::vector<std::vector<int>> conjugate(const std::vector<std::vector<int>>& a,
                                        std::span<const int> sigma);

/// Least unit q of Z_n with q S1 = S2, for any order n.
std::optional<int> find_multiplier(const ConnectionSet& s1, const ConnectionSet& s2);

/// Least q in {1, ..., p-1} with q S1 = S2 at odd prime order p; rejects
/// composite or even order.
std::optional<int> multiplier_isomorphic(const CirculantGraph& g1, const CirculantGraph& g2);

struct Violation {
  ConnectionSet set1;
  ConnectionSet set2;
};

struct VerifyReport {
  int p = 0;
  std::size_t num_sets = 0;
  std::size_t num_signature_groups = 0;
  std::size_t pairs_checked = 0;
  /// Pairs sharing p_1..p_p (cospectral), each checked for a multiplier.
  std::size_t cospectral_pairs_checked = 0;
  std::vector<Violation> violations;
};

/// Enumerates all 2^{(p-1)/2} symmetric sets on Z_p, groups them by the even
/// power sums p_2..p_2p and requires a multiplier between every two members
/// of a group. Rejects p above `max_p`.
VerifyReport verify_sc_implies_iso(int p, int max_p = 31);

}  // namespace circspec::prime
