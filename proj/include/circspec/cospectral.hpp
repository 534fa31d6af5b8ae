#pragma once

// Cospectrality and singular-cospectrality deciders, the NCSC families on
// Z_{2k}, closed-form inertia counts and certified bound checks.

#include <functional>
#include <utility>
#include <vector>

#include "circspec/core.hpp"
#include "circspec/polynomial.hpp"
#include "circspec/spectra.hpp"

namespace circspec::cospectral {

struct GraphPair {
  CirculantGraph first;
  CirculantGraph second;
};

/// Exact spectral data of one graph, reusable across many pair decisions.
struct GraphProfile {
  CirculantGraph graph;
  spectra::PowerSums sums;  ///< p_1 .. p_2n
  Inertia inertia;
  int nullity = 0;
  /// char(A^2) / x^nullity: the nonzero squared eigenvalues.
  IntPolynomial square_nonzero;
};

GraphProfile profile(const CirculantGraph& g, spectra::Refinement refine = spectra::default_refinement());

/// Equal characteristic polynomials, decided on p_1..p_n.
bool is_cospectral(const CirculantGraph& g1, const CirculantGraph& g2);
/// Equal even power sums p_2..p_2n, i.e. char(A1^2) = char(A2^2).
bool is_singularly_cospectral(const CirculantGraph& g1, const CirculantGraph& g2);

PairVerdict classify_pair(const CirculantGraph& g1, const CirculantGraph& g2);
PairVerdict classify_profiles(const GraphProfile& a, const GraphProfile& b);

/// (S1, S2) with S2 = complement_shift_set(S1) on n = 2k; generators in {1, ..., k-1}.
GraphPair family_lemma21(int n, std::span<const int> generators);
/// S1 = {1, 2, 2k-2, 2k-1}, S2 = {k-2, k-1, k+1, k+2}; needs k >= 6.
GraphPair family_thm31(int k);
/// k = 4 alpha + 9, s = 2 alpha + 4, S1 = <1..s>, S2 = <k-s..k-1>.
GraphPair family_thm32(int alpha);
/// S1 = <1..s>, S2 = <k-s..k-1> on n = 2k; needs k >= 6 and 2 <= s <= k-3.
GraphPair family_thm44(int k, int s);

struct SignCounts {
  int positive = 0;
  int negative = 0;
  friend bool operator==(const SignCounts&, const SignCounts&) = default;
};

/// Closed-form counts of positive and negative lambda_{2r-1}, r = 1..k, for
/// the family_thm31 pair.
SignCounts pk_nk_closed_form(int k);

/// s(2k-2s-1)/k < lambda_1 < 7s(2k-2s-1)/(4k) for S = <1..s> on n = 2k, with
/// lambda_1 enclosed to width at most 1e-12. Needs k >= 6, 2 <= s <= (k-1)/2.
bool lambda1_bounds_check(int k, int s);

/// lambda_{2j+1} over <1..s> equals the same eigenvalue over <1..k-s-1>;
/// decided exactly and cross-checked by enclosures.
bool odd_eigen_identity_check(int k, int s, int j);

/// lambda_1 > 0 and lambda_k + lambda_1 > 0 over <1..s>, and beta_1 < 0 over
/// <k-s..k-1>, all certified.
bool sign_lemma_checks(int k, int s);

struct SearchRecord {
  ConnectionSet set1;
  ConnectionSet set2;
  PairVerdict verdict;
};

struct SearchOptions {
  int workers = 1;
  std::size_t pair_cap = 5'000'000;
};

struct SearchSummary {
  int n = 0;
  int max_s = 0;
  std::size_t sets = 0;
  std::size_t pairs_total = 0;
  std::size_t pairs_examined = 0;
  std::size_t ncsc_found = 0;
  bool truncated = false;
};

/// All symmetric sets on Z_n with 1 <= s <= max_s generators from
/// {1, ..., floor((n-1)/2)}, in ascending lexicographic order.
std::vector<ConnectionSet> enumerate_sets(int n, int max_s);

/// Classifies every unordered pair of distinct sets from enumerate_sets and
/// emits the NCSC ones in lexicographic pair order, independent of worker count.
SearchSummary search_ncsc(int n, int max_s, const std::function<void(const SearchRecord&)>& emit,
                          SearchOptions options = {});

}  // namespace circspec::cospectral
