#ifndef STRATA_GINV_HPP
#define STRATA_GINV_HPP

#include <strata/permutation.hpp>
#include <strata/qmatrix.hpp>

#include <utility>
#include <vector>

namespace strata {

// The G-invariant strata are indexed by partial permutations rho on [n].
// sigma_from_rho builds the labeling permutation in S_2n out of four
// blocks: an identity of size rank(rho) in the NW corner, NW/SE fills
// through the missing rows and columns of rho, and rho itself in the SE
// block.  rho_from_sigma reads the SE block back off.
Permutation sigma_from_rho(const PartialPermutation& rho);
PartialPermutation rho_from_sigma(const Permutation& sigma);

// normative test: every essential box of sigma sits in the SE quadrant
bool is_g_invariant(const Permutation& sigma);

// Descent test for G-invariance.  The literal variant demands that sigma
// and sigma^{-1} have no descent in [1, n]; it wrongly rejects some
// G-invariant sigma (already 3412 for n = 2).  The corrected variant
// uses [1, n-1] and matches the essential-box test.
enum class DescentVariant { literal, corrected };
bool descent_criterion(const Permutation& sigma, DescentVariant variant);

// the partial permutation tau with matrix rho^T w_0
PartialPermutation rho_transpose_w0(const PartialPermutation& rho);

// X lies in the closure of B tau B in Mat_n: every southwest rectangle
// of X has rank at most the matching rectangle of the matrix of tau
bool matrix_closure_membership(const QMatrix& x, const PartialPermutation& tau);

// Membership of (standard flag, X) in the stratum of sigma_from_rho
// versus membership of X in the closure of B rho^T w_0 B.  Returns both
// answers and throws if they ever differ.
std::pair<bool, bool> fiber_check(const QMatrix& x, const PartialPermutation& rho);

// (sigma_GS, sigma_Spr): the strata whose fibers over Fl(n) are the
// Grothendieck-Springer family b and the Springer family n
std::pair<Permutation, Permutation> special_sigmas(int n);

// Bruhat covers of sigma_GS inside the stratification ideal, sorted.
// Each one is checked to dominate some s_i with i <= n.
std::vector<Permutation> gs_divisors(int n);

// all (sigma, rho) pairs for a given n, ordered by sigma
std::vector<std::pair<Permutation, PartialPermutation>> g_invariant_catalog(int n);

} // namespace strata

#endif
