#ifndef STRATA_EXACTMAT_HPP
#define STRATA_EXACTMAT_HPP

#include <strata/permutation.hpp>
#include <strata/qmatrix.hpp>
#include <strata/ranktable.hpp>

#include <utility>
#include <vector>

namespace strata {

int rank(const QMatrix& m);
Rational det(const QMatrix& m);
QMatrix inverse(const QMatrix& m);

// reduced row echelon form; pivot_cols, if given, receives the 0-indexed
// pivot columns in order
QMatrix rref(const QMatrix& m, std::vector<int>* pivot_cols = nullptr);
// columns span the right kernel
QMatrix nullspace(const QMatrix& m);
// columns of m forming a basis of the column space
QMatrix col_basis(const QMatrix& m);

QMatrix first_columns(const QMatrix& m, int k);
QMatrix last_columns(const QMatrix& m, int k);
QMatrix w0_matrix(int m); // antidiagonal permutation matrix

// entry (i, j): rank of the submatrix on the first i rows and first j columns
RankTable nw_rank_table(const QMatrix& m);
// entry (i, j): rank of the submatrix on the last i rows and first j columns
RankTable sw_rank_table(const QMatrix& m);

// Bruhat position of an invertible matrix relative to (lower, upper) and
// (upper, upper) Borel pairs: the unique w with m in B- w B, resp. B w B.
Permutation coset_perm_bminus_b(const QMatrix& m);
Permutation coset_perm_b_b(const QMatrix& m);

// m = L U, L unit lower, U unit upper; requires every leading principal
// minor to equal 1
std::pair<QMatrix, QMatrix> lu_unipotent(const QMatrix& m);
// m = L U, L unit lower, U invertible upper; requires nonvanishing
// leading principal minors
std::pair<QMatrix, QMatrix> lu_lower_unit(const QMatrix& m);
// m = U L, U unit upper, L unit lower; requires every trailing principal
// minor to equal 1
std::pair<QMatrix, QMatrix> ul_unipotent(const QMatrix& m);

// subspaces are handed around as matrices whose columns span them
int subspace_dim(const QMatrix& u);
QMatrix subspace_sum(const QMatrix& u, const QMatrix& w);
QMatrix subspace_intersection(const QMatrix& u, const QMatrix& w);
QMatrix image(const QMatrix& x, const QMatrix& u);
// rank of the composite U -> V -> V/W of inclusion, x, and the quotient map
int restricted_quotient_rank(const QMatrix& x, const QMatrix& u, const QMatrix& w);

// For m in the cell B w B (B upper triangular), the unique unit upper
// triangular Ntilde supported on inversions of w with m B = Ntilde P_w B.
// Throws if m is not in the cell.
QMatrix bruhat_cell_normalize(const QMatrix& m, const Permutation& w);

} // namespace strata

#endif
