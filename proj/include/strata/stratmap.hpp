#ifndef STRATA_STRATMAP_HPP
#define STRATA_STRATMAP_HPP

#include <strata/bruhat.hpp>
#include <strata/exactmat.hpp>
#include <strata/permutation.hpp>
#include <strata/qmatrix.hpp>
#include <strata/rng.hpp>

#include <string>
#include <vector>

namespace strata {

// A point of Fl(n) x Mat_n.  The flag F^i is the span of the first i
// columns of g; any g b with b invertible upper triangular represents the
// same point.
struct FlagPoint {
    int n = 0;
    QMatrix g;
    QMatrix x;
};

FlagPoint random_point(Rng& rng, int n);

// span(e_1..e_i) and span(e_{n-j+1}..e_n) as column span matrices
QMatrix standard_subspace(int n, int i);
QMatrix antistandard_subspace(int n, int j);

// the 2n x 2n block matrix [[X, g], [w_0 g^{-1}, 0]]
QMatrix assemble(const FlagPoint& p);

// the B-_2n x B_2n double coset type of assemble(p)
Permutation v_of_point(const FlagPoint& p);

// The four families of rank statistics attached to (F, X), one per
// quadrant of the big matrix, computed purely by subspace arithmetic.
// Grids are 1-based on [1,n] x [1,n]; row and column 0 are unused.
//   nw[i][j] = rank(E^i -> X -> V/E_j)
//   ne[i][j] = dim(im X + F^j + E_{n-i}) - (n-i) - j
//   sw[i][j] = dim X(E^j cap F^{n-i}) - dim(E^j cap F^{n-i})   (<= 0)
//   se[i][j] = rank(F^{n-i} -> X -> V/F^j)
struct QuadrantStats {
    int n = 0;
    std::vector<std::vector<int>> nw, ne, sw, se;
};
QuadrantStats quadrant_statistics(const FlagPoint& p);

// p lies in the closure of the stratum labeled w, i.e. w <= v_of_point(p)
bool stratum_membership(const FlagPoint& p, const Permutation& w);

// The divisor labeled s_k, k in [1, 2n-1], tested by its geometric
// condition: det of the NW k x k corner of X for k <= n, a drop of
// rank(F^{n-i} -> X -> V/F^i) for k = n + i.  Cross-checked against
// Bruhat membership at s_k on every call.
bool divisor_test(const FlagPoint& p, int k);

// v at the zero dimensional stratum (pi-flag, X = 0)
Permutation point_stratum_perm(const Permutation& pi);
std::vector<Permutation> point_stratum_generators(int n);

int space_dimension(int n); // dim Fl(n) x Mat_n = n^2 + n(n-1)/2
int stratum_dimension(const Permutation& w);

// membership in the ideal generated by the point strata of S_2n
bool in_ideal(const Permutation& w);
std::string ideal_rejection_message(const Permutation& w);

// the full stratification poset; n > 4 makes the ideal inside S_2n very
// large, so it is refused unless allow_large is set
BruhatPoset stratification_poset(int n, bool allow_large = false);

// One rank condition per essential box of w, located in the 2n x 2n grid
// and classified by quadrant; text is a readable rendering, the tuple
// (quadrant, i, j, bound) is the normative content.
struct StratumCondition {
    std::string quadrant;
    int i = 0, j = 0;
    int bound = 0;
    std::string text;
};
std::vector<StratumCondition> readable_conditions(const Permutation& w);

} // namespace strata

#endif
