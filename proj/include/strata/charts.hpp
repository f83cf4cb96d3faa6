#ifndef STRATA_CHARTS_HPP
#define STRATA_CHARTS_HPP

#include <strata/permutation.hpp>
#include <strata/qmatrix.hpp>
#include <strata/rng.hpp>
#include <strata/stratmap.hpp>

#include <utility>
#include <vector>

namespace strata {

// Off-diagonal support cells for a unipotent subgroup.  Transitive
// closure ((i,j),(j,k) present forces (i,k)) makes I + span(cells) a
// group under multiplication.
class SupportPattern {
public:
    SupportPattern(int n, std::vector<std::pair<int, int>> cells);

    int n() const { return n_; }
    const std::vector<std::pair<int, int>>& cells() const { return cells_; }
    bool contains(int i, int j) const;
    // m is unipotent and supported on the pattern
    bool admits(const QMatrix& m) const;

    bool operator==(const SupportPattern& o) const { return n_ == o.n_ && cells_ == o.cells_; }

private:
    int n_;
    std::vector<std::pair<int, int>> cells_; // sorted, 1-based
};

// E+ and E- of the conjugated lower unipotent group pi N- pi^{-1}: the
// upper cells {(i,j) : i < j, pi(i) > pi(j)} and the lower cells
// {(i,j) : i > j, pi(i) > pi(j)}
std::pair<SupportPattern, SupportPattern> patterns(const Permutation& pi);

// supports of the chart coordinates a' and d' (both unit lower):
// {(i,j) : i > j, pi^{-1}(i) < pi^{-1}(j)} resp. the complementary lower cells
SupportPattern aprime_pattern(const Permutation& pi);
SupportPattern dprime_pattern(const Permutation& pi);

QMatrix random_unipotent(Rng& rng, const SupportPattern& pattern);

// Factor h in pi N- pi^{-1} both ways, h = b- b+ = c+ c-, with each
// factor supported in its half of the pattern.  Returns (b+, c-).
std::pair<QMatrix, QMatrix> phi(const Permutation& pi, const QMatrix& h);

// inverse of phi: recovers h from (b+, c-) by the UL solve on c- b+^{-1}
QMatrix phi_inv(const Permutation& pi, const QMatrix& bPlus, const QMatrix& cMinus);

// Coordinates of a point in the chart around the point stratum of pi.
// The coordinate matrix [[Z, pi a'],[w_0 d' pi^{-1}, 0]] represents the
// same double coset as the assembled point.
class ChartCoords {
public:
    ChartCoords(Permutation pi, QMatrix z, QMatrix aPrime, QMatrix dPrime);

    const Permutation& pi() const { return pi_; }
    const QMatrix& z() const { return z_; }
    const QMatrix& a_prime() const { return aPrime_; }
    const QMatrix& d_prime() const { return dPrime_; }

    bool operator==(const ChartCoords& o) const {
        return pi_ == o.pi_ && z_ == o.z_ && aPrime_ == o.aPrime_ && dPrime_ == o.dPrime_;
    }

private:
    Permutation pi_;
    QMatrix z_, aPrime_, dPrime_;
};

QMatrix coordinate_matrix(const ChartCoords& coords);

// the flag of p lies in pi N- B/B, i.e. all leading principal minors of
// pi^{-1} g are nonzero
bool chart_membership(const Permutation& pi, const FlagPoint& p);

ChartCoords chart_inverse(const Permutation& pi, const FlagPoint& p);
FlagPoint chart_forward(const ChartCoords& coords);

// (v_of_point(p), double coset type of the coordinate matrix); throws if
// the two ever disagree
std::pair<Permutation, Permutation> stratified_check(const Permutation& pi, const FlagPoint& p);

} // namespace strata

#endif
