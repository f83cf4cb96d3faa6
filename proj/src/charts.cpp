#include <strata/charts.hpp>

#include <strata/exactmat.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace strata {

SupportPattern::SupportPattern(int n, std::vector<std::pair<int, int>> cells)
    : n_(n), cells_(std::move(cells)) {
    if (n_ < 1) throw std::invalid_argument("SupportPattern: size must be positive");
    std::sort(cells_.begin(), cells_.end());
    for (std::size_t k = 0; k < cells_.size(); ++k) {
        auto [i, j] = cells_[k];
        if (i < 1 || i > n_ || j < 1 || j > n_)
            throw std::invalid_argument("SupportPattern: cell out of range");
        if (i == j) throw std::invalid_argument("SupportPattern: diagonal cell");
        if (k > 0 && cells_[k] == cells_[k - 1])
            throw std::invalid_argument("SupportPattern: duplicate cell");
    }
    for (auto [i, j] : cells_)
        for (auto [j2, k] : cells_)
            if (j == j2 && k != i && !contains(i, k))
                throw std::invalid_argument("SupportPattern: not transitively closed");
}

bool SupportPattern::contains(int i, int j) const {
    return std::binary_search(cells_.begin(), cells_.end(), std::make_pair(i, j));
}

bool SupportPattern::admits(const QMatrix& m) const {
    if (m.rows() != n_ || m.cols() != n_) return false;
    for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
            const Rational& v = m.at(i - 1, j - 1);
            if (i == j) {
                if (v != 1) return false;
            } else if (v != 0 && !contains(i, j)) {
                return false;
            }
        }
    }
    return true;
}

std::pair<SupportPattern, SupportPattern> patterns(const Permutation& pi) {
    int n = static_cast<int>(pi.size());
    std::vector<std::pair<int, int>> plus, minus;
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            if (i < j && pi(i) > pi(j)) plus.push_back({i, j});
            if (i > j && pi(i) > pi(j)) minus.push_back({i, j});
        }
    }
    return {SupportPattern(n, plus), SupportPattern(n, minus)};
}

SupportPattern aprime_pattern(const Permutation& pi) {
    int n = static_cast<int>(pi.size());
    Permutation inv = pi.inverse();
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            if (inv(i) < inv(j)) cells.push_back({i, j});
    return SupportPattern(n, cells);
}

SupportPattern dprime_pattern(const Permutation& pi) {
    int n = static_cast<int>(pi.size());
    Permutation inv = pi.inverse();
    std::vector<std::pair<int, int>> cells;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j)
            if (inv(i) > inv(j)) cells.push_back({i, j});
    return SupportPattern(n, cells);
}

QMatrix random_unipotent(Rng& rng, const SupportPattern& pattern) {
    QMatrix m = QMatrix::identity(pattern.n());
    for (auto [i, j] : pattern.cells()) {
        long v = rng.range(-9, 9);
        if (v == 0) v = 1; // keep the support faithful to the pattern
        m.at(i - 1, j - 1) = v;
    }
    return m;
}

namespace {

void require_patterned(const QMatrix& m, const SupportPattern& pattern, const char* who,
                       const char* which) {
    if (!pattern.admits(m))
        throw std::invalid_argument(std::string(who) + ": " + which +
                                    " is not unipotent with support in its pattern");
}

} // namespace

std::pair<QMatrix, QMatrix> phi(const Permutation& pi, const QMatrix& h) {
    auto [eplus, eminus] = patterns(pi);
    int n = static_cast<int>(pi.size());
    if (h.rows() != n || h.cols() != n)
        throw std::invalid_argument("phi: matrix size does not match pi");
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            const Rational& v = h.at(i - 1, j - 1);
            if (i == j) {
                if (v != 1) throw std::invalid_argument("phi: input is not unipotent");
            } else if (v != 0 && !eplus.contains(i, j) && !eminus.contains(i, j)) {
                throw std::invalid_argument("phi: input support escapes the pattern of " +
                                            pi.str());
            }
        }
    }
    auto [bMinus, bPlus] = lu_unipotent(h);
    auto [cPlus, cMinus] = ul_unipotent(h);
    /* factor supports are forced by the group structure of the pattern;
       a violation here means the patterns and the factorization disagree
       on conventions, not that the data is bad */
    if (!eplus.admits(bPlus) || !eminus.admits(bMinus) || !eplus.admits(cPlus) ||
        !eminus.admits(cMinus))
        throw std::runtime_error("phi: factor support escapes the pattern of " + pi.str());
    return {bPlus, cMinus};
}

QMatrix phi_inv(const Permutation& pi, const QMatrix& bPlus, const QMatrix& cMinus) {
    auto [eplus, eminus] = patterns(pi);
    require_patterned(bPlus, eplus, "phi_inv", "b_plus");
    require_patterned(cMinus, eminus, "phi_inv", "c_minus");
    QMatrix m = cMinus * inverse(bPlus);
    auto [uTilde, lTilde] = ul_unipotent(m);
    QMatrix h = lTilde * bPlus; // b_minus = lTilde, c_plus = uTilde^{-1}
    auto [rb, rc] = phi(pi, h);
    if (rb != bPlus || rc != cMinus)
        throw std::runtime_error("phi_inv: phi of the reassembled matrix differs");
    return h;
}

ChartCoords::ChartCoords(Permutation pi, QMatrix z, QMatrix aPrime, QMatrix dPrime)
    : pi_(std::move(pi)), z_(std::move(z)), aPrime_(std::move(aPrime)),
      dPrime_(std::move(dPrime)) {
    int n = static_cast<int>(pi_.size());
    if (z_.rows() != n || z_.cols() != n)
        throw std::invalid_argument("ChartCoords: Z must be n x n");
    require_patterned(aPrime_, aprime_pattern(pi_), "ChartCoords", "a_prime");
    require_patterned(dPrime_, dprime_pattern(pi_), "ChartCoords", "d_prime");
}

QMatrix coordinate_matrix(const ChartCoords& coords) {
    int n = static_cast<int>(coords.pi().size());
    QMatrix p = permutation_matrix(coords.pi());
    return block2x2(coords.z(), p * coords.a_prime(),
                    w0_matrix(n) * coords.d_prime() * inverse(p), QMatrix(n, n));
}

bool chart_membership(const Permutation& pi, const FlagPoint& p) {
    int n = p.n;
    if (static_cast<int>(pi.size()) != n)
        throw std::invalid_argument("chart_membership: pi must lie in S_n");
    if (n < 1 || p.g.rows() != n || p.g.cols() != n || p.x.rows() != n || p.x.cols() != n)
        throw std::invalid_argument("chart_membership: point matrices must be n x n");
    if (rank(p.g) != n) throw std::invalid_argument("chart_membership: flag matrix is singular");
    QMatrix m = inverse(permutation_matrix(pi)) * p.g;
    for (int k = 1; k <= n; ++k)
        if (det(m.submatrix(0, k, 0, k)) == 0) return false;
    return true;
}

ChartCoords chart_inverse(const Permutation& pi, const FlagPoint& p) {
    if (!chart_membership(pi, p))
        throw std::runtime_error("chart_inverse: point lies outside the chart of " + pi.str());
    QMatrix pm = permutation_matrix(pi);
    QMatrix pmInv = inverse(pm);
    // unique N- representative of the flag inside the chart
    QMatrix gN = lu_lower_unit(pmInv * p.g).first;
    QMatrix h = pm * gN * pmInv;
    auto [bPlus, cMinus] = phi(pi, h);
    QMatrix bMinus = h * inverse(bPlus);
    QMatrix cPlus = h * inverse(cMinus);
    QMatrix z = inverse(bMinus) * p.x * cPlus;
    QMatrix aPrime = pmInv * bPlus * pm;
    QMatrix dPrime = inverse(pmInv * cMinus * pm);
    return ChartCoords(pi, z, aPrime, dPrime);
}

FlagPoint chart_forward(const ChartCoords& coords) {
    int n = static_cast<int>(coords.pi().size());
    QMatrix pm = permutation_matrix(coords.pi());
    QMatrix pmInv = inverse(pm);
    QMatrix bPlus = pm * coords.a_prime() * pmInv;
    QMatrix cMinus = pm * inverse(coords.d_prime()) * pmInv;
    QMatrix h = phi_inv(coords.pi(), bPlus, cMinus);
    QMatrix gN = pmInv * h * pm;
    QMatrix bMinus = h * inverse(bPlus);
    QMatrix cPlus = h * inverse(cMinus);
    QMatrix x = bMinus * coords.z() * inverse(cPlus);
    return FlagPoint{n, pm * gN, x};
}

std::pair<Permutation, Permutation> stratified_check(const Permutation& pi, const FlagPoint& p) {
    ChartCoords coords = chart_inverse(pi, p);
    Permutation fromPoint = v_of_point(p);
    Permutation fromChart = coset_perm_bminus_b(coordinate_matrix(coords));
    if (fromPoint != fromChart)
        throw std::runtime_error("stratified_check: the point and its chart coordinates lie in "
                                 "different double cosets");
    return {fromPoint, fromChart};
}

} // namespace strata
