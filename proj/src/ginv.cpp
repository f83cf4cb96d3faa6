#include <strata/ginv.hpp>

#include <strata/bruhat.hpp>
#include <strata/exactmat.hpp>
#include <strata/stratmap.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace strata {

namespace {

int half_size(const Permutation& sigma, const char* who) {
    if (sigma.size() % 2 != 0)
        throw std::invalid_argument(std::string(who) + ": permutation must lie in S_2n");
    return static_cast<int>(sigma.size()) / 2;
}

} // namespace

Permutation sigma_from_rho(const PartialPermutation& rho) {
    int n = rho.n();
    int t = rho.rank();
    std::vector<char> inRow(n + 1, 0), inCol(n + 1, 0);
    for (auto [r, c] : rho.ones()) {
        inRow[r] = 1;
        inCol[c] = 1;
    }
    std::vector<int> rbar, cbar;
    for (int k = 1; k <= n; ++k) {
        if (!inRow[k]) rbar.push_back(k);
        if (!inCol[k]) cbar.push_back(k);
    }
    std::vector<int> w(2 * n, 0);
    for (int k = 1; k <= t; ++k) w[k - 1] = k;
    // missing columns of rho escape through the NE block, NW to SE
    for (std::size_t k = 0; k < cbar.size(); ++k) w[t + k] = n + cbar[k];
    // missing rows enter through the SW block
    for (std::size_t k = 0; k < rbar.size(); ++k) w[n + rbar[k] - 1] = t + 1 + static_cast<int>(k);
    for (auto [r, c] : rho.ones()) w[n + r - 1] = n + c;
    return Permutation(w);
}

PartialPermutation rho_from_sigma(const Permutation& sigma) {
    int n = half_size(sigma, "rho_from_sigma");
    std::vector<std::pair<int, int>> ones;
    for (int i = n + 1; i <= 2 * n; ++i)
        if (sigma(i) > n) ones.push_back({i - n, sigma(i) - n});
    return PartialPermutation(n, ones);
}

bool is_g_invariant(const Permutation& sigma) {
    int n = half_size(sigma, "is_g_invariant");
    for (auto [i, j] : diagram_and_essential(sigma).essential)
        if (i < n || j < n) return false;
    return true;
}

bool descent_criterion(const Permutation& sigma, DescentVariant variant) {
    int n = half_size(sigma, "descent_criterion");
    int hi = variant == DescentVariant::literal ? n : n - 1;
    for (int d : sigma.descents())
        if (d <= hi) return false;
    for (int d : sigma.inverse().descents())
        if (d <= hi) return false;
    return true;
}

PartialPermutation rho_transpose_w0(const PartialPermutation& rho) {
    std::vector<std::pair<int, int>> ones;
    for (auto [i, j] : rho.ones()) ones.push_back({j, rho.n() + 1 - i});
    return PartialPermutation(rho.n(), ones);
}

bool matrix_closure_membership(const QMatrix& x, const PartialPermutation& tau) {
    int n = tau.n();
    if (x.rows() != n || x.cols() != n)
        throw std::invalid_argument("matrix_closure_membership: matrix must be n x n");
    QMatrix t = partial_perm_matrix(tau);
    for (int i = 0; i <= n; ++i) {
        for (int j = 0; j <= n; ++j) {
            // last n-j rows, first n-i columns
            if (rank(x.submatrix(j, n, 0, n - i)) > rank(t.submatrix(j, n, 0, n - i)))
                return false;
        }
    }
    return true;
}

std::pair<bool, bool> fiber_check(const QMatrix& x, const PartialPermutation& rho) {
    int n = rho.n();
    FlagPoint p{n, QMatrix::identity(n), x};
    bool viaStratum = stratum_membership(p, sigma_from_rho(rho));
    bool viaClosure = matrix_closure_membership(x, rho_transpose_w0(rho));
    if (viaStratum != viaClosure)
        throw std::runtime_error("fiber_check: stratum membership and matrix closure disagree");
    return {viaStratum, viaClosure};
}

std::pair<Permutation, Permutation> special_sigmas(int n) {
    if (n < 1) throw std::invalid_argument("special_sigmas: n must be positive");
    std::vector<int> gs, spr;
    for (int i = 1; i <= n; ++i) gs.push_back(i);
    for (int i = 2 * n; i > n; --i) gs.push_back(i);
    for (int i = 1; i < n; ++i) spr.push_back(i);
    for (int i = 2 * n; i >= n; --i) spr.push_back(i);
    return {Permutation(gs), Permutation(spr)};
}

std::vector<Permutation> gs_divisors(int n) {
    Permutation gs = special_sigmas(n).first;
    std::vector<Permutation> out;
    for (const auto& w : upper_covers(gs))
        if (in_ideal(w)) out.push_back(w);
    for (const auto& w : out) {
        bool dominates = false;
        for (int i = 1; i <= n && !dominates; ++i)
            dominates = bruhat_leq(Permutation::adjacent(2 * n, i), w);
        if (!dominates)
            throw std::runtime_error("gs_divisors: cover " + w.str() +
                                     " fails to dominate every s_i with i <= n");
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::pair<Permutation, PartialPermutation>> g_invariant_catalog(int n) {
    std::vector<std::pair<Permutation, PartialPermutation>> out;
    for (const auto& rho : all_partial_permutations(n)) out.push_back({sigma_from_rho(rho), rho});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

} // namespace strata
