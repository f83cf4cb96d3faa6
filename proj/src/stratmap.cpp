#include <strata/stratmap.hpp>

#include <strata/random.hpp>

#include <stdexcept>

namespace strata {

namespace {

void validate_point(const FlagPoint& p, const char* who) {
    if (p.n < 1) throw std::invalid_argument(std::string(who) + ": n must be positive");
    if (p.g.rows() != p.n || p.g.cols() != p.n || p.x.rows() != p.n || p.x.cols() != p.n)
        throw std::invalid_argument(std::string(who) + ": g and X must be n x n");
    if (rank(p.g) != p.n)
        throw std::invalid_argument(std::string(who) + ": flag matrix is singular");
}

} // namespace

FlagPoint random_point(Rng& rng, int n) {
    return FlagPoint{n, random_invertible(rng, n), random_matrix(rng, n, n)};
}

QMatrix standard_subspace(int n, int i) {
    if (i < 0 || i > n) throw std::invalid_argument("standard_subspace: bad dimension");
    QMatrix m(n, i);
    for (int k = 0; k < i; ++k) m.at(k, k) = 1;
    return m;
}

QMatrix antistandard_subspace(int n, int j) {
    if (j < 0 || j > n) throw std::invalid_argument("antistandard_subspace: bad dimension");
    QMatrix m(n, j);
    for (int k = 0; k < j; ++k) m.at(n - j + k, k) = 1;
    return m;
}

QMatrix assemble(const FlagPoint& p) {
    validate_point(p, "assemble");
    int n = p.n;
    return block2x2(p.x, p.g, w0_matrix(n) * inverse(p.g), QMatrix(n, n));
}

Permutation v_of_point(const FlagPoint& p) {
    return coset_perm_bminus_b(assemble(p));
}

QuadrantStats quadrant_statistics(const FlagPoint& p) {
    validate_point(p, "quadrant_statistics");
    int n = p.n;
    QuadrantStats q;
    q.n = n;
    q.nw.assign(n + 1, std::vector<int>(n + 1, 0));
    q.ne.assign(n + 1, std::vector<int>(n + 1, 0));
    q.sw.assign(n + 1, std::vector<int>(n + 1, 0));
    q.se.assign(n + 1, std::vector<int>(n + 1, 0));

    std::vector<QMatrix> f; // f[i] spans F^i
    f.reserve(n + 1);
    for (int i = 0; i <= n; ++i) f.push_back(first_columns(p.g, i));

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            q.nw[i][j] = restricted_quotient_rank(p.x, standard_subspace(n, i),
                                                  antistandard_subspace(n, j));
            // columns of X span im X, independence not needed
            QMatrix s = subspace_sum(subspace_sum(p.x, f[j]), antistandard_subspace(n, n - i));
            q.ne[i][j] = subspace_dim(s) - (n - i) - j;
            QMatrix w = subspace_intersection(standard_subspace(n, j), f[n - i]);
            q.sw[i][j] = subspace_dim(image(p.x, w)) - subspace_dim(w);
            q.se[i][j] = restricted_quotient_rank(p.x, f[n - i], f[j]);
        }
    }
    return q;
}

bool stratum_membership(const FlagPoint& p, const Permutation& w) {
    if (static_cast<int>(w.size()) != 2 * p.n)
        throw std::invalid_argument("stratum_membership: permutation must lie in S_2n");
    /* p is in the closed stratum of w iff w <= v_of_point(p), iff the NW
       rank table of assemble(p) is bounded above by the table of w.  The
       bound only needs checking at the essential boxes of w. */
    RankTable t = nw_rank_table(assemble(p));
    RankTable rw = perm_rank_table(w);
    for (auto [i, j] : diagram_and_essential(w).essential)
        if (t.at(i, j) > rw.at(i, j)) return false;
    return true;
}

bool divisor_test(const FlagPoint& p, int k) {
    validate_point(p, "divisor_test");
    int n = p.n;
    if (k < 1 || k > 2 * n - 1)
        throw std::invalid_argument("divisor_test: index must lie in [1, 2n-1]");
    bool hit;
    if (k <= n) {
        hit = det(p.x.submatrix(0, k, 0, k)) == 0;
    } else {
        int i = k - n;
        hit = restricted_quotient_rank(p.x, first_columns(p.g, n - i), first_columns(p.g, i)) <
              n - i;
    }
    bool viaBruhat = stratum_membership(p, Permutation::adjacent(2 * n, k));
    if (hit != viaBruhat)
        throw std::runtime_error(
            "divisor_test: geometric predicate disagrees with Bruhat membership at s_" +
            std::to_string(k));
    return hit;
}

Permutation point_stratum_perm(const Permutation& pi) {
    int n = static_cast<int>(pi.size());
    Permutation inv = pi.inverse();
    std::vector<int> v(2 * n, 0);
    for (int i = 1; i <= n; ++i) v[i - 1] = n + pi(i);
    for (int i = 1; i <= n; ++i) v[n + i - 1] = inv(n + 1 - i);
    return Permutation(v);
}

std::vector<Permutation> point_stratum_generators(int n) {
    std::vector<Permutation> out;
    for (const auto& pi : all_permutations(n)) out.push_back(point_stratum_perm(pi));
    return out;
}

int space_dimension(int n) { return n * n + n * (n - 1) / 2; }

int stratum_dimension(const Permutation& w) {
    if (w.size() % 2 != 0)
        throw std::invalid_argument("stratum_dimension: permutation must lie in S_2n");
    int n = static_cast<int>(w.size()) / 2;
    return space_dimension(n) - w.length();
}

bool in_ideal(const Permutation& w) {
    if (w.size() % 2 != 0) throw std::invalid_argument("in_ideal: permutation must lie in S_2n");
    int n = static_cast<int>(w.size()) / 2;
    for (const auto& g : point_stratum_generators(n))
        if (bruhat_leq(w, g)) return true;
    return false;
}

std::string ideal_rejection_message(const Permutation& w) {
    if (in_ideal(w)) throw std::invalid_argument("ideal_rejection_message: permutation is in the ideal");
    int n = static_cast<int>(w.size()) / 2;
    // report the failure against the first generator; every generator fails
    Permutation pi = Permutation::identity(n);
    Permutation gen = point_stratum_perm(pi);
    RankTable rw = perm_rank_table(w), rg = perm_rank_table(gen);
    for (auto [i, j] : diagram_and_essential(w).essential) {
        if (rw.at(i, j) < rg.at(i, j))
            return w.str() + " is not in the stratification ideal: against v(" + pi.str() +
                   ") = " + gen.str() + " the box (" + std::to_string(i) + "," +
                   std::to_string(j) + ") needs northwest rank at least " +
                   std::to_string(rg.at(i, j)) + " but " + w.str() + " has " +
                   std::to_string(rw.at(i, j));
    }
    throw std::runtime_error("ideal_rejection_message: no violated box found");
}

BruhatPoset stratification_poset(int n, bool allow_large) {
    if (n < 1) throw std::invalid_argument("stratification_poset: n must be positive");
    if (n > 4 && !allow_large)
        throw std::runtime_error("stratification_poset: n > 4 enumerates a very large "
                                 "ideal in S_" +
                                 std::to_string(2 * n) + "; pass the override to proceed");
    return order_ideal(point_stratum_generators(n));
}

namespace {

std::string itos(int v) { return std::to_string(v); }

std::string render_condition(int n, const std::string& quad, int a, int b, int r) {
    if (quad == "NW") {
        if (a == 1 && b == 1 && r == 0) return "x[1,1] = 0";
        if (r == 0) {
            if (a == n && b == n) return "X = 0";
            return "X[1.." + itos(a) + ",1.." + itos(b) + "] = 0";
        }
        if (a == b && r == a - 1) {
            if (a == n) return "det X = 0";
            return "det(X[1.." + itos(a) + ",1.." + itos(a) + "]) = 0";
        }
        return "rank(X[1.." + itos(a) + ",1.." + itos(b) + "]) <= " + itos(r);
    }
    if (quad == "NE") {
        int j = b - n;
        if (a == n) return "dim(im X + F^" + itos(j) + ") <= " + itos(r);
        return "dim(im X + F^" + itos(j) + " + E_" + itos(n - a) + ") <= " + itos(r + n - a);
    }
    if (quad == "SW") {
        int i = a - n;
        if (b == n) return "rank(X on F^" + itos(n - i) + ") <= " + itos(r - i);
        return "dim X(E^" + itos(b) + " cap F^" + itos(n - i) + ") - dim(E^" + itos(b) +
               " cap F^" + itos(n - i) + ") <= " + itos(r - b);
    }
    // SE
    int i = a - n, j = b - n;
    if (r - i - j == 0) return "X F^" + itos(n - i) + " <= F^" + itos(j);
    return "dim(X F^" + itos(n - i) + " + F^" + itos(j) + ") <= " + itos(r - i);
}

} // namespace

std::vector<StratumCondition> readable_conditions(const Permutation& w) {
    if (w.size() % 2 != 0)
        throw std::invalid_argument("readable_conditions: permutation must lie in S_2n");
    int n = static_cast<int>(w.size()) / 2;
    RankTable r = perm_rank_table(w);
    std::vector<StratumCondition> out;
    for (auto [a, b] : diagram_and_essential(w).essential) {
        StratumCondition c;
        c.i = a;
        c.j = b;
        c.bound = r.at(a, b);
        c.quadrant = a <= n ? (b <= n ? "NW" : "NE") : (b <= n ? "SW" : "SE");
        c.text = render_condition(n, c.quadrant, a, b, c.bound);
        out.push_back(c);
    }
    return out;
}

} // namespace strata
