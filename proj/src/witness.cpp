#include <strata/witness.hpp>

#include <strata/bruhat.hpp>
#include <strata/exactmat.hpp>
#include <strata/random.hpp>

#include <stdexcept>
#include <utility>
#include <vector>

namespace strata {

namespace {

// peel the smallest descent until the identity; the reflection matrices
// taken in collection order multiply out to permutation_matrix(w)
std::vector<int> descent_word(const Permutation& w) {
    Permutation u = w;
    std::vector<int> word;
    while (u.length() != 0) {
        int i = u.descents().front();
        word.push_back(i);
        u = compose(u, Permutation::adjacent(u.size(), i));
    }
    return word;
}

/*
 * Right-to-left greedy subexpression for sigma inside the word: a letter
 * is taken whenever taking it shortens what is left of sigma.  Matrix
 * products act on values rather than positions here, so the bookkeeping
 * runs on the inverse.  Greedy succeeds exactly when sigma lies below
 * the full word in Bruhat order.
 */
std::vector<bool> taken_letters(const std::vector<int>& word, const Permutation& sigma) {
    Permutation u = sigma.inverse();
    int m = u.size();
    std::vector<bool> take(word.size(), false);
    for (int k = static_cast<int>(word.size()) - 1; k >= 0; --k) {
        int i = word[k];
        if (u(i) > u(i + 1)) {
            take[static_cast<std::size_t>(k)] = true;
            u = compose(u, Permutation::adjacent(m, i));
        }
    }
    if (u != Permutation::identity(m))
        throw std::runtime_error("witness_point: greedy subexpression failed below a "
                                 "dominating generator");
    return take;
}

QMatrix reflection(int m, int i) {
    QMatrix s = QMatrix::identity(m);
    s.at(i - 1, i - 1) = 0;
    s.at(i, i) = 0;
    s.at(i - 1, i) = 1;
    s.at(i, i - 1) = 1;
    return s;
}

QMatrix lower_elementary(int m, int i, long t) {
    QMatrix y = QMatrix::identity(m);
    y.at(i, i - 1) = t;
    return y;
}

} // namespace

std::optional<FlagPoint> witness_point(const Permutation& sigma, Rng& rng) {
    int m = sigma.size();
    if (m < 2 || m % 2 != 0)
        throw std::invalid_argument("witness_point: permutation must lie in some S_2n");
    if (!in_ideal(sigma))
        throw std::invalid_argument("witness_point: " + ideal_rejection_message(sigma));
    int n = m / 2;

    Permutation gen;
    for (const Permutation& pi : all_permutations(n)) {
        Permutation v = point_stratum_perm(pi);
        if (bruhat_leq(sigma, v)) {
            gen = v;
            break;
        }
    }
    std::vector<int> word = descent_word(gen);
    std::vector<bool> take = taken_letters(word, sigma);

    /*
     * The product over the word, with a reflection at taken letters and
     * a lower elementary with positive parameter at skipped ones, lies
     * in B gen B (the word is reduced for gen) and in B- sigma B (the
     * greedy subexpression plus positivity stops the product from
     * slipping below sigma).  Normalizing inside the B x B cell gives
     * T = Ntilde P_gen with blocks [[T11, T12], [T21, 0]], T12 and T21
     * invertible.  Multiplying by diag(l1, I) on the left and
     * diag(b1, V^{-1}) on the right preserves the B- x B class and
     * reaches the assembled shape [[X, g], [w0 g^{-1}, 0]] exactly when
     * b1 l1 = T21^{-1} w0 V T12^{-1} with b1 unit upper and l1 lower
     * invertible; conjugating by w0 turns that split into an ordinary
     * LU factorization.  V is a free invertible upper parameter, drawn
     * until the split exists.
     */
    QMatrix w0n = w0_matrix(n);
    for (int attempt = 0; attempt < 20; ++attempt) {
        QMatrix prod = QMatrix::identity(m);
        for (std::size_t k = 0; k < word.size(); ++k)
            prod = prod * (take[k] ? reflection(m, word[k])
                                   : lower_elementary(m, word[k], rng.range(1, 9)));
        QMatrix nt;
        try {
            nt = bruhat_cell_normalize(prod, gen);
        } catch (const std::runtime_error&) {
            continue;
        }
        QMatrix t = nt * permutation_matrix(gen);
        QMatrix t11 = t.submatrix(0, n, 0, n), t12 = t.submatrix(0, n, n, m);
        QMatrix t21 = t.submatrix(n, m, 0, n);
        QMatrix t12i = inverse(t12), t21i = inverse(t21);
        for (int draw = 0; draw < 8; ++draw) {
            QMatrix v = random_invertible_upper(rng, n);
            QMatrix h = t21i * w0n * v * t12i;
            QMatrix lhat, uhat;
            try {
                std::pair<QMatrix, QMatrix> lu = lu_lower_unit(w0n * h * w0n);
                lhat = lu.first;
                uhat = lu.second;
            } catch (const std::runtime_error&) {
                continue;
            }
            QMatrix b1 = w0n * lhat * w0n, l1 = w0n * uhat * w0n;
            FlagPoint p{n, l1 * t12 * inverse(v), l1 * t11 * b1};
            if (v_of_point(p) == sigma) return p;
        }
    }
    return std::nullopt;
}

} // namespace strata
