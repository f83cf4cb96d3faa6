#include <strata/exactmat.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

namespace strata {

namespace {

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<mpz_class> e;
    IntMat(int r, int c) : rows(r), cols(c), e(size_t(r) * size_t(c)) {}
    mpz_class& at(int i, int j) { return e[size_t(i) * cols + j]; }
};

// Clear denominators row by row.  rowScale, if given, collects the
// multiplier applied to each row, for undoing in det().
IntMat to_integer_rows(const QMatrix& m, std::vector<mpz_class>* rowScale) {
    IntMat a(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i) {
        mpz_class l = 1;
        for (int j = 0; j < m.cols(); ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).get_den().get_mpz_t());
        for (int j = 0; j < m.cols(); ++j) {
            Rational v = m.at(i, j) * Rational(l);
            a.at(i, j) = v.get_num(); // v has denominator 1 now
        }
        if (rowScale) rowScale->push_back(l);
    }
    return a;
}

/*
 * Bareiss fraction free elimination with full pivoting.  The one step
 * division by the previous pivot is exact because every entry of the
 * working matrix is a bordered minor of the input.  Returns the rank;
 * sign accumulates the row and column swaps, so for a nonsingular square
 * input sign * a(n-1, n-1) is the determinant after the sweep.
 */
int bareiss(IntMat& a, int& sign) {
    sign = 1;
    mpz_class prev = 1;
    int steps = std::min(a.rows, a.cols);
    int r = 0;
    for (; r < steps; ++r) {
        int pi = -1, pj = -1;
        for (int i = r; i < a.rows && pi < 0; ++i)
            for (int j = r; j < a.cols; ++j)
                if (a.at(i, j) != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi < 0) break;
        if (pi != r) {
            for (int j = 0; j < a.cols; ++j) std::swap(a.at(pi, j), a.at(r, j));
            sign = -sign;
        }
        if (pj != r) {
            for (int i = 0; i < a.rows; ++i) std::swap(a.at(i, pj), a.at(i, r));
            sign = -sign;
        }
        for (int i = r + 1; i < a.rows; ++i) {
            for (int j = r + 1; j < a.cols; ++j) {
                mpz_class t = a.at(r, r) * a.at(i, j) - a.at(i, r) * a.at(r, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a.at(i, j) = t;
            }
            a.at(i, r) = 0;
        }
        prev = a.at(r, r);
    }
    return r;
}

QMatrix flip_both(const QMatrix& m) {
    QMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.at(i, j) = m.at(m.rows() - 1 - i, m.cols() - 1 - j);
    return r;
}

QMatrix flip_rows(const QMatrix& m) {
    QMatrix r(m.rows(), m.cols());
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            r.at(i, j) = m.at(m.rows() - 1 - i, j);
    return r;
}

// Doolittle elimination without pivoting: row k of U, then column k of L.
// With needUnit every leading principal minor must equal 1, which makes U
// unit upper: the pivots are ratios of consecutive minors.  minorName
// keeps the error text honest when ul_unipotent runs this on the flipped
// matrix, where leading minors of the flip are trailing minors of the
// original.
std::pair<QMatrix, QMatrix> doolittle(const QMatrix& m, bool needUnit,
                                      const std::string& who,
                                      const std::string& minorName) {
    if (!m.is_square())
        throw std::invalid_argument(who + ": matrix not square");
    int n = m.rows();
    QMatrix L = QMatrix::identity(n), U(n, n);
    for (int k = 0; k < n; ++k) {
        for (int j = k; j < n; ++j) {
            Rational s = m.at(k, j);
            for (int t = 0; t < k; ++t) s -= L.at(k, t) * U.at(t, j);
            U.at(k, j) = s;
        }
        const Rational& piv = U.at(k, k);
        if (needUnit) {
            // earlier pivots are all 1, so the k-th minor equals this pivot
            if (piv != 1)
                throw std::runtime_error(who + ": " + minorName + " " +
                                         std::to_string(k + 1) + " is " +
                                         rat_to_string(piv) + ", need 1");
        } else if (piv == 0) {
            throw std::runtime_error(who + ": " + minorName + " " +
                                     std::to_string(k + 1) + " vanishes");
        }
        for (int i = k + 1; i < n; ++i) {
            Rational s = m.at(i, k);
            for (int t = 0; t < k; ++t) s -= L.at(i, t) * U.at(t, k);
            L.at(i, k) = s / piv;
        }
    }
    return {L, U};
}

} // namespace

int rank(const QMatrix& m) {
    IntMat a = to_integer_rows(m, nullptr);
    int sign;
    return bareiss(a, sign);
}

Rational det(const QMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("det: matrix not square");
    int n = m.rows();
    if (n == 0) return 1;
    std::vector<mpz_class> rowScale;
    IntMat a = to_integer_rows(m, &rowScale);
    int sign;
    int r = bareiss(a, sign);
    if (r < n) return 0;
    mpz_class denom = 1;
    for (const mpz_class& s : rowScale) denom *= s;
    Rational d(sign * a.at(n - 1, n - 1));
    d /= Rational(denom);
    return d;
}

QMatrix rref(const QMatrix& m, std::vector<int>* pivot_cols) {
    QMatrix a = m;
    if (pivot_cols) pivot_cols->clear();
    int row = 0;
    for (int col = 0; col < a.cols() && row < a.rows(); ++col) {
        int piv = -1;
        for (int i = row; i < a.rows(); ++i)
            if (a.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != row)
            for (int j = 0; j < a.cols(); ++j) std::swap(a.at(piv, j), a.at(row, j));
        Rational p = a.at(row, col);
        for (int j = col; j < a.cols(); ++j) a.at(row, j) /= p;
        for (int i = 0; i < a.rows(); ++i) {
            if (i == row || a.at(i, col) == 0) continue;
            Rational f = a.at(i, col);
            for (int j = col; j < a.cols(); ++j) a.at(i, j) -= f * a.at(row, j);
        }
        if (pivot_cols) pivot_cols->push_back(col);
        ++row;
    }
    return a;
}

QMatrix inverse(const QMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("inverse: matrix not square");
    int n = m.rows();
    std::vector<int> piv;
    QMatrix r = rref(hstack(m, QMatrix::identity(n)), &piv);
    if (static_cast<int>(piv.size()) != n || (n > 0 && piv[n - 1] != n - 1))
        throw std::runtime_error("inverse: matrix is singular");
    return r.submatrix(0, n, n, 2 * n);
}

QMatrix nullspace(const QMatrix& m) {
    std::vector<int> piv;
    QMatrix r = rref(m, &piv);
    std::vector<char> isPivot(m.cols(), 0);
    for (int c : piv) isPivot[c] = 1;
    std::vector<int> freeCols;
    for (int c = 0; c < m.cols(); ++c)
        if (!isPivot[c]) freeCols.push_back(c);
    QMatrix ns(m.cols(), static_cast<int>(freeCols.size()));
    for (size_t k = 0; k < freeCols.size(); ++k) {
        int f = freeCols[k];
        ns.at(f, static_cast<int>(k)) = 1;
        for (size_t i = 0; i < piv.size(); ++i)
            ns.at(piv[i], static_cast<int>(k)) = -r.at(static_cast<int>(i), f);
    }
    return ns;
}

QMatrix col_basis(const QMatrix& m) {
    std::vector<int> piv;
    rref(m, &piv);
    QMatrix b(m.rows(), static_cast<int>(piv.size()));
    for (size_t k = 0; k < piv.size(); ++k)
        for (int i = 0; i < m.rows(); ++i)
            b.at(i, static_cast<int>(k)) = m.at(i, piv[k]);
    return b;
}

QMatrix first_columns(const QMatrix& m, int k) {
    return m.submatrix(0, m.rows(), 0, k);
}

QMatrix last_columns(const QMatrix& m, int k) {
    return m.submatrix(0, m.rows(), m.cols() - k, m.cols());
}

QMatrix w0_matrix(int m) {
    return permutation_matrix(Permutation::longest(m));
}

RankTable nw_rank_table(const QMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("nw_rank_table: matrix not square");
    int n = m.rows();
    RankTable t(n);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            t.set(i, j, rank(m.submatrix(0, i, 0, j)));
    return t;
}

RankTable sw_rank_table(const QMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("sw_rank_table: matrix not square");
    return nw_rank_table(flip_rows(m));
}

/*
 * Reading w off the rank tables: for m in B- w B the northwest corner
 * ranks agree with those of P_w, and then row i picks up its new pivot at
 * column w(i), the first j where rank(i, j) exceeds rank(i-1, j).  For
 * B w B the same logic runs on southwest corners, scanning rows bottom
 * to top.
 */
Permutation coset_perm_bminus_b(const QMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("coset_perm_bminus_b: matrix not square");
    int n = m.rows();
    RankTable r = nw_rank_table(m);
    if (n > 0 && r.at(n, n) != n)
        throw std::invalid_argument("coset_perm_bminus_b: matrix is singular");
    std::vector<int> w(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (r.get(i, j) == r.get(i - 1, j) + 1) {
                w[i - 1] = j;
                break;
            }
    return Permutation(w);
}

Permutation coset_perm_b_b(const QMatrix& m) {
    if (!m.is_square())
        throw std::invalid_argument("coset_perm_b_b: matrix not square");
    int n = m.rows();
    RankTable q = sw_rank_table(m);
    if (n > 0 && q.at(n, n) != n)
        throw std::invalid_argument("coset_perm_b_b: matrix is singular");
    std::vector<int> w(n, 0);
    for (int r = 1; r <= n; ++r)
        for (int j = 1; j <= n; ++j)
            if (q.get(n - r + 1, j) == q.get(n - r, j) + 1) {
                w[r - 1] = j;
                break;
            }
    return Permutation(w);
}

std::pair<QMatrix, QMatrix> lu_unipotent(const QMatrix& m) {
    return doolittle(m, true, "lu_unipotent", "leading principal minor");
}

std::pair<QMatrix, QMatrix> lu_lower_unit(const QMatrix& m) {
    return doolittle(m, false, "lu_lower_unit", "leading principal minor");
}

std::pair<QMatrix, QMatrix> ul_unipotent(const QMatrix& m) {
    // conjugating by the antidiagonal turns UL into LU; leading minors of
    // the flip are the trailing minors of m
    auto lu = doolittle(flip_both(m), true, "ul_unipotent", "trailing principal minor");
    return {flip_both(lu.first), flip_both(lu.second)};
}

int subspace_dim(const QMatrix& u) { return rank(u); }

QMatrix subspace_sum(const QMatrix& u, const QMatrix& w) {
    return col_basis(hstack(u, w));
}

QMatrix subspace_intersection(const QMatrix& u, const QMatrix& w) {
    if (u.rows() != w.rows())
        throw std::invalid_argument("subspace_intersection: ambient mismatch");
    // solve U x = W y: kernel of [U | -W]; the U-part of each solution
    // spans the intersection
    QMatrix negw = w;
    for (int i = 0; i < negw.rows(); ++i)
        for (int j = 0; j < negw.cols(); ++j)
            negw.at(i, j) = -negw.at(i, j);
    QMatrix ns = nullspace(hstack(u, negw));
    QMatrix top = ns.submatrix(0, u.cols(), 0, ns.cols());
    return col_basis(u * top);
}

QMatrix image(const QMatrix& x, const QMatrix& u) {
    return col_basis(x * u);
}

int restricted_quotient_rank(const QMatrix& x, const QMatrix& u, const QMatrix& w) {
    return rank(hstack(x * u, w)) - rank(w);
}

/*
 * Normal form in the Bruhat cell B w B of the upper triangular Borel:
 * every member factors uniquely as Ntilde P_w b with b upper triangular
 * and Ntilde unit upper triangular supported on the inversions
 * {(a, b) : a < b, w(a) > w(b)}.  We reach Ntilde P_w by right column
 * operations (adding earlier columns into later ones, scaling), which is
 * exactly right multiplication by B.
 *
 * Sweep columns left to right; the pivot of column c sits at row
 * r_c = w^{-1}(c).  Once columns before c are in final form, any nonzero
 * below the pivot was contributed by an earlier column k, whose lowest
 * nonzero sits at row w^{-1}(k); clearing bottom up with that very column
 * removes the whole contribution.  A surviving nonzero at a row a with
 * w(a) > c therefore cannot happen inside the cell, and neither can a
 * vanishing pivot.  Above the pivot only inversion rows may keep entries;
 * the others are cleared the same way.  The support check at the end
 * backstops the argument.
 */
QMatrix bruhat_cell_normalize(const QMatrix& m, const Permutation& w) {
    if (!m.is_square() || m.rows() != w.size())
        throw std::invalid_argument("bruhat_cell_normalize: size mismatch");
    int n = m.rows();
    QMatrix r = m;
    Permutation winv = w.inverse();
    auto notInCell = [&]() {
        return std::runtime_error("bruhat_cell_normalize: matrix not in the cell of " + w.str());
    };
    auto addcol = [&](int from, int to, const Rational& coef) {
        for (int i = 0; i < n; ++i) r.at(i, to) += coef * r.at(i, from);
    };
    for (int c = 1; c <= n; ++c) {
        int rc = winv(c);
        for (int a = n; a > rc; --a) {
            const Rational& e = r.at(a - 1, c - 1);
            if (e == 0) continue;
            if (w(a) > c) throw notInCell();
            addcol(w(a) - 1, c - 1, -e);
        }
        Rational piv = r.at(rc - 1, c - 1);
        if (piv == 0) throw notInCell();
        if (piv != 1)
            for (int i = 0; i < n; ++i) r.at(i, c - 1) /= piv;
        for (int a = rc - 1; a >= 1; --a) {
            const Rational& e = r.at(a - 1, c - 1);
            if (w(a) < c && e != 0) addcol(w(a) - 1, c - 1, -e);
        }
    }
    QMatrix nt = r * permutation_matrix(w).transpose();
    for (int a = 1; a <= n; ++a)
        for (int b = 1; b <= n; ++b) {
            const Rational& v = nt.at(a - 1, b - 1);
            if (a == b) {
                if (v != 1)
                    throw std::runtime_error("bruhat_cell_normalize: normalization failed");
            } else if (a > b || w(a) < w(b)) {
                if (v != 0)
                    throw std::runtime_error("bruhat_cell_normalize: normalization failed");
            }
        }
    return nt;
}

} // namespace strata
