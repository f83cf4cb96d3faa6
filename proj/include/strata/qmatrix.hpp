#ifndef STRATA_QMATRIX_HPP
#define STRATA_QMATRIX_HPP

#include <strata/rational.hpp>

#include <vector>

namespace strata {

// Dense matrix of exact rationals. Storage is 0-indexed; the 1-indexed
// conventions of the surrounding mathematics live in the callers.
// Degenerate shapes (0 rows or 0 columns) are allowed; they occur as empty
// submatrices and have rank 0.
class QMatrix {
public:
    QMatrix() : nrows_(0), ncols_(0) {}
    QMatrix(int rows, int cols);
    static QMatrix identity(int n);

    int rows() const { return nrows_; }
    int cols() const { return ncols_; }
    bool is_square() const { return nrows_ == ncols_; }

    Rational& at(int i, int j);
    const Rational& at(int i, int j) const;

    QMatrix operator+(const QMatrix& o) const;
    QMatrix operator-(const QMatrix& o) const;
    QMatrix operator*(const QMatrix& o) const;
    bool operator==(const QMatrix& o) const;
    bool operator!=(const QMatrix& o) const { return !(*this == o); }

    QMatrix transpose() const;
    // rows [r0, r1), columns [c0, c1), half open
    QMatrix submatrix(int r0, int r1, int c0, int c1) const;

private:
    int nrows_, ncols_;
    std::vector<Rational> e_;
    void check(int i, int j) const;
};

QMatrix hstack(const QMatrix& a, const QMatrix& b);
QMatrix vstack(const QMatrix& a, const QMatrix& b);
QMatrix block2x2(const QMatrix& nw, const QMatrix& ne,
                 const QMatrix& sw, const QMatrix& se);

} // namespace strata

#endif
