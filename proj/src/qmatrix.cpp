#include <strata/qmatrix.hpp>

#include <stdexcept>

namespace strata {

QMatrix::QMatrix(int rows, int cols) : nrows_(rows), ncols_(cols) {
    if (rows < 0 || cols < 0)
        throw std::invalid_argument("QMatrix: negative dimension");
    e_.assign(static_cast<size_t>(rows) * static_cast<size_t>(cols), Rational(0));
}

QMatrix QMatrix::identity(int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
}

void QMatrix::check(int i, int j) const {
    if (i < 0 || i >= nrows_ || j < 0 || j >= ncols_)
        throw std::invalid_argument("QMatrix: index out of range");
}

Rational& QMatrix::at(int i, int j) {
    check(i, j);
    return e_[static_cast<size_t>(i) * ncols_ + j];
}

const Rational& QMatrix::at(int i, int j) const {
    check(i, j);
    return e_[static_cast<size_t>(i) * ncols_ + j];
}

QMatrix QMatrix::operator+(const QMatrix& o) const {
    if (nrows_ != o.nrows_ || ncols_ != o.ncols_)
        throw std::invalid_argument("QMatrix: shape mismatch in +");
    QMatrix r(nrows_, ncols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] + o.e_[k];
    return r;
}

QMatrix QMatrix::operator-(const QMatrix& o) const {
    if (nrows_ != o.nrows_ || ncols_ != o.ncols_)
        throw std::invalid_argument("QMatrix: shape mismatch in -");
    QMatrix r(nrows_, ncols_);
    for (size_t k = 0; k < e_.size(); ++k) r.e_[k] = e_[k] - o.e_[k];
    return r;
}

QMatrix QMatrix::operator*(const QMatrix& o) const {
    if (ncols_ != o.nrows_)
        throw std::invalid_argument("QMatrix: shape mismatch in *");
    QMatrix r(nrows_, o.ncols_);
    for (int i = 0; i < nrows_; ++i)
        for (int k = 0; k < ncols_; ++k) {
            const Rational& aik = e_[static_cast<size_t>(i) * ncols_ + k];
            if (aik == 0) continue;
            for (int j = 0; j < o.ncols_; ++j)
                r.at(i, j) += aik * o.at(k, j);
        }
    return r;
}

bool QMatrix::operator==(const QMatrix& o) const {
    return nrows_ == o.nrows_ && ncols_ == o.ncols_ && e_ == o.e_;
}

QMatrix QMatrix::transpose() const {
    QMatrix r(ncols_, nrows_);
    for (int i = 0; i < nrows_; ++i)
        for (int j = 0; j < ncols_; ++j)
            r.at(j, i) = at(i, j);
    return r;
}

QMatrix QMatrix::submatrix(int r0, int r1, int c0, int c1) const {
    if (r0 < 0 || r1 > nrows_ || r0 > r1 || c0 < 0 || c1 > ncols_ || c0 > c1)
        throw std::invalid_argument("QMatrix: bad submatrix range");
    QMatrix r(r1 - r0, c1 - c0);
    for (int i = r0; i < r1; ++i)
        for (int j = c0; j < c1; ++j)
            r.at(i - r0, j - c0) = at(i, j);
    return r;
}

QMatrix hstack(const QMatrix& a, const QMatrix& b) {
    if (a.rows() != b.rows())
        throw std::invalid_argument("hstack: row count mismatch");
    QMatrix r(a.rows(), a.cols() + b.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j);
        for (int j = 0; j < b.cols(); ++j) r.at(i, a.cols() + j) = b.at(i, j);
    }
    return r;
}

QMatrix vstack(const QMatrix& a, const QMatrix& b) {
    if (a.cols() != b.cols())
        throw std::invalid_argument("vstack: column count mismatch");
    QMatrix r(a.rows() + b.rows(), a.cols());
    for (int j = 0; j < a.cols(); ++j) {
        for (int i = 0; i < a.rows(); ++i) r.at(i, j) = a.at(i, j);
        for (int i = 0; i < b.rows(); ++i) r.at(a.rows() + i, j) = b.at(i, j);
    }
    return r;
}

QMatrix block2x2(const QMatrix& nw, const QMatrix& ne,
                 const QMatrix& sw, const QMatrix& se) {
    return vstack(hstack(nw, ne), hstack(sw, se));
}

} // namespace strata
