#include <strata/random.hpp>

#include <strata/exactmat.hpp>

#include <stdexcept>

namespace strata {

QMatrix random_matrix(Rng& rng, int rows, int cols) {
    QMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m.at(i, j) = rng.range(-9, 9);
    return m;
}

QMatrix random_invertible(Rng& rng, int n) {
    for (int t = 0; t < 256; ++t) {
        QMatrix m = random_matrix(rng, n, n);
        if (rank(m) == n) return m;
    }
    throw std::runtime_error("random_invertible: too many singular draws");
}

QMatrix random_invertible_upper(Rng& rng, int n) {
    QMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
        long d = 0;
        while (d == 0) d = rng.range(-9, 9);
        m.at(i, i) = d;
        for (int j = i + 1; j < n; ++j) m.at(i, j) = rng.range(-9, 9);
    }
    return m;
}

QMatrix random_unit_upper(Rng& rng, int n) {
    QMatrix m = QMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) m.at(i, j) = rng.range(-9, 9);
    return m;
}

QMatrix random_unit_lower(Rng& rng, int n) {
    QMatrix m = QMatrix::identity(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < i; ++j) m.at(i, j) = rng.range(-9, 9);
    return m;
}

} // namespace strata
