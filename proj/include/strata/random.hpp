#ifndef STRATA_RANDOM_HPP
#define STRATA_RANDOM_HPP

#include <strata/qmatrix.hpp>
#include <strata/rng.hpp>

namespace strata {

// integer entries uniform in [-9, 9]
QMatrix random_matrix(Rng& rng, int rows, int cols);
// singular draws are redrawn; bounded retries, then an error
QMatrix random_invertible(Rng& rng, int n);
QMatrix random_invertible_upper(Rng& rng, int n);
QMatrix random_unit_upper(Rng& rng, int n);
QMatrix random_unit_lower(Rng& rng, int n);

} // namespace strata

#endif
