#ifndef STRATA_WITNESS_HPP
#define STRATA_WITNESS_HPP

#include <strata/permutation.hpp>
#include <strata/rng.hpp>
#include <strata/stratmap.hpp>

#include <optional>

namespace strata {

// A point p with v_of_point(p) == sigma, built from a positive
// subexpression product inside the top Bruhat cell of a dominating
// point stratum.  Throws std::invalid_argument when sigma is outside
// the stratification ideal.  Returns nullopt if the bounded random
// search fails; in practice the first attempt succeeds.
std::optional<FlagPoint> witness_point(const Permutation& sigma, Rng& rng);

} // namespace strata

#endif
