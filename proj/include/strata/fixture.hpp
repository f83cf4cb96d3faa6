#ifndef STRATA_FIXTURE_HPP
#define STRATA_FIXTURE_HPP

#include <strata/permutation.hpp>
#include <strata/stratmap.hpp>

#include <vector>

namespace strata {

// One hand-checked witness point per stratum at n = 2, in poset order.
// Every entry satisfies v_of_point(point) == sigma exactly.
struct FixtureEntry {
    Permutation sigma;
    FlagPoint point;
};

const std::vector<FixtureEntry>& n2_fixture();

} // namespace strata

#endif
