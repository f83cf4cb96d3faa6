#ifndef STRATA_SERIALIZE_HPP
#define STRATA_SERIALIZE_HPP

#include <json.hpp>

#include <strata/bruhat.hpp>
#include <strata/charts.hpp>
#include <strata/qmatrix.hpp>
#include <strata/stratmap.hpp>

#include <string>

namespace strata {

// ordered_json everywhere: field order is part of the byte-identical
// output promise
using OrderedJson = nlohmann::ordered_json;

OrderedJson matrix_json(const QMatrix& m); // rows of "p/q" strings
QMatrix matrix_from_json(const OrderedJson& j);

OrderedJson point_json(const FlagPoint& p); // {"n": .., "g": [[..]], "X": [[..]]}
FlagPoint point_from_json(const OrderedJson& j);

OrderedJson chart_coords_json(const ChartCoords& c);

// length, dimension, essential boxes, readable conditions, G-invariance
// and rho where applicable, maximal biGrassmannians below
OrderedJson stratum_report_json(const Permutation& w);

OrderedJson ideal_json(const BruhatPoset& poset, int n);
// Hasse diagram with one rank row per dimension, Bruhat-larger (smaller
// dimension) at the top
std::string ideal_dot(const BruhatPoset& poset, int n);

} // namespace strata

#endif
