#include <strata/serialize.hpp>

#include <strata/ginv.hpp>

#include <stdexcept>

namespace strata {

OrderedJson matrix_json(const QMatrix& m) {
    OrderedJson rows = OrderedJson::array();
    for (int i = 0; i < m.rows(); ++i) {
        OrderedJson row = OrderedJson::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(rat_to_string(m.at(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

QMatrix matrix_from_json(const OrderedJson& j) {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument("matrix_from_json: expected a nonempty array of rows");
    int r = static_cast<int>(j.size());
    int c = static_cast<int>(j[0].size());
    QMatrix m(r, c);
    for (int i = 0; i < r; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != c)
            throw std::invalid_argument("matrix_from_json: ragged rows");
        for (int k = 0; k < c; ++k) {
            const OrderedJson& e = j[i][k];
            if (e.is_number_integer())
                m.at(i, k) = Rational(e.get<long>());
            else if (e.is_string())
                m.at(i, k) = rat_from_string(e.get<std::string>());
            else
                throw std::invalid_argument(
                    "matrix_from_json: entries must be integers or \"p/q\" strings");
        }
    }
    return m;
}

OrderedJson point_json(const FlagPoint& p) {
    return OrderedJson{{"n", p.n}, {"g", matrix_json(p.g)}, {"X", matrix_json(p.x)}};
}

FlagPoint point_from_json(const OrderedJson& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("g") || !j.contains("X"))
        throw std::invalid_argument("point_from_json: expected {n, g, X}");
    FlagPoint p;
    p.n = j.at("n").get<int>();
    p.g = matrix_from_json(j.at("g"));
    p.x = matrix_from_json(j.at("X"));
    if (p.n < 1 || p.g.rows() != p.n || p.g.cols() != p.n || p.x.rows() != p.n ||
        p.x.cols() != p.n)
        throw std::invalid_argument("point_from_json: g and X must be n x n");
    return p;
}

OrderedJson chart_coords_json(const ChartCoords& c) {
    return OrderedJson{{"pi", c.pi().str()},
                       {"Z", matrix_json(c.z())},
                       {"a_prime", matrix_json(c.a_prime())},
                       {"d_prime", matrix_json(c.d_prime())}};
}

OrderedJson stratum_report_json(const Permutation& w) {
    OrderedJson report;
    report["perm"] = w.str();
    report["length"] = w.length();
    report["dimension"] = stratum_dimension(w);

    RankTable rw = perm_rank_table(w);
    OrderedJson essential = OrderedJson::array();
    for (auto [i, j] : diagram_and_essential(w).essential)
        essential.push_back(OrderedJson{{"i", i}, {"j", j}, {"rank", rw.at(i, j)}});
    report["essential"] = std::move(essential);

    OrderedJson conditions = OrderedJson::array();
    for (const StratumCondition& c : readable_conditions(w))
        conditions.push_back(OrderedJson{{"quadrant", c.quadrant},
                                         {"i", c.i},
                                         {"j", c.j},
                                         {"bound", c.bound},
                                         {"text", c.text}});
    report["conditions"] = std::move(conditions);

    bool ginv = is_g_invariant(w);
    report["g_invariant"] = ginv;
    if (ginv) {
        PartialPermutation rho = rho_from_sigma(w);
        OrderedJson ones = OrderedJson::array();
        for (auto [r, c] : rho.ones())
            ones.push_back(OrderedJson::array({r, c}));
        report["rho"] = std::move(ones);
    } else {
        report["rho"] = nullptr;
    }

    OrderedJson bigs = OrderedJson::array();
    for (const Permutation& b : max_bigrassmannians_below(w)) bigs.push_back(b.str());
    report["max_bigrassmannians"] = std::move(bigs);
    return report;
}

OrderedJson ideal_json(const BruhatPoset& poset, int n) {
    OrderedJson j;
    j["schema"] = 1;
    j["n"] = n;
    j["space_dimension"] = space_dimension(n);
    j["count"] = poset.elements.size();
    OrderedJson elements = OrderedJson::array();
    for (const Permutation& w : poset.elements) elements.push_back(stratum_report_json(w));
    j["elements"] = std::move(elements);
    OrderedJson covers = OrderedJson::array();
    for (auto [lo, hi] : poset.covers) covers.push_back(OrderedJson::array({lo, hi}));
    j["covers"] = std::move(covers);
    return j;
}

std::string ideal_dot(const BruhatPoset& poset, int n) {
    std::string out = "digraph ideal {\n  rankdir=BT;\n  node [shape=box];\n";
    for (int d = space_dimension(n); d >= 0; --d) {
        std::string row;
        for (const Permutation& w : poset.elements)
            if (stratum_dimension(w) == d) row += " \"" + w.str() + "\";";
        if (!row.empty()) out += "  { rank=same;" + row + " }\n";
    }
    for (auto [lo, hi] : poset.covers)
        out += "  \"" + poset.elements[static_cast<std::size_t>(lo)].str() + "\" -> \"" +
               poset.elements[static_cast<std::size_t>(hi)].str() + "\";\n";
    out += "}\n";
    return out;
}

} // namespace strata
