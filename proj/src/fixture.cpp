#include <strata/fixture.hpp>

#include <utility>

namespace strata {

namespace {

QMatrix mat2(long a, long b, long c, long d) {
    QMatrix m(2, 2);
    m.at(0, 0) = a;
    m.at(0, 1) = b;
    m.at(1, 0) = c;
    m.at(1, 1) = d;
    return m;
}

FixtureEntry entry(std::vector<int> oneline, QMatrix g, QMatrix x) {
    return {Permutation(std::move(oneline)), FlagPoint{2, std::move(g), std::move(x)}};
}

/*
 * Generic parameters are small distinct primes so that no submatrix
 * suffers an accidental rank drop; each witness was validated against
 * v_of_point before entering the table.  Flags: [[1,0],[2,1]] is a
 * generic flag, [[1,0],[5,1]] a second generic flag for strata whose
 * conditions involve both the flag and X, permutation flags pin
 * F^1 = E^1 or F^1 = E_1.
 */
std::vector<FixtureEntry> build() {
    std::vector<FixtureEntry> t;
    t.push_back(entry({1, 2, 3, 4}, mat2(1, 0, 2, 1), mat2(2, 3, 5, 7)));
    t.push_back(entry({1, 2, 4, 3}, mat2(1, 0, 2, 1), mat2(2, 3, 6, 5)));
    t.push_back(entry({1, 3, 2, 4}, mat2(1, 0, 5, 1), mat2(2, 3, 4, 6)));
    t.push_back(entry({2, 1, 3, 4}, mat2(1, 0, 2, 1), mat2(0, 2, 3, 5)));
    t.push_back(entry({1, 3, 4, 2}, mat2(1, 0, 2, 1), mat2(2, -1, 6, -3)));
    t.push_back(entry({1, 4, 2, 3}, mat2(1, 0, 2, 1), mat2(1, 1, 2, 2)));
    t.push_back(entry({2, 1, 4, 3}, mat2(1, 0, 2, 1), mat2(0, 2, 2, 3)));
    t.push_back(entry({2, 3, 1, 4}, mat2(1, 0, 5, 1), mat2(0, 2, 0, 3)));
    t.push_back(entry({3, 1, 2, 4}, mat2(1, 0, 2, 1), mat2(0, 0, 2, 3)));
    t.push_back(entry({1, 4, 3, 2}, mat2(1, 0, 2, 1), mat2(2, -1, 4, -2)));
    t.push_back(entry({2, 3, 4, 1}, mat2(1, 0, 0, 1), mat2(0, 2, 0, 3)));
    t.push_back(entry({2, 4, 1, 3}, mat2(2, 0, 3, 1), mat2(0, 2, 0, 3)));
    t.push_back(entry({3, 1, 4, 2}, mat2(3, 0, -2, 1), mat2(0, 0, 2, 3)));
    t.push_back(entry({3, 2, 1, 4}, mat2(1, 0, 2, 1), mat2(0, 0, 0, 3)));
    t.push_back(entry({4, 1, 2, 3}, mat2(0, 1, 1, 0), mat2(0, 0, 2, 3)));
    t.push_back(entry({2, 4, 3, 1}, mat2(1, 0, 0, 1), mat2(0, 1, 0, 0)));
    t.push_back(entry({3, 2, 4, 1}, mat2(1, 0, 0, 1), mat2(0, 0, 0, 3)));
    t.push_back(entry({3, 4, 1, 2}, mat2(1, 0, 2, 1), mat2(0, 0, 0, 0)));
    t.push_back(entry({4, 1, 3, 2}, mat2(0, 1, 1, 0), mat2(0, 0, 2, 0)));
    t.push_back(entry({4, 2, 1, 3}, mat2(0, 1, 1, 0), mat2(0, 0, 0, 3)));
    t.push_back(entry({3, 4, 2, 1}, mat2(1, 0, 0, 1), mat2(0, 0, 0, 0)));
    t.push_back(entry({4, 3, 1, 2}, mat2(0, 1, 1, 0), mat2(0, 0, 0, 0)));
    return t;
}

} // namespace

const std::vector<FixtureEntry>& n2_fixture() {
    static const std::vector<FixtureEntry> table = build();
    return table;
}

} // namespace strata
