#include <doctest.h>

#include <strata/bruhat.hpp>
#include <strata/charts.hpp>
#include <strata/exactmat.hpp>
#include <strata/random.hpp>
#include <strata/stratmap.hpp>
#include <strata/witness.hpp>

#include <set>
#include <utility>
#include <vector>

#include "test_util.hpp"

using namespace strata;

namespace {

std::set<std::pair<int, int>> cell_set(const SupportPattern& p) {
    return std::set<std::pair<int, int>>(p.cells().begin(), p.cells().end());
}

bool is_upper_triangular(const QMatrix& m) {
    for (int i = 1; i < m.rows(); ++i)
        for (int j = 0; j < i; ++j)
            if (m.at(i, j) != 0) return false;
    return true;
}

ChartCoords random_coords(Rng& rng, const Permutation& pi) {
    int n = pi.size();
    return ChartCoords(pi, random_matrix(rng, n, n),
                       random_unipotent(rng, aprime_pattern(pi)),
                       random_unipotent(rng, dprime_pattern(pi)));
}

} // namespace

TEST_CASE("support pattern validation") {
    CHECK_THROWS_AS(SupportPattern(2, {{1, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(SupportPattern(2, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SupportPattern(2, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SupportPattern(3, {{1, 2}, {1, 2}}), std::invalid_argument);
    // (1,2) and (2,3) force (1,3)
    CHECK_THROWS_AS(SupportPattern(3, {{1, 2}, {2, 3}}), std::invalid_argument);
    CHECK_NOTHROW(SupportPattern(3, {{1, 2}, {2, 3}, {1, 3}}));

    SupportPattern p(3, {{2, 1}, {3, 1}});
    CHECK(p.contains(2, 1));
    CHECK(!p.contains(1, 2));
    CHECK(p.admits(QMatrix::identity(3)));
    CHECK(p.admits(mat({{1, 0, 0}, {4, 1, 0}, {-2, 0, 1}})));
    CHECK(!p.admits(mat({{1, 0, 0}, {4, 1, 0}, {0, 5, 1}})));
    CHECK(!p.admits(mat({{2, 0, 0}, {4, 2, 0}, {0, 0, 2}})));
    CHECK(!p.admits(QMatrix::identity(2)));
}

TEST_CASE("patterns of the conjugated lower unipotent group") {
    auto [idp, idm] = patterns(perm("123"));
    CHECK(idp.cells().empty());
    CHECK(cell_set(idm) == std::set<std::pair<int, int>>{{2, 1}, {3, 1}, {3, 2}});

    auto [w0p, w0m] = patterns(perm("321"));
    CHECK(cell_set(w0p) == std::set<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 3}});
    CHECK(w0m.cells().empty());

    auto [ep, em] = patterns(perm("213"));
    CHECK(cell_set(ep) == std::set<std::pair<int, int>>{{1, 2}});
    CHECK(cell_set(em) == std::set<std::pair<int, int>>{{3, 1}, {3, 2}});

    CHECK(cell_set(aprime_pattern(perm("213"))) ==
          std::set<std::pair<int, int>>{{2, 1}});
    CHECK(cell_set(dprime_pattern(perm("213"))) ==
          std::set<std::pair<int, int>>{{3, 1}, {3, 2}});

    // sizes and closure across small symmetric groups; the constructor
    // rejects patterns that fail to be groups, so surviving construction
    // is the closure check
    for (int n = 1; n <= 5; ++n) {
        int total = n * (n - 1) / 2;
        for (const auto& pi : all_permutations(n)) {
            auto [eplus, eminus] = patterns(pi);
            CHECK(static_cast<int>(eplus.cells().size()) == pi.length());
            CHECK(static_cast<int>(eplus.cells().size() + eminus.cells().size()) == total);
            SupportPattern ap = aprime_pattern(pi), dp = dprime_pattern(pi);
            CHECK(static_cast<int>(ap.cells().size()) == pi.length());
            CHECK(static_cast<int>(ap.cells().size() + dp.cells().size()) == total);
            for (auto [i, j] : ap.cells()) CHECK(!dp.contains(i, j));
        }
    }
}

TEST_CASE("phi splits a patterned matrix both ways") {
    Rng rng(31);

    // identity chart: everything sits in the minus factor
    for (int trial = 0; trial < 10; ++trial) {
        QMatrix h = random_unit_lower(rng, 3);
        auto [b, c] = phi(Permutation::identity(3), h);
        CHECK(b == QMatrix::identity(3));
        CHECK(c == h);
    }
    // longest element chart: everything sits in the plus factor
    for (int trial = 0; trial < 10; ++trial) {
        QMatrix h = random_unit_upper(rng, 3);
        auto [b, c] = phi(Permutation::longest(3), h);
        CHECK(b == h);
        CHECK(c == QMatrix::identity(3));
    }

    for (int n : {2, 3, 4}) {
        for (const auto& pi : all_permutations(n)) {
            auto [eplus, eminus] = patterns(pi);
            SupportPattern both(n, [&] {
                auto cells = eplus.cells();
                cells.insert(cells.end(), eminus.cells().begin(), eminus.cells().end());
                return cells;
            }());
            for (int trial = 0; trial < 40; ++trial) {
                QMatrix h = random_unipotent(rng, both);
                auto [bPlus, cMinus] = phi(pi, h);
                CHECK(eplus.admits(bPlus));
                CHECK(eminus.admits(cMinus));
                // recover the complementary factors and multiply back
                QMatrix bMinus = h * inverse(bPlus);
                QMatrix cPlus = h * inverse(cMinus);
                CHECK(eminus.admits(bMinus));
                CHECK(eplus.admits(cPlus));
                CHECK(bMinus * bPlus == h);
                CHECK(cPlus * cMinus == h);
                // every leading and trailing principal minor of a member
                // of the pattern group equals 1, which is what makes the
                // two factorizations total
                for (int k = 1; k <= n; ++k) {
                    CHECK(det(h.submatrix(0, k, 0, k)) == 1);
                    CHECK(det(h.submatrix(n - k, n, n - k, n)) == 1);
                }
            }
        }
    }

    CHECK_THROWS_AS(phi(perm("123"), mat({{1, 5, 0}, {0, 1, 0}, {0, 0, 1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(phi(perm("213"), mat({{1, 0, 0}, {3, 1, 0}, {0, 0, 1}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(phi(perm("213"), mat({{2, 0, 0}, {0, 2, 0}, {0, 0, 2}})),
                    std::invalid_argument);
    CHECK_THROWS_AS(phi(perm("12"), QMatrix::identity(3)), std::invalid_argument);
}

TEST_CASE("phi and phi_inv invert each other") {
    Rng rng(32);
    for (int n : {2, 3, 4}) {
        for (const auto& pi : all_permutations(n)) {
            auto [eplus, eminus] = patterns(pi);
            SupportPattern both(n, [&] {
                auto cells = eplus.cells();
                cells.insert(cells.end(), eminus.cells().begin(), eminus.cells().end());
                return cells;
            }());
            for (int trial = 0; trial < 25; ++trial) {
                QMatrix h = random_unipotent(rng, both);
                auto [bPlus, cMinus] = phi(pi, h);
                CHECK(phi_inv(pi, bPlus, cMinus) == h);

                QMatrix rb = random_unipotent(rng, eplus);
                QMatrix rc = random_unipotent(rng, eminus);
                QMatrix g = phi_inv(pi, rb, rc);
                auto [b2, c2] = phi(pi, g);
                CHECK(b2 == rb);
                CHECK(c2 == rc);
            }
        }
    }
    CHECK_THROWS_AS(phi_inv(perm("213"), mat({{1, 0, 0}, {2, 1, 0}, {0, 0, 1}}),
                            QMatrix::identity(3)),
                    std::invalid_argument);
}

TEST_CASE("chart membership") {
    FlagPoint std2{2, QMatrix::identity(2), QMatrix(2, 2)};
    CHECK(chart_membership(perm("12"), std2));
    CHECK(!chart_membership(perm("21"), std2));
    FlagPoint anti2{2, w0_matrix(2), QMatrix(2, 2)};
    CHECK(!chart_membership(perm("12"), anti2));
    CHECK(chart_membership(perm("21"), anti2));

    FlagPoint bad{2, mat({{1, 1}, {1, 1}}), QMatrix(2, 2)};
    CHECK_THROWS_AS(chart_membership(perm("12"), bad), std::invalid_argument);

    Rng rng(33);
    for (int n : {2, 3}) {
        for (int trial = 0; trial < 60; ++trial) {
            QMatrix g = random_invertible(rng, n);
            FlagPoint p{n, g, random_matrix(rng, n, n)};
            FlagPoint q{n, g * random_invertible_upper(rng, n), p.x};
            int hits = 0;
            for (const auto& pi : all_permutations(n)) {
                bool in = chart_membership(pi, p);
                // membership is a property of the flag, not the matrix
                // chosen to represent it
                CHECK(chart_membership(pi, q) == in);
                if (in) ++hits;
            }
            CHECK(hits >= 1); // the charts cover the flag variety
        }
    }
}

TEST_CASE("chart_inverse in the two extreme charts") {
    Rng rng(34);
    for (int n : {2, 3, 4}) {
        for (int trial = 0; trial < 15; ++trial) {
            QMatrix l = random_unit_lower(rng, n);
            QMatrix x = random_matrix(rng, n, n);

            // around the identity the flag representative is already the
            // h of the factorization, so b+ = I and everything lands in
            // d'; Z picks up the full twist g^{-1} X
            ChartCoords c1 = chart_inverse(Permutation::identity(n), FlagPoint{n, l, x});
            CHECK(c1.a_prime() == QMatrix::identity(n));
            CHECK(c1.d_prime() == inverse(l));
            CHECK(c1.z() == inverse(l) * x);

            // mirrored situation around the longest element
            QMatrix w0n = w0_matrix(n);
            ChartCoords c2 =
                chart_inverse(Permutation::longest(n), FlagPoint{n, w0n * l, x});
            CHECK(c2.d_prime() == QMatrix::identity(n));
            CHECK(c2.a_prime() == l);
            CHECK(c2.z() == x * (w0n * l * w0n));
        }
    }

    FlagPoint outside{2, w0_matrix(2), QMatrix(2, 2)};
    CHECK_THROWS_WITH_AS(chart_inverse(perm("12"), outside),
                         "chart_inverse: point lies outside the chart of 12",
                         std::runtime_error);
}

TEST_CASE("chart_forward and chart_inverse are mutually inverse") {
    Rng rng(35);
    for (int n : {2, 3}) {
        for (const auto& pi : all_permutations(n)) {
            for (int trial = 0; trial < 20; ++trial) {
                ChartCoords coords = random_coords(rng, pi);
                FlagPoint p = chart_forward(coords);
                CHECK(chart_membership(pi, p));
                CHECK(chart_inverse(pi, p) == coords);
            }
            for (int trial = 0; trial < 20; ++trial) {
                QMatrix g = random_invertible(rng, n);
                FlagPoint p{n, g, random_matrix(rng, n, n)};
                if (!chart_membership(pi, p)) continue;
                ChartCoords coords = chart_inverse(pi, p);
                FlagPoint q = chart_forward(coords);
                // same flag up to the upper triangular change of basis,
                // same matrix on the nose
                CHECK(is_upper_triangular(inverse(q.g) * p.g));
                CHECK(q.x == p.x);
                CHECK(chart_inverse(pi, q) == coords);
            }
        }
    }
}

TEST_CASE("coordinate matrix certifies the chart cell") {
    Rng rng(36);
    for (int n : {2, 3}) {
        for (const auto& pi : all_permutations(n)) {
            Permutation target = point_stratum_perm(pi);
            for (int trial = 0; trial < 20; ++trial) {
                ChartCoords coords = random_coords(rng, pi);
                CHECK(coset_perm_b_b(coordinate_matrix(coords)) == target);
            }
        }
    }
}

TEST_CASE("stratified_check matches the invariant computed both ways") {
    // at the center of the chart the coordinates vanish and the
    // coordinate matrix is the permutation matrix of the stratum
    for (int n : {2, 3}) {
        for (const auto& pi : all_permutations(n)) {
            FlagPoint center{n, permutation_matrix(pi), QMatrix(n, n)};
            ChartCoords coords = chart_inverse(pi, center);
            CHECK(coords.z() == QMatrix(n, n));
            CHECK(coords.a_prime() == QMatrix::identity(n));
            CHECK(coords.d_prime() == QMatrix::identity(n));
            CHECK(coordinate_matrix(coords) ==
                  permutation_matrix(point_stratum_perm(pi)));
            auto [a, b] = stratified_check(pi, center);
            CHECK(a == point_stratum_perm(pi));
            CHECK(b == point_stratum_perm(pi));
        }
    }

    FlagPoint corner{2, QMatrix::identity(2), mat({{0, 1}, {0, 0}})};
    auto [a, b] = stratified_check(perm("12"), corner);
    CHECK(a == perm("2431"));
    CHECK(b == perm("2431"));

    Rng rng(37);
    for (int n : {2, 3}) {
        for (const auto& pi : all_permutations(n)) {
            for (int trial = 0; trial < 25; ++trial) {
                FlagPoint p = chart_forward(random_coords(rng, pi));
                auto [u, v] = stratified_check(pi, p);
                CHECK(u == v);
                CHECK(in_ideal(u));
            }
        }
    }
}

TEST_CASE("charts agree on overlaps") {
    Rng rng(38);
    for (int n : {2, 3}) {
        auto perms = all_permutations(n);
        for (int trial = 0; trial < 25; ++trial) {
            FlagPoint p = chart_forward(random_coords(rng, perms[trial % perms.size()]));
            std::vector<FlagPoint> images;
            for (const auto& pi : perms)
                if (chart_membership(pi, p))
                    images.push_back(chart_forward(chart_inverse(pi, p)));
            REQUIRE(!images.empty());
            for (const auto& q : images) {
                CHECK(is_upper_triangular(inverse(q.g) * p.g));
                CHECK(q.x == p.x);
            }
        }
    }
}

TEST_CASE("witness points hit every stratum at n = 2") {
    Rng rng(39);
    BruhatPoset ideal = order_ideal(point_stratum_generators(2));
    for (const auto& sigma : ideal.elements) {
        auto p = witness_point(sigma, rng);
        REQUIRE(p.has_value());
        CHECK(v_of_point(*p) == sigma);
        CHECK(stratum_membership(*p, sigma));
    }
    CHECK_THROWS_AS(witness_point(perm("4321"), rng), std::invalid_argument);
    CHECK_THROWS_AS(witness_point(perm("123"), rng), std::invalid_argument);
}

TEST_CASE("witness points at n = 3, including the extremes") {
    Rng rng(40);
    BruhatPoset ideal = order_ideal(point_stratum_generators(3));

    std::vector<Permutation> sample;
    sample.push_back(Permutation::identity(6));
    for (const auto& pi : all_permutations(3)) sample.push_back(point_stratum_perm(pi));
    sample.push_back(perm("456123"));
    Rng pick(41);
    for (int s = 0; s < 40; ++s)
        sample.push_back(
            ideal.elements[static_cast<std::size_t>(pick.below(ideal.elements.size()))]);

    for (const auto& sigma : sample) {
        auto p = witness_point(sigma, rng);
        REQUIRE(p.has_value());
        CHECK(v_of_point(*p) == sigma);
    }
}
