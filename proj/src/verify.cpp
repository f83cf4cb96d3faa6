#include <strata/verify.hpp>

#include <strata/bruhat.hpp>
#include <strata/charts.hpp>
#include <strata/exactmat.hpp>
#include <strata/fixture.hpp>
#include <strata/ginv.hpp>
#include <strata/random.hpp>
#include <strata/stratmap.hpp>
#include <strata/witness.hpp>

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace strata {

namespace {

constexpr std::size_t kMaxRecorded = 12;

// messages are built lazily; suites run many thousands of checks
template <class F>
void check(SuiteResult& r, bool ok, F&& message) {
    ++r.checks;
    if (ok)
        return;
    r.passed = false;
    if (r.failures.size() < kMaxRecorded)
        r.failures.push_back(message());
    else if (r.failures.size() == kMaxRecorded)
        r.failures.push_back("... further failures suppressed");
}

std::string tag(int n, std::uint64_t seed, int trial) {
    return " (n=" + std::to_string(n) + ", seed=" + std::to_string(seed) +
           ", trial=" + std::to_string(trial) + ")";
}

Permutation random_permutation(Rng& rng, int m) {
    std::vector<int> oneline(m);
    std::iota(oneline.begin(), oneline.end(), 1);
    for (int i = m - 1; i > 0; --i)
        std::swap(oneline[i], oneline[rng.below(static_cast<std::uint64_t>(i) + 1)]);
    return Permutation(oneline);
}

// Every third flag is a permutation flag and odd trials bound the rank
// of X, so the sample reaches deep strata instead of piling up in the
// open one.
FlagPoint sampled_point(Rng& rng, int n, int trial) {
    QMatrix g = (trial % 3 == 0) ? permutation_matrix(random_permutation(rng, n))
                                 : random_invertible(rng, n);
    QMatrix x;
    if (trial % 2 == 1) {
        int k = trial % (n + 1); // k = 0 gives the zero matrix
        x = random_matrix(rng, n, k) * random_matrix(rng, k, n);
    } else {
        x = random_matrix(rng, n, n);
    }
    return {n, g, x};
}

SuiteResult suite_welldef(int n, std::uint64_t seed, int trials) {
    SuiteResult r{"welldef"};
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = trial_rng(seed, trial);
        FlagPoint p = sampled_point(rng, n, trial);
        QMatrix b = random_invertible_upper(rng, n);
        Permutation v1 = v_of_point(p);
        Permutation v2 = v_of_point({n, p.g * b, p.x});
        check(r, v1 == v2, [&] {
            return "stratmap/v_of_point: depends on the flag representative, " +
                   v1.str() + " vs " + v2.str() + tag(n, seed, trial);
        });
    }
    return r;
}

SuiteResult suite_quadrants(int n, std::uint64_t seed, int trials) {
    SuiteResult r{"quadrants"};
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = trial_rng(seed, trial);
        FlagPoint p = sampled_point(rng, n, trial);
        QuadrantStats q = quadrant_statistics(p);
        RankTable t = nw_rank_table(assemble(p));
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                auto box = [&](const char* name) {
                    return "stratmap/quadrant_statistics: " + std::string(name) +
                           " identity fails at box (" + std::to_string(i) + "," +
                           std::to_string(j) + ")" + tag(n, seed, trial);
                };
                check(r, q.nw[i][j] == t.get(n - j, i), [&] { return box("NW"); });
                check(r, t.at(i, n + j) == j + q.ne[i][j], [&] { return box("NE"); });
                check(r, t.at(n + i, j) == j + q.sw[i][j], [&] { return box("SW"); });
                check(r, t.at(n + i, n + j) == i + j + q.se[i][j],
                      [&] { return box("SE"); });
            }
        }
    }
    return r;
}

SuiteResult suite_ideal_image(int n, std::uint64_t seed, int trials) {
    SuiteResult r{"ideal-image"};
    for (int trial = 0; trial < trials; ++trial) {
        Rng rng = trial_rng(seed, trial);
        FlagPoint p = sampled_point(rng, n, trial);
        Permutation v = v_of_point(p);
        check(r, in_ideal(v), [&] {
            return "stratmap/v_of_point: image " + v.str() +
                   " escapes the stratification ideal" + tag(n, seed, trial);
        });
        check(r, stratum_membership(p, v), [&] {
            return "stratmap/stratum_membership: point rejected by its own stratum " +
                   v.str() + tag(n, seed, trial);
        });
    }
    return r;
}

std::vector<Permutation> oracle_max_bigs(const Permutation& w,
                                         const std::vector<Permutation>& bigs) {
    std::vector<Permutation> below;
    for (const Permutation& b : bigs)
        if (bruhat_leq(b, w))
            below.push_back(b);
    std::vector<Permutation> out;
    for (const Permutation& b : below) {
        bool maximal = true;
        for (const Permutation& c : below)
            if (c != b && bruhat_leq(b, c)) {
                maximal = false;
                break;
            }
        if (maximal)
            out.push_back(b);
    }
    std::sort(out.begin(), out.end());
    return out;
}

SuiteResult suite_kobayashi(int n, std::uint64_t seed, int trials) {
    SuiteResult r{"kobayashi"};
    int m = 2 * n;
    std::vector<Permutation> bigs = all_bigrassmannians(m);

    auto check_pair = [&](const Permutation& w, const Permutation& u, int trial) {
        bool direct = bruhat_leq(w, u);
        bool viaBigs = true;
        for (const Permutation& b : max_bigrassmannians_below(w))
            if (!bruhat_leq(b, u)) {
                viaBigs = false;
                break;
            }
        check(r, direct == viaBigs, [&] {
            return "bruhat/max_bigrassmannians_below: criterion disagrees with "
                   "bruhat_leq for w=" + w.str() + ", u=" + u.str() + tag(n, seed, trial);
        });
    };
    auto check_maximal = [&](const Permutation& w, int trial) {
        std::vector<Permutation> got = max_bigrassmannians_below(w);
        std::sort(got.begin(), got.end());
        check(r, got == oracle_max_bigs(w, bigs), [&] {
            return "bruhat/max_bigrassmannians_below: set differs from the brute "
                   "oracle at w=" + w.str() + tag(n, seed, trial);
        });
    };

    if (m <= 4) {
        std::vector<Permutation> all = all_permutations(m);
        for (const Permutation& w : all) {
            check_maximal(w, -1);
            for (const Permutation& u : all)
                check_pair(w, u, -1);
        }
    } else {
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng = trial_rng(seed, trial);
            Permutation w = random_permutation(rng, m);
            Permutation u = random_permutation(rng, m);
            check_pair(w, u, trial);
            check_maximal(w, trial);
        }
    }
    return r;
}

SuiteResult suite_ginv(int n, std::uint64_t seed, int trials, bool allowLarge) {
    SuiteResult r{"ginv"};
    auto catalog = g_invariant_catalog(n);
    auto rhos = all_partial_permutations(n);
    BruhatPoset poset = stratification_poset(n, allowLarge);

    // the catalog is exactly the G-invariant slice of the ideal
    std::vector<Permutation> fromScan;
    for (const Permutation& w : poset.elements)
        if (is_g_invariant(w))
            fromScan.push_back(w);
    std::vector<Permutation> fromCatalog;
    for (const auto& [sigma, rho] : catalog)
        fromCatalog.push_back(sigma);
    std::sort(fromScan.begin(), fromScan.end());
    std::sort(fromCatalog.begin(), fromCatalog.end());
    check(r, fromScan == fromCatalog, [&] {
        return "ginv/g_invariant_catalog: catalog and ideal scan disagree" +
               tag(n, seed, 0);
    });
    check(r, catalog.size() == rhos.size(), [&] {
        return "ginv/g_invariant_catalog: " + std::to_string(catalog.size()) +
               " entries vs " + std::to_string(rhos.size()) +
               " partial permutations" + tag(n, seed, 0);
    });
    for (const auto& [sigma, rho] : catalog) {
        check(r, sigma_from_rho(rho) == sigma && rho_from_sigma(sigma) == rho, [&] {
            return "ginv/sigma_from_rho: round trip broken at " + sigma.str() +
                   tag(n, seed, 0);
        });
        check(r, in_ideal(sigma), [&] {
            return "ginv/sigma_from_rho: " + sigma.str() +
                   " escapes the stratification ideal" + tag(n, seed, 0);
        });
    }

    // the two named strata
    std::vector<int> gsOne, sprOne;
    for (int i = 1; i <= n; ++i)
        gsOne.push_back(i);
    for (int i = 2 * n; i > n; --i)
        gsOne.push_back(i);
    for (int i = 1; i < n; ++i)
        sprOne.push_back(i);
    for (int i = 2 * n; i >= n; --i)
        sprOne.push_back(i);
    auto [gs, spr] = special_sigmas(n);
    check(r, gs == Permutation(gsOne) && spr == Permutation(sprOne), [&] {
        return "ginv/special_sigmas: got (" + gs.str() + ", " + spr.str() + ")" +
               tag(n, seed, 0);
    });
    check(r, bruhat_leq(gs, spr), [&] {
        return "ginv/special_sigmas: " + gs.str() + " not below " + spr.str() +
               tag(n, seed, 0);
    });

    // fibers over the standard flag against matrix Bruhat closures
    for (std::size_t ri = 0; ri < rhos.size(); ++ri) {
        std::uint64_t rhoSeed = seed ^ (0x9e3779b97f4a7c15ull * (ri + 1));
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng = trial_rng(rhoSeed, trial);
            QMatrix x;
            if (trial % 3 == 0) {
                x = random_matrix(rng, n, n);
            } else if (trial % 3 == 1) {
                int k = trial % (n + 1);
                x = random_matrix(rng, n, k) * random_matrix(rng, k, n);
            } else {
                // boundary points: a partial permutation matrix squeezed
                // between upper triangulars
                const PartialPermutation& tau = rhos[rng.below(rhos.size())];
                x = random_invertible_upper(rng, n) * partial_perm_matrix(tau) *
                    random_invertible_upper(rng, n);
            }
            bool split = false;
            std::string what;
            try {
                fiber_check(x, rhos[ri]);
            } catch (const std::runtime_error& e) {
                split = true;
                what = e.what();
            }
            check(r, !split, [&] {
                return "ginv/fiber_check: " + what + tag(n, rhoSeed, trial);
            });
        }
    }

    // Monte Carlo invariance: G-invariant closures absorb the
    // simultaneous action k.(g, X) = (k g, k X k^-1); the others must
    // leak within the move budget.
    int moves = std::max(1, trials / 10);
    for (std::size_t ci = 0; ci < catalog.size(); ++ci) {
        const Permutation& sigma = catalog[ci].first;
        std::uint64_t wSeed = seed ^ (0xbf58476d1ce4e5b9ull * (ci + 1));
        Rng wRng(wSeed);
        auto base = witness_point(sigma, wRng);
        if (!base) {
            r.notes.push_back("ginv: no witness sampled for " + sigma.str() +
                              ", invariance moves skipped");
            continue;
        }
        for (int trial = 0; trial < moves; ++trial) {
            Rng rng = trial_rng(wSeed, trial);
            QMatrix k = random_invertible(rng, n);
            FlagPoint moved{n, k * base->g, k * base->x * inverse(k)};
            check(r, stratum_membership(moved, sigma), [&] {
                return "ginv/is_g_invariant: closure of " + sigma.str() +
                       " lost a point under the group action" + tag(n, wSeed, trial);
            });
        }
    }
    for (const Permutation& sigma : poset.elements) {
        if (is_g_invariant(sigma))
            continue;
        std::uint64_t wSeed = seed ^ (0x94d049bb133111ebull * (sigma.length() + 1)) ^
                              std::hash<std::string>{}(sigma.str());
        Rng wRng(wSeed);
        auto base = witness_point(sigma, wRng);
        if (!base) {
            r.notes.push_back("ginv: no witness sampled for " + sigma.str() +
                              ", violation search skipped");
            continue;
        }
        bool leaked = false;
        for (int trial = 0; trial < 200 && !leaked; ++trial) {
            Rng rng = trial_rng(wSeed, trial);
            QMatrix k = random_invertible(rng, n);
            FlagPoint moved{n, k * base->g, k * base->x * inverse(k)};
            leaked = !stratum_membership(moved, sigma);
        }
        check(r, leaked, [&] {
            return "ginv/is_g_invariant: no invariance violation found for the "
                   "non-invariant stratum " + sigma.str() + " within 200 moves" +
                   tag(n, wSeed, 0);
        });
    }
    return r;
}

const std::vector<std::string>& literal_disagreement_n2() {
    static const std::vector<std::string> s = {"1324", "1342", "1423", "1432", "3412"};
    return s;
}

const std::vector<std::string>& literal_disagreement_n3() {
    static const std::vector<std::string> s = {
        "124356", "124365", "124536", "124563", "124635", "124653", "125346",
        "125364", "125436", "125463", "125643", "126345", "126354", "126435",
        "126453", "126534", "126543", "145236", "145263", "145623", "146235",
        "146253", "146523", "156234", "156243", "156423", "456123"};
    return s;
}

SuiteResult suite_erratum(int n, std::uint64_t seed, int trials, bool allowLarge) {
    (void)trials;
    SuiteResult r{"erratum"};
    BruhatPoset poset = stratification_poset(n, allowLarge);
    std::vector<std::string> disagree;
    for (const Permutation& w : poset.elements) {
        bool essential = is_g_invariant(w);
        bool corrected = descent_criterion(w, DescentVariant::corrected);
        bool literal = descent_criterion(w, DescentVariant::literal);
        check(r, corrected == essential, [&] {
            return "ginv/descent_criterion: corrected variant disagrees with the "
                   "essential-box test at " + w.str() + tag(n, seed, 0);
        });
        if (literal != essential)
            disagree.push_back(w.str());
    }
    std::sort(disagree.begin(), disagree.end());
    if (n == 2 || n == 3) {
        const auto& expected = n == 2 ? literal_disagreement_n2() : literal_disagreement_n3();
        check(r, disagree == expected, [&] {
            std::string got;
            for (const std::string& s : disagree)
                got += (got.empty() ? "" : " ") + s;
            return "ginv/descent_criterion: literal disagreement set changed, got {" +
                   got + "}" + tag(n, seed, 0);
        });
    }
    if (n == 2)
        r.notes.push_back("literal variant disagrees with the essential-box test on " +
                          std::to_string(disagree.size()) +
                          " strata at n = 2, not only on 3412");
    return r;
}

SuiteResult suite_charts(int n, std::uint64_t seed, int trials) {
    SuiteResult r{"charts"};
    std::vector<Permutation> perms = all_permutations(n);
    for (std::size_t pi_idx = 0; pi_idx < perms.size(); ++pi_idx) {
        const Permutation& pi = perms[pi_idx];
        std::uint64_t piSeed = seed ^ (0x9e3779b97f4a7c15ull * (pi_idx + 1));
        SupportPattern ap = aprime_pattern(pi);
        SupportPattern dp = dprime_pattern(pi);
        Permutation target = point_stratum_perm(pi);
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng = trial_rng(piSeed, trial);
            ChartCoords coords(pi, random_matrix(rng, n, n),
                               random_unipotent(rng, ap), random_unipotent(rng, dp));
            auto where = [&](const char* op) {
                return "charts/" + std::string(op) + ": pi=" + pi.str() +
                       tag(n, piSeed, trial);
            };
            try {
                FlagPoint p = chart_forward(coords);
                check(r, chart_membership(pi, p),
                      [&] { return where("chart_membership") + " rejects a chart image"; });
                check(r, chart_inverse(pi, p) == coords,
                      [&] { return where("chart_inverse") + " does not undo chart_forward"; });
                check(r, coset_perm_b_b(coordinate_matrix(coords)) == target, [&] {
                    return where("coordinate_matrix") + " leaves the cell of " +
                           target.str();
                });
                auto [direct, viaChart] = stratified_check(pi, p);
                check(r, direct == viaChart,
                      [&] { return where("stratified_check") + " split"; });
                check(r, in_ideal(direct),
                      [&] { return where("stratified_check") + " outside the ideal"; });
            } catch (const std::exception& e) {
                check(r, false,
                      [&] { return where("trial") + " threw: " + e.what(); });
            }
        }
    }
    return r;
}

SuiteResult suite_minors(int n, std::uint64_t seed, int trials) {
    SuiteResult r{"minors"};
    std::vector<Permutation> perms = all_permutations(n);
    for (std::size_t pi_idx = 0; pi_idx < perms.size(); ++pi_idx) {
        const Permutation& pi = perms[pi_idx];
        std::uint64_t piSeed = seed ^ (0x9e3779b97f4a7c15ull * (pi_idx + 1));
        auto [eplus, eminus] = patterns(pi);
        std::vector<std::pair<int, int>> unionCells = eplus.cells();
        unionCells.insert(unionCells.end(), eminus.cells().begin(), eminus.cells().end());
        SupportPattern full(n, unionCells);
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng = trial_rng(piSeed, trial);
            QMatrix h = random_unipotent(rng, full);
            auto where = [&](const char* what) {
                return "charts/phi: " + std::string(what) + " at pi=" + pi.str() +
                       tag(n, piSeed, trial);
            };
            bool minorsOne = true;
            for (int k = 1; k <= n; ++k) {
                if (det(h.submatrix(0, k, 0, k)) != Rational(1) ||
                    det(h.submatrix(n - k, n, n - k, n)) != Rational(1))
                    minorsOne = false;
            }
            check(r, minorsOne,
                  [&] { return where("a leading or trailing principal minor is not 1"); });
            try {
                auto [bPlus, cMinus] = phi(pi, h);
                check(r, eplus.admits(bPlus) && eminus.admits(cMinus),
                      [&] { return where("factor escapes its half pattern"); });
                check(r, eminus.admits(h * inverse(bPlus)) &&
                             eplus.admits(h * inverse(cMinus)),
                      [&] { return where("cofactor escapes its half pattern"); });
                check(r, phi_inv(pi, bPlus, cMinus) == h,
                      [&] { return where("phi_inv does not restore h"); });
            } catch (const std::exception& e) {
                check(r, false, [&] { return where("threw") + ": " + e.what(); });
            }
        }
    }
    return r;
}

SuiteResult suite_fixture_n2(int n, std::uint64_t seed, int trials) {
    (void)n;
    (void)trials;
    SuiteResult r{"fixture-n2"};
    const std::vector<FixtureEntry>& fix = n2_fixture();
    BruhatPoset poset = stratification_poset(2);
    check(r, fix.size() == 22 && poset.elements.size() == 22, [&] {
        return "fixture/n2_fixture: expected 22 strata, fixture has " +
               std::to_string(fix.size()) + ", poset has " +
               std::to_string(poset.elements.size()) + tag(2, seed, 0);
    });
    for (std::size_t i = 0; i < fix.size() && i < poset.elements.size(); ++i) {
        const FixtureEntry& e = fix[i];
        check(r, e.sigma == poset.elements[i], [&] {
            return "fixture/n2_fixture: entry " + std::to_string(i) + " labels " +
                   e.sigma.str() + " but the poset lists " +
                   poset.elements[i].str() + tag(2, seed, 0);
        });
        check(r, v_of_point(e.point) == e.sigma, [&] {
            return "fixture/n2_fixture: point for " + e.sigma.str() +
                   " evaluates to " + v_of_point(e.point).str() + tag(2, seed, 0);
        });
        check(r, stratum_membership(e.point, e.sigma), [&] {
            return "fixture/n2_fixture: point for " + e.sigma.str() +
                   " rejected by stratum_membership" + tag(2, seed, 0);
        });
    }
    return r;
}

} // namespace

const std::vector<std::string>& verify_suite_names() {
    static const std::vector<std::string> names = {
        "welldef", "quadrants", "ideal-image", "kobayashi", "ginv",
        "erratum", "charts",    "minors",      "fixture-n2"};
    return names;
}

SuiteResult run_verify_suite(const std::string& name, int n, std::uint64_t seed,
                             int trials, bool allow_large) {
    if (n < 1)
        throw std::invalid_argument("run_verify_suite: n must be positive");
    if (trials < 1)
        throw std::invalid_argument("run_verify_suite: trials must be positive");
    if (name == "welldef")
        return suite_welldef(n, seed, trials);
    if (name == "quadrants")
        return suite_quadrants(n, seed, trials);
    if (name == "ideal-image")
        return suite_ideal_image(n, seed, trials);
    if (name == "kobayashi")
        return suite_kobayashi(n, seed, trials);
    if (name == "ginv")
        return suite_ginv(n, seed, trials, allow_large);
    if (name == "erratum")
        return suite_erratum(n, seed, trials, allow_large);
    if (name == "charts")
        return suite_charts(n, seed, trials);
    if (name == "minors")
        return suite_minors(n, seed, trials);
    if (name == "fixture-n2")
        return suite_fixture_n2(n, seed, trials);
    throw std::invalid_argument("run_verify_suite: unknown suite " + name);
}

std::vector<ChartCheckRow> chart_check_matrix(int n, std::uint64_t seed, int trials) {
    if (n < 1)
        throw std::invalid_argument("chart_check_matrix: n must be positive");
    if (trials < 1)
        throw std::invalid_argument("chart_check_matrix: trials must be positive");
    std::vector<ChartCheckRow> rows;
    std::vector<Permutation> perms = all_permutations(n);
    for (std::size_t pi_idx = 0; pi_idx < perms.size(); ++pi_idx) {
        const Permutation& pi = perms[pi_idx];
        ChartCheckRow row{pi, true, true, true};
        std::uint64_t piSeed = seed ^ (0x9e3779b97f4a7c15ull * (pi_idx + 1));
        SupportPattern ap = aprime_pattern(pi);
        SupportPattern dp = dprime_pattern(pi);
        Permutation target = point_stratum_perm(pi);
        for (int trial = 0; trial < trials; ++trial) {
            Rng rng = trial_rng(piSeed, trial);
            ChartCoords coords(pi, random_matrix(rng, n, n),
                               random_unipotent(rng, ap), random_unipotent(rng, dp));
            try {
                FlagPoint p = chart_forward(coords);
                if (!chart_membership(pi, p) || !(chart_inverse(pi, p) == coords))
                    row.round_trip = false;
                if (coset_perm_b_b(coordinate_matrix(coords)) != target)
                    row.cell = false;
                auto [direct, viaChart] = stratified_check(pi, p);
                if (direct != viaChart)
                    row.stratified = false;
            } catch (const std::exception&) {
                row.round_trip = row.cell = row.stratified = false;
            }
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace strata
