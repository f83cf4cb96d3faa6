#include <strata/cli.hpp>

#include <strata/bruhat.hpp>
#include <strata/ginv.hpp>
#include <strata/serialize.hpp>
#include <strata/stratmap.hpp>
#include <strata/verify.hpp>

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace strata {

namespace {

Permutation parse_perm(const std::string& s) {
    std::vector<int> oneline;
    if (s.find(',') != std::string::npos) {
        std::stringstream ss(s);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
                throw std::invalid_argument("--perm: bad entry \"" + tok + "\"");
            oneline.push_back(std::stoi(tok));
        }
    } else {
        for (char ch : s) {
            if (ch < '1' || ch > '9')
                throw std::invalid_argument("--perm wants a digit string like 2431, "
                                            "or comma separated values past S_9");
            oneline.push_back(ch - '0');
        }
    }
    return Permutation(std::move(oneline));
}

int write_payload(const std::string& payload, const std::string& outPath,
                  std::ostream& out, std::ostream& err) {
    if (outPath.empty()) {
        out << payload;
        return 0;
    }
    std::ofstream f(outPath, std::ios::binary);
    if (!f) {
        err << "cannot open " << outPath << " for writing\n";
        return 1;
    }
    f << payload;
    return 0;
}

struct IdealArgs {
    int n = 2;
    std::string format = "text";
    bool allowLarge = false;
    std::string outPath;
};
struct StratumArgs {
    std::string perm;
    int n = 0; // 0 means "infer from --perm"
    std::string format = "text";
    std::string outPath;
};
struct EvalArgs {
    std::string pointPath;
    std::string format = "text";
    std::string outPath;
};
struct VerifyArgs {
    int n = 2;
    std::uint64_t seed = 0;
    int trials = 100;
    std::string suite;
    std::string format = "json";
    bool allowLarge = false;
    std::string outPath;
};
struct ChartsArgs {
    bool check = false;
    int n = 2;
    std::uint64_t seed = 0;
    int trials = 50;
    bool allowLarge = false;
    std::string outPath;
};

int cmd_ideal(const IdealArgs& a, std::ostream& out, std::ostream& err) {
    BruhatPoset poset = stratification_poset(a.n, a.allowLarge);
    std::string payload;
    if (a.format == "json") {
        payload = ideal_json(poset, a.n).dump(2) + "\n";
    } else if (a.format == "dot") {
        payload = ideal_dot(poset, a.n);
    } else {
        std::ostringstream os;
        os << "stratification ideal at n = " << a.n << ": " << poset.elements.size()
           << " strata in S_" << 2 * a.n << ", ambient dimension "
           << space_dimension(a.n) << "\n";
        for (const Permutation& w : poset.elements) {
            os << "  " << w.str() << "  length " << w.length() << "  dimension "
               << stratum_dimension(w);
            if (is_g_invariant(w))
                os << "  G-invariant";
            os << "\n";
        }
        os << "covers: " << poset.covers.size() << "\n";
        payload = os.str();
    }
    return write_payload(payload, a.outPath, out, err);
}

std::string stratum_text(const Permutation& w) {
    std::ostringstream os;
    os << "stratum " << w.str() << " in S_" << w.size() << "\n";
    os << "  length " << w.length() << ", dimension " << stratum_dimension(w) << "\n";
    DiagramData dd = diagram_and_essential(w);
    RankTable rw = perm_rank_table(w);
    os << "  essential boxes:";
    if (dd.essential.empty())
        os << " none (open stratum)";
    for (auto [i, j] : dd.essential)
        os << " (" << i << "," << j << ") rank " << rw.at(i, j);
    os << "\n";
    for (const StratumCondition& c : readable_conditions(w))
        os << "  " << c.text << "\n";
    if (is_g_invariant(w)) {
        os << "  G-invariant, rho has ones at";
        PartialPermutation rho = rho_from_sigma(w);
        if (rho.ones().empty())
            os << " no positions (rho = 0)";
        for (auto [r, c] : rho.ones())
            os << " (" << r << "," << c << ")";
        os << "\n";
    } else {
        os << "  not G-invariant\n";
    }
    os << "  maximal biGrassmannians below:";
    for (const Permutation& b : max_bigrassmannians_below(w))
        os << " " << b.str();
    if (max_bigrassmannians_below(w).empty())
        os << " none";
    os << "\n";
    return os.str();
}

int cmd_stratum(const StratumArgs& a, std::ostream& out, std::ostream& err) {
    Permutation w = parse_perm(a.perm);
    if (w.size() == 0 || w.size() % 2 != 0)
        throw std::invalid_argument("stratum labels live in S_2n; " + w.str() +
                                    " has odd size");
    if (a.n != 0 && w.size() != 2 * a.n)
        throw std::invalid_argument("--n " + std::to_string(a.n) +
                                    " disagrees with --perm, which lives in S_" +
                                    std::to_string(w.size()));
    if (!in_ideal(w)) {
        err << ideal_rejection_message(w) << "\n";
        return 1;
    }
    std::string payload;
    if (a.format == "json") {
        OrderedJson j;
        j["schema"] = 1;
        OrderedJson report = stratum_report_json(w);
        for (auto& [key, value] : report.items())
            j[key] = value;
        payload = j.dump(2) + "\n";
    } else {
        payload = stratum_text(w);
    }
    return write_payload(payload, a.outPath, out, err);
}

int cmd_eval(const EvalArgs& a, std::ostream& out, std::ostream& err) {
    std::ifstream f(a.pointPath);
    if (!f) {
        err << "cannot read " << a.pointPath << "\n";
        return 1;
    }
    OrderedJson pj;
    try {
        pj = OrderedJson::parse(f);
    } catch (const OrderedJson::parse_error& e) {
        err << a.pointPath << ": " << e.what() << "\n";
        return 1;
    }
    FlagPoint p = point_from_json(pj);
    Permutation v = v_of_point(p); // rejects singular g
    std::vector<int> divisors;
    for (int k = 1; k <= 2 * p.n - 1; ++k)
        if (divisor_test(p, k))
            divisors.push_back(k);

    std::string payload;
    if (a.format == "json") {
        OrderedJson j;
        j["schema"] = 1;
        j["n"] = p.n;
        j["v"] = v.str();
        j["divisors"] = divisors;
        j["stratum"] = stratum_report_json(v);
        payload = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        os << "v = " << v.str() << "\n";
        os << "minimal stratum: " << v.str() << ", length " << v.length()
           << ", dimension " << stratum_dimension(v)
           << (is_g_invariant(v) ? ", G-invariant" : ", not G-invariant") << "\n";
        os << "divisors:";
        if (divisors.empty())
            os << " none";
        for (int k : divisors)
            os << " s" << k;
        os << "\n";
        payload = os.str();
    }
    return write_payload(payload, a.outPath, out, err);
}

int cmd_verify(const VerifyArgs& a, std::ostream& out, std::ostream& err) {
    if (a.n > 4 && !a.allowLarge)
        throw std::runtime_error("verify: n > 4 makes the ideal in S_" +
                                 std::to_string(2 * a.n) +
                                 " very large; pass --allow-large to proceed");
    std::vector<std::string> names;
    if (a.suite.empty())
        names = verify_suite_names();
    else
        names.push_back(a.suite);

    std::vector<SuiteResult> results;
    bool allPassed = true;
    for (const std::string& name : names) {
        results.push_back(run_verify_suite(name, a.n, a.seed, a.trials, a.allowLarge));
        allPassed = allPassed && results.back().passed;
    }

    std::string payload;
    if (a.format == "json") {
        OrderedJson j;
        j["schema"] = 1;
        j["n"] = a.n;
        j["seed"] = a.seed;
        j["trials"] = a.trials;
        OrderedJson suites = OrderedJson::array();
        for (const SuiteResult& r : results)
            suites.push_back(OrderedJson{{"name", r.name},
                                         {"passed", r.passed},
                                         {"checks", r.checks},
                                         {"failures", r.failures},
                                         {"notes", r.notes}});
        j["suites"] = std::move(suites);
        j["passed"] = allPassed;
        payload = j.dump(2) + "\n";
    } else {
        std::ostringstream os;
        for (const SuiteResult& r : results) {
            os << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.checks
               << " checks)\n";
            for (const std::string& s : r.failures)
                os << "    " << s << "\n";
            for (const std::string& s : r.notes)
                os << "    note: " << s << "\n";
        }
        os << (allPassed ? "all suites passed" : "suite failures present") << "\n";
        payload = os.str();
    }
    int rc = write_payload(payload, a.outPath, out, err);
    if (rc != 0)
        return rc;
    return allPassed ? 0 : 1;
}

int cmd_charts(const ChartsArgs& a, std::ostream& out, std::ostream& err) {
    if (!a.check) {
        err << "charts: pass --check to run the per chart verification\n";
        return 1;
    }
    if (a.n > 4 && !a.allowLarge)
        throw std::runtime_error("charts: n > 4 is refused without --allow-large");
    std::vector<ChartCheckRow> rows = chart_check_matrix(a.n, a.seed, a.trials);
    bool all = true;
    std::size_t width = 2;
    for (const ChartCheckRow& r : rows)
        width = std::max(width, r.pi.str().size());
    std::ostringstream os;
    os << "chart checks at n = " << a.n << ", seed " << a.seed << ", " << a.trials
       << " trials per chart\n";
    os << std::left << std::setw(static_cast<int>(width) + 2) << "pi" << std::setw(12)
       << "round-trip" << std::setw(6) << "cell" << "stratified\n";
    for (const ChartCheckRow& r : rows) {
        os << std::setw(static_cast<int>(width) + 2) << r.pi.str() << std::setw(12)
           << (r.round_trip ? "ok" : "FAIL") << std::setw(6)
           << (r.cell ? "ok" : "FAIL") << (r.stratified ? "ok" : "FAIL") << "\n";
        all = all && r.round_trip && r.cell && r.stratified;
    }
    os << (all ? "all charts pass" : "chart failures present") << "\n";
    int rc = write_payload(os.str(), a.outPath, out, err);
    if (rc != 0)
        return rc;
    return all ? 0 : 1;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"stratification of Fl(n) x Mat_n: poset enumeration, stratum "
                 "reports, chart maps, randomized verification"};
    app.require_subcommand(1);

    IdealArgs ia;
    StratumArgs sa;
    EvalArgs ea;
    VerifyArgs va;
    ChartsArgs ca;

    CLI::App* ideal = app.add_subcommand("ideal", "enumerate the stratification poset");
    ideal->add_option("--n", ia.n, "matrix size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    ideal->add_option("--format", ia.format, "json, dot, or text")
        ->check(CLI::IsMember({"json", "dot", "text"}))
        ->capture_default_str();
    ideal->add_flag("--allow-large", ia.allowLarge, "permit n > 4");
    ideal->add_option("--out", ia.outPath, "write to this file instead of stdout");

    CLI::App* stratum = app.add_subcommand("stratum", "report on one stratum");
    stratum->add_option("--perm", sa.perm, "label in S_2n, e.g. 2431")->required();
    stratum->add_option("--n", sa.n, "matrix size, checked against --perm")
        ->check(CLI::PositiveNumber);
    stratum->add_option("--format", sa.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    stratum->add_option("--out", sa.outPath, "write to this file instead of stdout");

    CLI::App* eval = app.add_subcommand("eval", "evaluate the invariant at a point");
    eval->add_option("--point", ea.pointPath, "JSON file with {n, g, X}")
        ->required()
        ->check(CLI::ExistingFile);
    eval->add_option("--format", ea.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    eval->add_option("--out", ea.outPath, "write to this file instead of stdout");

    CLI::App* verify =
        app.add_subcommand("verify", "run the randomized verification suites");
    verify->add_option("--n", va.n, "matrix size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--seed", va.seed, "rng seed")->capture_default_str();
    verify->add_option("--trials", va.trials, "trials per sampled check")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    verify->add_option("--suite", va.suite, "run a single suite")
        ->check(CLI::IsMember(verify_suite_names()));
    verify->add_option("--format", va.format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    verify->add_flag("--allow-large", va.allowLarge, "permit n > 4");
    verify->add_option("--out", va.outPath, "write to this file instead of stdout");

    CLI::App* charts =
        app.add_subcommand("charts", "chart checks around the point strata");
    charts->add_flag("--check", ca.check, "run the per chart pass/fail matrix");
    charts->add_option("--n", ca.n, "matrix size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    charts->add_option("--seed", ca.seed, "rng seed")->capture_default_str();
    charts->add_option("--trials", ca.trials, "trials per chart")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    charts->add_flag("--allow-large", ca.allowLarge, "permit n > 4");
    charts->add_option("--out", ca.outPath, "write to this file instead of stdout");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("strata");
    for (const std::string& s : args)
        argv.push_back(s.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (ideal->parsed())
            return cmd_ideal(ia, out, err);
        if (stratum->parsed())
            return cmd_stratum(sa, out, err);
        if (eval->parsed())
            return cmd_eval(ea, out, err);
        if (verify->parsed())
            return cmd_verify(va, out, err);
        if (charts->parsed())
            return cmd_charts(ca, out, err);
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    return 0;
}

} // namespace strata
