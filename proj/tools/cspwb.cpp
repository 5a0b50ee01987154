#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>

#include <CLI11.hpp>

#include "csp/enumeration.hpp"
#include "csp/gap_search.hpp"
#include "csp/ilp_export.hpp"
#include "csp/metrics.hpp"
#include "csp/wsg.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::string instance_line(const csp::Instance& e) {
    std::string s = std::to_string(e.n) + " " + std::to_string(e.L);
    for (long long v : e.l) s += " " + std::to_string(v);
    return s;
}

int exit_code_for(const csp::Error& e) {
    switch (e.code) {
        case csp::ErrorCode::ParseError:
            return 3;
        case csp::ErrorCode::NTooLarge:
        case csp::ErrorCode::PatternExplosion:
            return 4;
        case csp::ErrorCode::ConsistencyViolation:
        case csp::ErrorCode::PivotLimit:
            return 1;
        default:
            return 2;
    }
}

struct ClassesArgs {
    int n = 0;
    bool hist = false;
    std::string out_path;
    int stride = 1;
    std::string branch = "smallest";
    std::uint64_t seed = 1;
};

int run_classes(const ClassesArgs& a, unsigned threads) {
    csp::EnumOptions opt;
    opt.threads = threads;
    opt.lp_stride = a.stride;
    if (a.branch == "largest") opt.rule = csp::BranchRule::LargestNum;
    else if (a.branch == "random") opt.rule = csp::BranchRule::Random;
    opt.seed = a.seed;

    std::ofstream out;
    if (!a.out_path.empty()) {
        out.open(a.out_path);
        if (!out) csp::fail(csp::ErrorCode::ParseError, "cannot open " + a.out_path);
    }
    std::map<int, std::size_t> hist;
    auto t0 = Clock::now();
    std::size_t total = csp::enumerate_classes(a.n, [&](const csp::PatternClass& c) {
        if (out.is_open()) out << csp::format_class_line(c) << '\n';
        if (a.hist) ++hist[csp::zd_of_pattern_set(c.patterns)];
    }, opt);
    double elapsed = seconds_since(t0);
    for (const auto& [zd, count] : hist) std::cout << "zd " << zd << ' ' << count << '\n';
    std::cout << a.n << ' ' << total << ' ' << elapsed << '\n';
    return 0;
}

struct GapArgs {
    std::string file;
    bool feasible = false;
    bool tighten = false;
    std::string id;
    std::size_t cap = csp::kDefaultPatternCap;
};

int run_gap(const GapArgs& a) {
    auto em = csp::load_instance_m(a.file);
    auto unit = csp::expand_to_unit_demand(em);
    if (a.tighten) {
        unit = csp::tighten_capacity(unit);
        em = csp::to_m_form(unit);
    }
    csp::GapReport r = csp::gaps(em, a.feasible, a.cap);
    std::string id = a.id;
    if (id.empty()) {
        id = a.file;
        auto slash = id.find_last_of('/');
        if (slash != std::string::npos) id = id.substr(slash + 1);
    }
    std::cout << csp::gap_csv_row(id, unit, r) << '\n';
    return 0;
}

struct MaxGapArgs {
    int n = 0;
    bool maximize = false;
    std::string delta;
    bool strict = false;
    int zd_floor = 0;
    std::string out_path;
};

int run_maxgap(const MaxGapArgs& a, unsigned threads) {
    csp::Rational delta(0);
    if (!a.maximize && !csp::parse_rational(a.delta, delta)) {
        std::cerr << "error: bad --delta value: " << a.delta << '\n';
        return 2;
    }
    csp::GapSearchOptions opt;
    opt.strict = a.strict;
    opt.zd_floor = a.zd_floor;
    opt.threads = threads;

    std::ofstream out;
    if (!a.out_path.empty()) {
        out.open(a.out_path);
        if (!out) csp::fail(csp::ErrorCode::ParseError, "cannot open " + a.out_path);
    }
    auto t0 = Clock::now();
    auto hits = csp::search_max_gap(a.n, delta,
                                    a.maximize ? csp::GapSearchMode::Maximize
                                               : csp::GapSearchMode::Threshold,
                                    opt);
    double elapsed = seconds_since(t0);
    for (const auto& h : hits) {
        std::cout << "class " << csp::format_class_line(h.cls) << '\n';
        std::cout << "instance " << instance_line(h.instance) << '\n';
        std::cout << "gap " << csp::gap_csv_row("-", h.instance, h.report) << '\n';
        if (out.is_open()) out << csp::format_class_line(h.cls) << '\n';
    }
    std::string best = "-";
    if (!hits.empty()) best = csp::rat_str(hits.front().report.delta_proper);
    std::cout << a.n << ' ' << hits.size() << ' ' << best << ' ' << elapsed << '\n';
    return 0;
}

int run_realize(const std::string& path) {
    std::ifstream in(path);
    if (!in) csp::fail(csp::ErrorCode::ParseError, "cannot open " + path);
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        auto cls = csp::parse_class_line(line);
        auto out = csp::realize(cls);
        if (out.realizable) std::cout << instance_line(out.instance) << '\n';
        else std::cout << "unrealizable\n";
    }
    return 0;
}

int run_wsg(int n, unsigned threads) {
    csp::EnumOptions opt;
    opt.threads = threads;
    auto t0 = Clock::now();
    std::size_t count = csp::count_weighted_games(n, opt);
    std::cout << n << ' ' << count << ' ' << seconds_since(t0) << '\n';
    return 0;
}

int run_export(int n, int k, const std::string& out_path) {
    std::ofstream out(out_path);
    if (!out) csp::fail(csp::ErrorCode::ParseError, "cannot open " + out_path);
    csp::emit_direct_model(n, k, out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact workbench for unit-demand cutting stock pattern classes"};
    app.require_subcommand(1);
    app.fallthrough();
    unsigned threads = 1;
    app.add_option("--threads", threads, "worker threads for enumeration and search")
        ->capture_default_str();

    ClassesArgs ca;
    auto* classes = app.add_subcommand("classes", "enumerate all pattern-equivalence classes");
    classes->add_option("n", ca.n, "demand")->required()->check(CLI::Range(1, 16));
    classes->add_flag("--hist", ca.hist, "print the class histogram keyed by z_D");
    classes->add_option("--out", ca.out_path, "stream classes to a file");
    classes->add_option("--stride", ca.stride, "run the realizability check every d-th depth")
        ->check(CLI::PositiveNumber);
    classes->add_option("--branch", ca.branch, "branch rule: smallest|largest|random")
        ->check(CLI::IsMember({"smallest", "largest", "random"}));
    classes->add_option("--seed", ca.seed, "seed for the random branch rule");

    GapArgs ga;
    auto* gap = app.add_subcommand("gap", "report z_D, z_C^p and gaps for an instance file");
    gap->add_option("file", ga.file, "instance file (\"m L\" header, then \"l_i b_i\" lines)")
        ->required();
    gap->add_flag("--feasible", ga.feasible, "also compute z_C^f and the full gap");
    gap->add_flag("--tighten-L", ga.tighten, "shrink L to the longest attainable pattern first");
    gap->add_option("--id", ga.id, "instance id for the CSV row");
    gap->add_option("--cap", ga.cap, "feasible-pattern enumeration cap");

    MaxGapArgs ma;
    auto* maxgap = app.add_subcommand("maxgap", "search classes by proper gap");
    maxgap->add_option("n", ma.n, "demand")->required()->check(CLI::Range(1, 16));
    auto* dopt = maxgap->add_option("--delta", ma.delta, "threshold p/q: report classes with gap >= delta");
    auto* mopt = maxgap->add_flag("--maximize", ma.maximize, "find the maximum gap and all classes attaining it");
    dopt->excludes(mopt);
    maxgap->add_flag("--strict", ma.strict, "with --delta: require gap > delta");
    maxgap->add_option("--zd-floor", ma.zd_floor, "restrict the search to classes with z_D >= floor");
    maxgap->add_option("--out", ma.out_path, "stream found classes to a file");

    std::string realize_path;
    auto* realize = app.add_subcommand("realize", "realize classes from a class file as integer instances");
    realize->add_option("file", realize_path, "class file, one \"n k m_1 ... m_k\" line per class")
        ->required();

    int wn = 0;
    auto* wsg = app.add_subcommand("wsg", "count canonical weighted simple games");
    wsg->add_option("n", wn, "voters")->required()->check(CLI::Range(1, 16));

    int en = 0, ek = 0;
    std::string eout;
    auto* exp = app.add_subcommand("export-ilp", "emit the direct pattern-class ILP model");
    exp->add_option("n", en, "demand")->required();
    exp->add_option("k", ek, "enforced lower bound on z_D")->required();
    exp->add_option("out", eout, "output model file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*classes) return run_classes(ca, threads);
        if (*gap) return run_gap(ga);
        if (*maxgap) {
            if (!ma.maximize && ma.delta.empty()) {
                std::cerr << "error: maxgap needs --delta or --maximize\n";
                return 2;
            }
            return run_maxgap(ma, threads);
        }
        if (*realize) return run_realize(realize_path);
        if (*wsg) return run_wsg(wn, threads);
        if (*exp) return run_export(en, ek, eout);
    } catch (const csp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
