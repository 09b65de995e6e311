#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "vclab/density.hpp"
#include "vclab/error.hpp"
#include "vclab/generators.hpp"
#include "vclab/io.hpp"
#include "vclab/relation.hpp"
#include "vclab/set_system.hpp"
#include "vclab/verify.hpp"

namespace {

using namespace vclab;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Range {
    std::size_t lo = 0;
    std::size_t hi = 0;
};

Range parse_range(const std::string& text) {
    Range r;
    const auto dots = text.find("..");
    try {
        if (dots == std::string::npos) {
            r.lo = r.hi = std::stoul(text);
        } else {
            r.lo = std::stoul(text.substr(0, dots));
            r.hi = std::stoul(text.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw ParseError("bad range '" + text + "', expected a or a..b");
    }
    if (r.lo > r.hi) throw ParseError("empty range '" + text + "'");
    return r;
}

Rational parse_rational(const std::string& text) {
    try {
        const auto slash = text.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(text));
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ParseError("bad rational '" + text + "'");
    }
}

// "x,y;x,y;..." with each coordinate an integer or p/q.
std::vector<Point2> parse_points(const std::string& text) {
    std::vector<Point2> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ';')) {
        if (item.empty()) continue;
        const auto comma = item.find(',');
        if (comma == std::string::npos) throw ParseError("bad point '" + item + "', expected x,y");
        out.emplace_back(parse_rational(item.substr(0, comma)), parse_rational(item.substr(comma + 1)));
    }
    return out;
}

void emit(const std::string& out_path, const std::string& text) {
    if (out_path.empty() || out_path == "-") {
        std::cout << text;
    } else {
        write_file(out_path, text);
    }
}

std::uint64_t default_budget() {
    if (const char* env = std::getenv("VCLAB_BUDGET")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw ParseError(std::string("VCLAB_BUDGET is not a number: ") + env);
        }
    }
    return kDefaultBudget;
}

SetSystem load_system(const Json& doc) {
    switch (detect_kind(doc)) {
        case InputKind::set_system: return set_system_from_json(doc);
        case InputKind::relation: return system_of(relation_from_json(doc));
        default: throw ParseError("expected a SetSystem or BiRelation document");
    }
}

FormulaSet load_formula_set(const Json& doc) {
    switch (detect_kind(doc)) {
        case InputKind::relation: return FormulaSet({relation_from_json(doc)});
        case InputKind::formula_set: return formula_set_from_json(doc);
        default: throw ParseError("expected a BiRelation or FormulaSet document");
    }
}

struct GenArgs {
    std::string family;
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t k = 1;
    std::uint64_t q = 0;
    std::size_t window = 0;
    std::size_t max_modulus = 0;
    std::string points;
    std::vector<std::size_t> divisors;
    std::string in;
    std::string out;
};

int cmd_gen(const GenArgs& a) {
    FamilySpec spec;
    spec.family = family_from_string(a.family);
    spec.n = a.n;
    spec.d = a.d;
    spec.k = a.k;
    spec.q = a.q;
    spec.window = a.window;
    spec.max_modulus = a.max_modulus;
    spec.divisors = a.divisors;
    if (spec.family == Family::halfspaces) {
        spec.points = parse_points(a.points);
    } else if (!a.points.empty()) {
        try {
            spec.n = std::stoul(a.points);
        } catch (const std::exception&) {
            throw ParseError("--points must be a count for family " + a.family);
        }
    }
    if (spec.family == Family::phi_hat) {
        if (a.in.empty()) throw ParseError("phi-hat needs --in with a square relation");
        spec.relation = relation_from_json(parse_json(read_file(a.in)));
    }
    const auto result = generate(spec);
    const Json doc = std::visit([](const auto& v) { return to_json(v); }, result);
    emit(a.out, doc.dump(2) + "\n");
    return kExitOk;
}

int cmd_invariants(const std::string& in, const std::string& out, std::uint64_t budget) {
    const SetSystem s = load_system(parse_json(read_file(in)));
    Json report;
    Json exactness;
    report["member_count"] = s.size();
    report["ground_size"] = s.ground_size();
    auto field = [&](const char* name, auto&& compute) {
        try {
            report[name] = compute();
            exactness[name] = "exact";
        } catch (const BudgetExceeded& e) {
            report[name] = nullptr;
            exactness[name] = "skipped";
            if (e.lower_bound()) report[std::string(name) + "_lower_bound"] = *e.lower_bound();
            std::cerr << "warning: " << name << ": " << e.what() << "\n";
        }
    };
    field("vc_dim", [&] { return vc_dimension(s, budget); });
    field("ind_dim", [&] { return independence_dimension(s, budget); });
    field("breadth", [&] { return breadth(s, budget); });
    field("helly", [&] { return helly_number(s, kDefaultHellyCap, budget).value; });
    report["exactness"] = exactness;
    emit(out, report.dump(2) + "\n");
    return kExitOk;
}

struct ShatterArgs {
    std::string in;
    std::string out;
    std::string range;
    std::string mode = "exact";
    std::uint64_t samples = 20'000;
    bool strict = false;
};

int cmd_shatter(const ShatterArgs& a, bool dual, std::uint64_t budget, std::uint64_t seed) {
    if (a.mode != "exact" && a.mode != "sample") throw ParseError("--mode must be exact or sample");
    const bool exact = a.mode == "exact";
    const Json doc = parse_json(read_file(a.in));
    std::optional<SetSystem> system;
    std::optional<FormulaSet> delta;
    std::size_t limit = 0;
    if (dual) {
        delta = load_formula_set(doc);
        limit = delta->y_size();
    } else {
        system = load_system(doc);
        limit = system->ground_size();
    }
    const Range r = a.range.empty() ? Range{0, limit} : parse_range(a.range);
    if (r.hi > limit) {
        throw RangeError("t=" + std::to_string(r.hi) + " exceeds " + (dual ? "y_size " : "ground size ") +
                         std::to_string(limit));
    }
    if (dual && !exact) throw ParseError("dual-shatter supports --mode exact only");

    std::vector<ProfileSample> rows;
    bool incomplete = false;
    for (std::size_t t = r.lo; t <= r.hi; ++t) {
        if (dual) {
            const auto v = dual_shatter(*delta, t, budget);
            if (v.exactness == Exactness::lower_bound) {
                std::cerr << "warning: " << v.warning << "; row omitted\n";
                incomplete = true;
                continue;
            }
            rows.push_back({t, v.value, true});
        } else {
            ShatterOptions opt;
            opt.mode = exact ? ShatterMode::exact : ShatterMode::sample;
            opt.budget = budget;
            opt.samples = a.samples;
            opt.seed = seed + t;
            try {
                const auto v = shatter_function(*system, t, opt);
                rows.push_back({t, v.value, v.exactness == Exactness::exact});
            } catch (const BudgetExceeded& e) {
                std::cerr << "warning: " << e.what() << "; row omitted\n";
                incomplete = true;
            }
        }
    }
    std::string csv = std::string(kProfileCsvHeader) + "\n";
    for (const auto& s : rows) csv += std::to_string(s.t) + "," + std::to_string(s.value) + "," + (s.exact ? "1" : "0") + "\n";
    emit(a.out, csv);
    return (incomplete && a.strict) ? kExitFail : kExitOk;
}

int cmd_fit(const std::string& in, const std::string& out, std::size_t t_min, bool force) {
    const auto profile = ShatterProfile::from_csv(read_file(in), in);
    const FitResult fit = fit_exponent(profile, t_min, force);
    GrowthClass growth = classify_growth(profile);
    emit(out, fit_report(fit, growth).dump(2) + "\n");
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t budget, std::uint64_t seed) {
    std::vector<std::string> names;
    if (suite == "all") {
        names = suite_names();
    } else {
        names = {suite};
    }
    VerifyOptions opt;
    opt.seed = seed;
    opt.budget = budget;
    bool all_pass = true;
    for (const auto& name : names) {
        const auto cases = run_suite(name, opt);
        for (const auto& c : cases) {
            std::cout << name << " | " << to_string(c.status) << " | " << c.name << " | expected " << c.expected
                      << " | observed " << c.observed;
            if (!c.description.empty()) std::cout << " | " << c.description;
            std::cout << "\n";
            if (c.status == CaseStatus::fail) all_pass = false;
        }
    }
    return all_pass ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"vclab: exact set-system invariants, generators and checks"};
    app.require_subcommand(1);

    std::uint64_t budget_flag = 0;
    std::uint64_t seed = 1;
    app.add_option("--budget", budget_flag, "Enumeration budget (subset evaluations); overrides VCLAB_BUDGET");
    app.add_option("--seed", seed, "Seed for sampling and randomized suites")->capture_default_str();

    GenArgs gen;
    auto* g = app.add_subcommand("gen", "Generate a family as JSON");
    g->add_option("--family", gen.family, "subsets|intervals|convex|halfplanes|cosets|progressions|pointline-fq|elekes|hypercube|phi-hat")
        ->required();
    g->add_option("--n", gen.n, "Ground size or modulus");
    g->add_option("--d", gen.d, "Size bound or hypercube dimension");
    g->add_option("--k", gen.k, "Number of runs or grid parameter");
    g->add_option("--q", gen.q, "Prime field size");
    g->add_option("--window", gen.window, "Window for progressions");
    g->add_option("--max-modulus", gen.max_modulus, "Largest modulus for progressions");
    g->add_option("--points", gen.points, "Point count, or x,y;x,y;... for halfplanes");
    g->add_option("--divisors", gen.divisors, "Divisors for cosets")->delimiter(',');
    g->add_option("--in", gen.in, "Input relation for phi-hat");
    g->add_option("--out", gen.out, "Output file (default stdout)");

    std::string inv_in;
    std::string inv_out;
    auto* inv = app.add_subcommand("invariants", "Compute VC dimension, IND, breadth and Helly number");
    inv->add_option("--in,in", inv_in, "SetSystem or BiRelation JSON")->required();
    inv->add_option("--out", inv_out, "Output file (default stdout)");

    ShatterArgs sh;
    auto* shat = app.add_subcommand("shatter", "Shatter function profile as CSV");
    shat->add_option("--in,in", sh.in, "SetSystem or BiRelation JSON")->required();
    shat->add_option("--t", sh.range, "t or a..b (default 0..ground size)");
    shat->add_option("--mode", sh.mode, "exact or sample")->capture_default_str();
    shat->add_option("--samples", sh.samples, "Random subsets per t in sample mode")->capture_default_str();
    shat->add_option("--out", sh.out, "Output file (default stdout)");
    shat->add_flag("--strict", sh.strict, "Exit nonzero when a row is omitted");

    ShatterArgs dsh;
    auto* dshat = app.add_subcommand("dual-shatter", "Dual shatter profile as CSV");
    dshat->add_option("--in,in", dsh.in, "BiRelation or FormulaSet JSON")->required();
    dshat->add_option("--t", dsh.range, "t or a..b (default 0..y_size)");
    dshat->add_option("--mode", dsh.mode, "exact")->capture_default_str();
    dshat->add_option("--out", dsh.out, "Output file (default stdout)");
    dshat->add_flag("--strict", dsh.strict, "Exit nonzero when a row is omitted");

    std::string fit_in;
    std::string fit_out;
    std::size_t t_min = 1;
    bool force = false;
    auto* fit = app.add_subcommand("fit", "Fit a log-log growth exponent to a profile CSV");
    fit->add_option("--in,in", fit_in, "Profile CSV")->required();
    fit->add_option("--t-min", t_min, "Smallest t used in the fit")->capture_default_str();
    fit->add_flag("--force", force, "Fit even when the profile contains lower bounds");
    fit->add_option("--out", fit_out, "Output file (default stdout)");

    std::string suite;
    auto* ver = app.add_subcommand("verify", "Run a named verification suite");
    ver->add_option("--suite", suite, "Suite name or 'all'")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        const std::uint64_t budget = budget_flag != 0 ? budget_flag : default_budget();
        if (g->parsed()) return cmd_gen(gen);
        if (inv->parsed()) return cmd_invariants(inv_in, inv_out, budget);
        if (shat->parsed()) return cmd_shatter(sh, false, budget, seed);
        if (dshat->parsed()) return cmd_shatter(dsh, true, budget, seed);
        if (fit->parsed()) return cmd_fit(fit_in, fit_out, t_min, force);
        if (ver->parsed()) return cmd_verify(suite, budget, seed);
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
