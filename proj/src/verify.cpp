#include "vclab/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <random>

#include "vclab/combinatorics.hpp"
#include "vclab/error.hpp"
#include "vclab/generators.hpp"
#include "vclab/random.hpp"
#include "vclab/relation.hpp"
#include "vclab/rooted_graph.hpp"
#include "vclab/ultrametric.hpp"

namespace vclab {

namespace {

using Cases = std::vector<VerificationCase>;

void add(Cases& out, std::string name, std::string description, std::string expected, std::string observed, bool ok) {
    out.push_back({std::move(name), std::move(description), std::move(expected), std::move(observed),
                   ok ? CaseStatus::pass : CaseStatus::fail});
}

// Runs body; a budget overrun turns the case into a skip instead of a failure.
void guarded(Cases& out, const std::string& name, const std::string& description,
             const std::function<void()>& body) {
    try {
        body();
    } catch (const BudgetExceeded& e) {
        out.push_back({name, description, "", std::string("budget: ") + e.what(), CaseStatus::skipped});
    }
}

std::string eq(std::uint64_t v) { return "== " + std::to_string(v); }

Cases suite_sauer(const VerifyOptions& opt) {
    Cases out;
    add(out, "bound n=4 d=2 expect 11", "C(4,<=2)", eq(11), to_string(sauer_shelah_bound(4, 2)),
        sauer_shelah_bound(4, 2) == 11);
    add(out, "bound n=5 d=5 expect 32", "C(5,<=5) is the full power set", eq(32), to_string(sauer_shelah_bound(5, 5)),
        sauer_shelah_bound(5, 5) == 32);
    const auto sub = subsets_at_most_d(5, 2);
    const auto pi4 = shatter_function(sub, 4).value;
    add(out, "subsets n=5 d=2 pi(4) expect 11", "all <=2-subsets of a 5-set traced on 4 points", eq(11),
        std::to_string(pi4), pi4 == 11);
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = uniform(rng, 3, 10);
        const std::size_t m = uniform(rng, 1, 30);
        const auto s = random_system(rng, n, m);
        const std::string name = "random system " + std::to_string(i) + " pi(t) <= C(t,<=vc)";
        guarded(out, name, "", [&] {
            const int vc = vc_dimension(s, opt.budget);
            std::size_t violations = 0;
            for (std::size_t t = 0; t <= n; ++t) {
                const auto v = shatter_function(s, t, {ShatterMode::exact, opt.budget}).value;
                if (v > binomial_sum_at_most(t, static_cast<std::uint64_t>(vc))) ++violations;
            }
            add(out, name, "n=" + std::to_string(n) + " members=" + std::to_string(s.size()) + " vc=" +
                std::to_string(vc), "0 violations", std::to_string(violations) + " violations", violations == 0);
        });
    }
    return out;
}

Cases suite_duality(const VerifyOptions& opt) {
    Cases out;
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < 10; ++i) {
        const auto rel = random_relation(rng, 6, 6);
        const auto dual = dualize(rel);
        std::size_t mismatches = 0;
        for (std::size_t t = 0; t <= rel.x_size(); ++t) {
            const auto primal = shatter_function(system_of(rel), t).value;
            const auto dual_value = dual_shatter(dual, t, opt.budget).value;
            if (primal != dual_value) ++mismatches;
        }
        add(out, "random relation " + std::to_string(i) + " pi == dual pi of dual", "6x6", "0 mismatches",
            std::to_string(mismatches) + " mismatches", mismatches == 0);
        const int vc = vc_dimension(system_of(rel));
        const int vc_dual = vc_dimension(system_of(dual));
        const bool ok = vc < (1 << (1 + vc_dual));
        add(out, "random relation " + std::to_string(i) + " VC < 2^(1+VC*)", "",
            "< " + std::to_string(1 << (1 + vc_dual)), std::to_string(vc), ok);
        add(out, "random relation " + std::to_string(i) + " double dual", "", "identity",
            dualize(dual) == rel ? "identity" : "differs", dualize(dual) == rel);
    }
    return out;
}

Cases suite_breadth_ind(const VerifyOptions& opt) {
    Cases out;
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < 20; ++i) {
        const auto s = random_system(rng, uniform(rng, 3, 9), uniform(rng, 1, 12));
        const std::string name = "random system " + std::to_string(i) + " breadth >= IND";
        guarded(out, name, "", [&] {
            const int b = breadth(s, opt.budget);
            const int ind = independence_dimension(s, opt.budget);
            add(out, name, "", ">= " + std::to_string(ind), std::to_string(b), b >= ind);
        });
    }
    const int convex = breadth(convex_sets(6));
    add(out, "convex sets of 6 points breadth expect 2", "", eq(2), std::to_string(convex), convex == 2);
    const auto z6 = subgroups_zn(6, {2, 3});
    add(out, "Z6 <2>,<3> IND expect 2", "", eq(2), std::to_string(independence_dimension(z6)),
        independence_dimension(z6) == 2);
    add(out, "Z6 <2>,<3> breadth expect 2", "", eq(2), std::to_string(breadth(z6)), breadth(z6) == 2);
    return out;
}

Cases suite_poizat(const VerifyOptions&) {
    Cases out;
    for (std::size_t n = 1; n <= 24; ++n) {
        const auto divs = divisors_of(n);
        std::size_t families = 0;
        std::size_t mismatches = 0;
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << divs.size()); ++mask) {
            std::vector<std::size_t> chosen;
            for (std::size_t i = 0; i < divs.size(); ++i) {
                if ((mask >> i) & 1U) chosen.push_back(divs[i]);
            }
            const auto h = subgroups_zn(n, chosen);
            ++families;
            if (breadth(h) != independence_dimension(h)) ++mismatches;
        }
        add(out, "Z" + std::to_string(n) + " subgroup families breadth == IND",
            std::to_string(families) + " families, including the empty family and {Z_n}", "0 mismatches",
            std::to_string(mismatches) + " mismatches", mismatches == 0);
    }
    return out;
}

Cases suite_coding(const VerifyOptions& opt) {
    Cases out;
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < 10; ++i) {
        const std::size_t d = 1 + static_cast<std::size_t>(i % 2);
        const std::size_t nx = uniform(rng, 5, 8);
        const std::size_t ny = uniform(rng, 5, 8);
        std::vector<BiRelation> rels;
        for (std::size_t k = 0; k < d; ++k) rels.push_back(random_relation(rng, nx, ny));
        const ShelahCode code{FormulaSet(rels)};
        std::vector<std::size_t> ys(ny);
        for (std::size_t y = 0; y < ny; ++y) ys[y] = y;
        std::shuffle(ys.begin(), ys.end(), rng);
        const std::vector<std::size_t> B(ys.begin(), ys.begin() + 3);
        const auto params = code.build_params(B);
        const auto types = count_types(code.delta(), B);
        const auto coded = count_types(FormulaSet({code.materialize(params)}), [&] {
            std::vector<std::size_t> all(params.size());
            for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
            return all;
        }());
        const std::string tag = "random d=" + std::to_string(d) + " #" + std::to_string(i);
        add(out, tag + " |B'| = 2d|B|", "", eq(2 * d * 3), std::to_string(params.size()), params.size() == 2 * d * 3);
        add(out, tag + " types <= coded types", "", ">= " + std::to_string(types), std::to_string(coded),
            types <= coded);
    }
    return out;
}

Cases suite_lift(const VerifyOptions& opt) {
    Cases out;
    std::mt19937_64 rng(opt.seed);
    const std::size_t t = 3;
    for (int i = 0; i < 5; ++i) {
        const auto phi = random_relation(rng, uniform(rng, 4, 6), uniform(rng, 3, 6));
        const std::size_t extra = t + 1;
        const auto psi = lift_parameter(phi, extra, 0);
        const std::string name = "random phi #" + std::to_string(i) + " t*pi_phi(t) <= pi_psi(2t)";
        guarded(out, name, "", [&] {
            const auto lhs = t * shatter_function(system_of(phi), t, {ShatterMode::exact, opt.budget}).value;
            const auto rhs = shatter_function(system_of(psi), 2 * t, {ShatterMode::exact, opt.budget}).value;
            add(out, name, "t=3, extra domain of 4", ">= " + std::to_string(lhs), std::to_string(rhs), lhs <= rhs);
        });
    }
    return out;
}

Cases suite_phi_hat(const VerifyOptions& opt) {
    Cases out;
    std::mt19937_64 rng(opt.seed);
    std::bernoulli_distribution coin(0.5);
    for (int i = 0; i < 10; ++i) {
        const std::size_t n = uniform(rng, 4, 8);
        const auto rel = random_relation(rng, n, n, 0.3);
        for (int j = 0; j < 3; ++j) {
            BitVec A(n);
            for (std::size_t x = 0; x < n; ++x) A.set(x, coin(rng));
            const auto b = phi_hat_bounds(rel, A);
            const std::string tag = "relation " + std::to_string(i) + " subset " + std::to_string(j);
            add(out, tag + " lower bound", "|A0| + |E|/2 <= traces",
                ">= " + std::to_string(b.a0) + " + " + std::to_string(b.induced_edges) + "/2",
                std::to_string(b.trace_count), b.lower_holds());
            add(out, tag + " upper bound", "traces <= 1 + |A0| + |E|", "<= " + std::to_string(1 + b.a0 + b.induced_edges),
                std::to_string(b.trace_count), b.upper_holds());
            add(out, tag + " corrected upper bound", "traces <= 1 + |A_split| + |E|",
                "<= " + std::to_string(1 + b.a_split + b.induced_edges), std::to_string(b.trace_count),
                b.corrected_upper_holds());
        }
    }
    return out;
}

Cases suite_incidence(const VerifyOptions& opt) {
    Cases out;
    for (std::uint64_t q : {3, 5, 7}) {
        const auto rel = pointline_fq(q);
        add(out, "fq-edges q=" + std::to_string(q) + " expect " + std::to_string(q * q * q), "", eq(q * q * q),
            std::to_string(rel.edge_count()), rel.edge_count() == q * q * q);
        const std::uint64_t v = 2 * q * q;
        const std::uint64_t e = rel.edge_count();
        add(out, "fq q=" + std::to_string(q) + " 8|E|^2 == |V|^3", "", eq(v * v * v), std::to_string(8 * e * e),
            8 * e * e == v * v * v);
        guarded(out, "fq q=" + std::to_string(q) + " no K22", "", [&] {
            const bool found = detect_krs(rel, 2, 2, opt.budget).has_value();
            add(out, "fq q=" + std::to_string(q) + " no K22", "", "absent", found ? "present" : "absent", !found);
        });
    }
    guarded(out, "fq q=3 complement has K33", "", [&] {
        const bool found = detect_krs(negate(pointline_fq(3)), 3, 3, opt.budget).has_value();
        add(out, "fq q=3 complement has K33", "", "present", found ? "present" : "absent", found);
    });
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto g = elekes_grid(k);
        const std::uint64_t e = g.incidence.edge_count();
        const std::uint64_t want = 4 * k * k * k * k;
        add(out, "elekes k=" + std::to_string(k) + " incidences", "", eq(want), std::to_string(e), e == want);
        const std::uint64_t v = g.incidence.x_size() + g.incidence.y_size();
        const u128 lhs = static_cast<u128>(4 * e) * (4 * e) * (4 * e);
        const u128 rhs = static_cast<u128>(v) * v * v * v;
        add(out, "elekes k=" + std::to_string(k) + " (4E)^3 == |V|^4", "", "== " + to_string(rhs), to_string(lhs),
            lhs == rhs);
    }
    return out;
}

Cases suite_balls(const VerifyOptions&) {
    Cases out;
    const UltrametricSpace s2(2, 4);
    const auto c13 = count_balls_within(s2, Ball{0, 2}, 2);
    add(out, "beta p=2 d=2 expect 13", "interior ball in the p=2, D=4 tree", eq(beta_d(2, 2)), std::to_string(c13.count),
        c13.count == beta_d(2, 2) && !c13.boundary);
    const UltrametricSpace s3(3, 2);
    const auto c5 = count_balls_within(s3, Ball{0, 1}, 1);
    add(out, "beta p=3 d=1 expect 5", "", eq(beta_d(3, 1)), std::to_string(c5.count), c5.count == beta_d(3, 1));
    const UltrametricSpace s(2, 3);
    const auto sp = special_balls(s, {s.parse("000"), s.parse("001"), s.parse("010"), s.parse("100")});
    add(out, "special balls of {000,001,010,100} expect 3", "", eq(3), std::to_string(sp.size()), sp.size() == 3);
    const auto fam = ball_family_system(s, all_balls(s));
    add(out, "all balls p=2 D=3 breadth expect 1", "", eq(1), std::to_string(breadth(fam)), breadth(fam) == 1);
    const int ind = independence_dimension(fam);
    add(out, "all balls p=2 D=3 IND <= 1", "", "<= 1", std::to_string(ind), ind <= 1);
    return out;
}

Cases suite_rooted(const VerifyOptions&) {
    Cases out;
    for (std::size_t t = 3; t <= 6; ++t) {
        for (std::size_t k = 1; k <= std::min<std::size_t>(3, t); ++k) {
            const auto g = rooted_graph_of(subsets_of_size(t, k));
            const Ratio a = average_degree(g);
            const Ratio m = max_average_degree(g);
            const std::string tag = "([" + std::to_string(t) + "] choose " + std::to_string(k) + ")";
            add(out, tag + " adeg == mdeg == 2k", "", "== " + std::to_string(2 * k),
                std::to_string(a.numerator()) + "/" + std::to_string(a.denominator()) + ", " +
                    std::to_string(m.numerator()) + "/" + std::to_string(m.denominator()),
                a == Ratio(static_cast<long long>(2 * k)) && m == a);
        }
    }
    return out;
}

Cases suite_hypercube(const VerifyOptions& opt) {
    Cases out;
    for (std::size_t d = 1; d <= 8; ++d) {
        const auto h = hypercube_edges(d);
        const std::uint64_t want = d << (d - 1);
        add(out, "Q" + std::to_string(d) + " edges", "", eq(want), std::to_string(h.edges.size()),
            h.edges.size() == want);
    }
    for (std::size_t d = 2; d <= 4; ++d) {
        const auto e = max_induced_edges(d, 4, opt.budget);
        add(out, "Q" + std::to_string(d) + " max edges on 4 vertices", "", eq(4), std::to_string(e), e == 4);
    }
    const int vc = vc_dimension(hypercube_edges(4).system);
    add(out, "Q4 edge system VC <= 2", "", "<= 2", std::to_string(vc), vc <= 2);
    return out;
}

const std::map<std::string, std::function<Cases(const VerifyOptions&)>>& registry() {
    static const std::map<std::string, std::function<Cases(const VerifyOptions&)>> suites{
        {"sauer", suite_sauer},       {"duality", suite_duality},   {"breadth-ind", suite_breadth_ind},
        {"poizat", suite_poizat},     {"coding", suite_coding},     {"lift", suite_lift},
        {"phi-hat", suite_phi_hat},   {"incidence", suite_incidence}, {"balls", suite_balls},
        {"rooted", suite_rooted},     {"hypercube", suite_hypercube},
    };
    return suites;
}

}  // namespace

std::vector<std::string> suite_names() {
    return {"sauer", "duality", "breadth-ind", "poizat", "coding", "lift",
            "phi-hat", "incidence", "balls", "rooted", "hypercube"};
}

std::vector<VerificationCase> run_suite(const std::string& name, const VerifyOptions& options) {
    const auto& suites = registry();
    auto it = suites.find(name);
    if (it == suites.end()) throw ParseError("unknown suite '" + name + "'");
    return it->second(options);
}

std::string to_string(CaseStatus status) {
    switch (status) {
        case CaseStatus::pass: return "pass";
        case CaseStatus::fail: return "fail";
        case CaseStatus::skipped: return "skipped";
    }
    return "?";
}

}  // namespace vclab
