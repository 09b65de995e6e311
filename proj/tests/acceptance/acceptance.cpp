// One PASS/FAIL line per acceptance criterion. Exit status is nonzero if any
// criterion fails. All comparisons are exact except the slope window.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracle.hpp"
#include "vclab/combinatorics.hpp"
#include "vclab/density.hpp"
#include "vclab/generators.hpp"
#include "vclab/random.hpp"
#include "vclab/relation.hpp"
#include "vclab/rooted_graph.hpp"
#include "vclab/set_system.hpp"
#include "vclab/ultrametric.hpp"

using namespace vclab;

namespace {

constexpr double kSlopeLo = 1.6;
constexpr double kSlopeHi = 2.0;

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Accumulates named checks; the first few failures are kept for the report.
class Tally {
public:
    void check(bool ok, const std::string& what) {
        ++total_;
        if (!ok) {
            ++failed_;
            if (failed_ <= 3) failures_ += (failures_.empty() ? "" : "; ") + what;
        }
    }
    Outcome outcome(const std::string& summary) const {
        Outcome o;
        o.pass = failed_ == 0;
        std::ostringstream ss;
        ss << summary << " [" << (total_ - failed_) << "/" << total_ << " checks]";
        if (failed_ > 0) ss << " first failures: " << failures_;
        o.detail = ss.str();
        return o;
    }

private:
    std::size_t total_ = 0;
    std::size_t failed_ = 0;
    std::string failures_;
};

std::string str(std::uint64_t v) { return std::to_string(v); }

std::vector<Point2> parabola(std::size_t n) {
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < n; ++i) {
        const auto x = static_cast<long long>(i);
        pts.emplace_back(Rational(x), Rational(x * x));
    }
    return pts;
}

Outcome intervals_criterion() {
    Tally t;
    for (std::size_t n = 4; n <= 12; ++n) {
        const auto s = intervals(n, 1);
        const auto want = binomial_sum_at_most(n, 2);
        const auto traces = shatter_function(s, n).value;
        t.check(traces == want, "n=" + str(n) + " traces " + str(traces) + " != " + to_string(want));
        t.check(s.size() == oracle::interval_unions(n, 1), "n=" + str(n) + " run-count oracle");
    }
    for (std::size_t k = 1; k <= 2; ++k) {
        const int vc = vc_dimension(intervals(10, k));
        t.check(vc == static_cast<int>(2 * k), "k=" + str(k) + " vc " + std::to_string(vc));
    }
    return t.outcome("traces == C(n,<=2) for n=4..12; VC(k=1,2 on 10 points) == 2,4");
}

Outcome halfplanes_criterion() {
    Tally t;
    const auto s = halfplanes(parabola(7));
    // 2·(C(7,<=2) − C(7,<=1) + C(7,<=0)).
    const auto formula = 2 * (binomial_sum_at_most(7, 2) - binomial_sum_at_most(7, 1) + binomial_sum_at_most(7, 0));
    t.check(formula == 44, "formula gives " + to_string(formula));
    t.check(s.size() == 44, "7 points give " + str(s.size()) + " traces");
    t.check(shatter_function(s, 7).value == 44, "pi(7) on 7 points");
    for (std::size_t n = 5; n <= 8; ++n) {
        const int vc = vc_dimension(halfplanes(parabola(n)));
        t.check(vc == 3, str(n) + " points VC " + std::to_string(vc));
    }
    return t.outcome("7 points on a parabola: 44 traces; VC 3 on 5..8 points");
}

Outcome sauer_criterion() {
    Tally t;
    std::mt19937_64 rng(3001);
    for (int i = 0; i < 100; ++i) {
        const std::size_t n = uniform(rng, 1, 12);
        const auto s = random_system(rng, n, uniform(rng, 1, 40));
        const int vc = vc_dimension(s);
        for (std::size_t k = 0; k <= n; ++k) {
            const auto v = shatter_function(s, k).value;
            t.check(v <= binomial_sum_at_most(k, static_cast<std::uint64_t>(vc)),
                    "system " + std::to_string(i) + " t=" + str(k));
        }
    }
    return t.outcome("100 systems (n<=12, <=40 members), every t <= n");
}

Outcome duality_criterion() {
    Tally t;
    std::mt19937_64 rng(3002);
    for (int i = 0; i < 50; ++i) {
        const auto rel = random_relation(rng, uniform(rng, 1, 8), uniform(rng, 1, 8));
        const auto dual = dualize(rel);
        for (std::size_t k = 0; k <= rel.x_size(); ++k) {
            const auto primal = shatter_function(system_of(rel), k).value;
            const auto d = dual_shatter(dual, k);
            t.check(d.exactness == Exactness::exact && primal == d.value,
                    "relation " + std::to_string(i) + " t=" + str(k) + ": " + str(primal) + " vs " + str(d.value));
        }
        const int vc = vc_dimension(system_of(rel));
        const int vc_dual = vc_dimension(system_of(dual));
        t.check(vc < (1 << (1 + vc_dual)), "relation " + std::to_string(i) + " VC bound");
    }
    return t.outcome("50 relations up to 8x8: pi == dual pi of the dual, VC < 2^(1+VC*)");
}

Outcome breadth_ind_criterion() {
    Tally t;
    std::mt19937_64 rng(3003);
    for (int i = 0; i < 50; ++i) {
        const auto s = random_system(rng, uniform(rng, 1, 9), uniform(rng, 1, 14));
        t.check(breadth(s) >= independence_dimension(s), "system " + std::to_string(i) + " breadth < IND");
    }
    std::size_t families = 0;
    std::size_t nondegenerate = 0;
    std::size_t nondegenerate_equal = 0;
    for (std::size_t n = 1; n <= 24; ++n) {
        const auto divs = divisors_of(n);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << divs.size()); ++mask) {
            std::vector<std::size_t> chosen;
            for (std::size_t i = 0; i < divs.size(); ++i) {
                if ((mask >> i) & 1U) chosen.push_back(divs[i]);
            }
            const auto h = subgroups_zn(n, chosen);
            const int b = breadth(h);
            const int ind = independence_dimension(h);
            ++families;
            // The whole group as the only subgroup (or no subgroups at all).
            const bool degenerate = h.empty() || (h.size() == 1 && h.member(0).all());
            if (!degenerate) {
                ++nondegenerate;
                if (b == ind) ++nondegenerate_equal;
            }
            t.check(b == ind, "Z" + str(n) + " {" + [&] {
                std::string s;
                for (auto d : chosen) s += (s.empty() ? "" : ",") + str(d);
                return s;
            }() + "} breadth " + std::to_string(b) + " IND " + std::to_string(ind));
        }
    }
    std::ostringstream ss;
    ss << "breadth >= IND on 50 systems; breadth == IND on " << families << " subgroup families of Z_n, n<=24 ("
       << nondegenerate_equal << "/" << nondegenerate << " families with a proper subgroup agree)";
    return t.outcome(ss.str());
}

Outcome costar_criterion() {
    Tally t;
    std::mt19937_64 rng(3004);
    for (int i = 0; i < 30; ++i) {
        const auto s = random_system(rng, uniform(rng, 3, 7), uniform(rng, 2, 10));
        const std::string tag = "system " + std::to_string(i);
        for (const auto& [label, b] : {std::pair{"breadth", breadth(s)}, std::pair{"dual breadth", breadth(s.dual())}}) {
            for (std::size_t k = 1; k + 1 <= s.ground_size(); ++k) {
                if (contains_trace(s, TracePattern(PatternKind::costar, k + 1)).has_value()) {
                    t.check(b >= static_cast<int>(k), tag + " costar(" + str(k + 1) + ") but " + label + " " +
                                                          std::to_string(b));
                }
            }
            for (std::size_t k = 2; k <= s.ground_size(); ++k) {
                if (b >= static_cast<int>(k)) {
                    t.check(contains_trace(s, TracePattern(PatternKind::costar, k)).has_value(),
                            tag + " " + label + " " + std::to_string(b) + " without costar(" + str(k) + ")");
                }
            }
        }
    }
    return t.outcome("30 systems, checked against breadth of the family and of its dual");
}

Outcome coding_criterion() {
    Tally t;
    std::mt19937_64 rng(3005);
    for (int i = 0; i < 20; ++i) {
        const std::size_t d = 1 + static_cast<std::size_t>(i % 2);
        const std::size_t nx = uniform(rng, 3, 8);
        const std::size_t ny = uniform(rng, 3, 8);
        std::vector<BiRelation> rels;
        for (std::size_t k = 0; k < d; ++k) rels.push_back(random_relation(rng, nx, ny));
        const ShelahCode code{FormulaSet(rels)};
        std::vector<std::size_t> ys(ny);
        for (std::size_t y = 0; y < ny; ++y) ys[y] = y;
        std::shuffle(ys.begin(), ys.end(), rng);
        const std::vector<std::size_t> B(ys.begin(), ys.begin() + 3);
        const auto params = code.build_params(B);
        const auto psi = code.materialize(params);
        std::vector<std::size_t> all(params.size());
        for (std::size_t j = 0; j < all.size(); ++j) all[j] = j;
        const auto lhs = count_types(code.delta(), B);
        const auto rhs = count_types(FormulaSet({psi}), all);
        const std::string tag = "delta " + std::to_string(i) + " d=" + str(d);
        t.check(params.size() == 2 * d * B.size(), tag + " |B'| " + str(params.size()));
        t.check(lhs <= rhs, tag + " " + str(lhs) + " > " + str(rhs));
    }
    return t.outcome("20 formula sets, d in {1,2}, |B|=3, |B'|=2d|B|");
}

Outcome lift_criterion() {
    Tally t;
    std::mt19937_64 rng(3006);
    const std::size_t k = 3;
    for (int i = 0; i < 10; ++i) {
        const auto phi = random_relation(rng, uniform(rng, 3, 6), uniform(rng, 1, 6));
        const auto psi = lift_parameter(phi, k + 1, 0);
        const auto lhs = k * shatter_function(system_of(phi), k).value;
        const auto rhs = shatter_function(system_of(psi), 2 * k).value;
        t.check(lhs <= rhs, "phi " + std::to_string(i) + ": " + str(lhs) + " > " + str(rhs));
    }
    return t.outcome("10 relations on <=6 points, t=3");
}

Outcome incidence_criterion() {
    Tally t;
    for (std::uint64_t q : {3, 5, 7}) {
        const auto rel = pointline_fq(q);
        t.check(rel.edge_count() == q * q * q, "q=" + str(q) + " incidences " + str(rel.edge_count()));
        t.check(!detect_krs(rel, 2, 2).has_value(), "q=" + str(q) + " contains K22");
    }
    for (std::size_t k = 1; k <= 3; ++k) {
        const auto g = elekes_grid(k);
        const std::uint64_t e = g.incidence.edge_count();
        t.check(e == 4 * k * k * k * k, "k=" + str(k) + " incidences " + str(e));
        // 4k^4 = |V|^(4/3)/4  <=>  (4e)^3 == |V|^4.
        const std::uint64_t v = g.incidence.x_size() + g.incidence.y_size();
        const u128 lhs = static_cast<u128>(4 * e) * (4 * e) * (4 * e);
        const u128 rhs = static_cast<u128>(v) * v * v * v;
        t.check(lhs == rhs, "k=" + str(k) + " |V|^(4/3)/4 mismatch");
    }
    return t.outcome("F_q q=3,5,7: q^3 incidences, no K22; Elekes k=1..3: 4k^4 = |V|^(4/3)/4");
}

Outcome phi_hat_criterion() {
    Tally t;
    std::mt19937_64 rng(3010);
    std::bernoulli_distribution coin(0.5);
    std::size_t lower_bad = 0;
    std::size_t upper_bad = 0;
    std::size_t corrected_bad = 0;
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = uniform(rng, 3, 8);
        const auto rel = random_relation(rng, n, n, 0.3);
        for (int j = 0; j < 5; ++j) {
            BitVec A(n);
            for (std::size_t x = 0; x < n; ++x) A.set(x, coin(rng));
            const auto b = phi_hat_bounds(rel, A);
            const std::string tag = "relation " + std::to_string(i) + " A=" + A.to_string();
            t.check(b.lower_holds(), tag + " lower");
            t.check(b.upper_holds(), tag + " traces " + str(b.trace_count) + " > 1+" + str(b.a0) + "+" +
                                         str(b.induced_edges));
            lower_bad += !b.lower_holds();
            upper_bad += !b.upper_holds();
            corrected_bad += !b.corrected_upper_holds();
        }
    }
    std::ostringstream ss;
    ss << "100 (relation, A) pairs: lower bound violated " << lower_bad << ", upper bound 1+|A0|+|E| violated "
       << upper_bad << ", 1+|A_split|+|E| violated " << corrected_bad;
    return t.outcome(ss.str());
}

Outcome hypercube_criterion() {
    Tally t;
    for (std::size_t d = 1; d <= 8; ++d) {
        const auto e = hypercube_edges(d).edges.size();
        t.check(e == (d << (d - 1)), "Q" + str(d) + " edges " + str(e));
        t.check(e == oracle::cube_edge_count(d), "Q" + str(d) + " edge oracle");
    }
    for (std::size_t d = 2; d <= 4; ++d) {
        const auto m = max_induced_edges(d, 4);
        t.check(m == 4, "Q" + str(d) + " max on 4 vertices " + str(m));
        t.check(oracle::cube_max_induced(d, 4) == 4, "Q" + str(d) + " brute force");
    }
    return t.outcome("Q_d edges d*2^(d-1) for d<=8; 4 vertices span at most 4 edges for d=2,3,4");
}

Outcome balls_criterion() {
    Tally t;
    std::string counts;
    for (unsigned p = 2; p <= 3; ++p) {
        for (unsigned d = 0; d <= 3; ++d) {
            // Radius d in a tree of depth 2d keeps every ball within distance d inside the truncation.
            const unsigned depth = std::max(1U, 2 * d);
            const UltrametricSpace s(p, depth);
            const Ball ball{0, d};
            const auto c = count_balls_within(s, ball, d);
            const auto bfs = oracle::prefix_tree_ball_count(p, depth, std::string(d, '0'), d);
            t.check(!c.boundary, "p=" + str(p) + " d=" + str(d) + " ball is on the boundary");
            t.check(c.count == bfs, "p=" + str(p) + " d=" + str(d) + " BFS disagrees");
            t.check(c.count == beta_d(p, d), "p=" + str(p) + " d=" + str(d) + " counted " + str(c.count) +
                                                 ", formula " + str(beta_d(p, d)));
            counts += (counts.empty() ? "" : " ") + str(c.count) + "/" + str(beta_d(p, d));
        }
    }
    const UltrametricSpace s(2, 4);
    std::size_t subsets = 0;
    for (std::size_t k = 1; k <= 6; ++k) {
        for_each_combination(16, k, [&](const std::vector<std::size_t>& pick) {
            std::vector<std::uint64_t> A;
            for (auto i : pick) A.push_back(s.elements()[i]);
            const auto n = special_balls(s, A).size();
            ++subsets;
            t.check(n + 1 <= k, "special balls " + str(n) + " for |A|=" + str(k));
            return true;
        });
    }
    std::mt19937_64 rng(3012);
    for (const auto& space : {UltrametricSpace(2, 4), UltrametricSpace(3, 3)}) {
        const auto balls = all_balls(space);
        t.check(breadth(ball_family_system(space, balls)) == 1, "all balls breadth");
        for (int i = 0; i < 20; ++i) {
            std::vector<Ball> pick;
            for (const auto& b : balls) {
                if (rng() % 4 == 0) pick.push_back(b);
            }
            if (pick.empty()) continue;
            t.check(breadth(ball_family_system(space, pick)) == 1, "random ball family breadth");
        }
    }
    return t.outcome("interior counts/closed form for p=2 then p=3, d=0..3: " + counts + "; special balls on " +
                     str(subsets) + " subsets; ball families directed");
}

Outcome rooted_criterion() {
    Tally t;
    for (std::size_t n = 1; n <= 8; ++n) {
        for (std::size_t k = 1; k <= std::min<std::size_t>(3, n); ++k) {
            const auto g = rooted_graph_of(subsets_of_size(n, k));
            const Ratio want(static_cast<long long>(2 * k));
            const std::string tag = "([" + str(n) + "] choose " + str(k) + ")";
            t.check(average_degree(g) == want, tag + " adeg");
            t.check(max_average_degree(g) == want, tag + " mdeg");
        }
    }
    std::mt19937_64 rng(3013);
    for (int i = 0; i < 20; ++i) {
        const auto s = random_system(rng, uniform(rng, 2, 8), uniform(rng, 1, 12), 0.4);
        Ratio formula(0);
        for (std::uint64_t pick = 1; pick < (std::uint64_t{1} << s.size()); ++pick) {
            long long total = 0;
            long long count = 0;
            for (std::size_t j = 0; j < s.size(); ++j) {
                if ((pick >> j) & 1U) {
                    total += static_cast<long long>(s.member(j).count());
                    ++count;
                }
            }
            formula = std::max(formula, Ratio(2 * total, count));
        }
        const auto g = rooted_graph_of(s);
        t.check(max_average_degree(g) == formula, "system " + std::to_string(i) + " mdeg vs formula");
        t.check(max_average_degree_exhaustive(g) == formula, "system " + std::to_string(i) + " enumeration");
    }
    return t.outcome("([t] choose k) for t<=8, k<=3: adeg == mdeg == 2k; 20 systems match the subfamily formula");
}

ShatterProfile profile_of(const SetSystem& s, std::size_t lo, std::size_t hi) {
    std::vector<ProfileSample> samples;
    for (std::size_t k = lo; k <= hi; ++k) {
        const auto v = shatter_function(s, k);
        samples.push_back({k, v.value, v.exactness == Exactness::exact});
    }
    return ShatterProfile(samples);
}

Outcome estimator_criterion() {
    Tally t;
    std::ostringstream slopes;
    for (const auto& [name, s] : {std::pair{"subsets(12,2)", subsets_at_most_d(12, 2)},
                                  std::pair{"intervals(12,1)", intervals(12, 1)}}) {
        const auto fit = fit_exponent(profile_of(s, 4, 12), 4);
        t.check(fit.slope >= kSlopeLo && fit.slope <= kSlopeHi, std::string(name) + " slope out of window");
        slopes << name << " slope " << fit.slope << " ";
    }
    for (std::size_t n = 4; n <= 12; ++n) {
        const auto kind = classify_growth(profile_of(subsets_at_most_d(n, n), 1, n)).kind;
        t.check(kind == GrowthKind::exponential_so_far, "power set n=" + str(n) + " " + to_string(kind));
    }
    return t.outcome(slopes.str() + "(window [1.6, 2.0], t=4..12); power sets n=4..12 exponential_so_far");
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"interval family exact counts", intervals_criterion},
        {"half-plane counts", halfplanes_criterion},
        {"Sauer-Shelah bound", sauer_criterion},
        {"shatter duality", duality_criterion},
        {"breadth and independence dimension", breadth_ind_criterion},
        {"chain/star/costar observations", costar_criterion},
        {"coding lemma", coding_criterion},
        {"parameter lift", lift_criterion},
        {"incidence counts", incidence_criterion},
        {"phi-hat sandwich", phi_hat_criterion},
        {"hypercube counts", hypercube_criterion},
        {"ball lemmas", balls_criterion},
        {"rooted graphs", rooted_criterion},
        {"estimator sanity", estimator_criterion},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (!o.pass) ++failed;
        std::printf("%s %2zu %s: %s (%.2fs)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(),
                    o.detail.c_str(), secs);
    }
    std::printf("%d of %zu criteria failed\n", failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
