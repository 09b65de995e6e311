#include <doctest.h>

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>

#include "oracle.hpp"
#include "vclab/combinatorics.hpp"
#include "vclab/error.hpp"
#include "vclab/generators.hpp"
#include "vclab/random.hpp"
#include "vclab/relation.hpp"
#include "vclab/ultrametric.hpp"

using namespace vclab;

namespace {

BiRelation identity(std::size_t n) {
    BiRelation r(n, n);
    for (std::size_t i = 0; i < n; ++i) r.set(i, i);
    return r;
}

BiRelation less_equal(std::size_t n) {
    BiRelation r(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i; j < n; ++j) r.set(i, j);
    }
    return r;
}

// Distinct rows of the |X| x (|Δ|·|B|) truth matrix.
std::size_t types_by_matrix(const FormulaSet& delta, const std::vector<std::size_t>& B) {
    std::set<std::vector<bool>> rows;
    for (std::size_t x = 0; x < delta.x_size(); ++x) {
        std::vector<bool> row;
        for (const auto& phi : delta.relations()) {
            for (auto b : B) row.push_back(phi.related(x, b));
        }
        rows.insert(row);
    }
    return rows.size();
}

// Longest sequence with (a_i, b_j) related iff i <= j, by direct extension.
int ladder_oracle(const BiRelation& rel) {
    int best = 0;
    std::vector<std::size_t> as;
    std::vector<std::size_t> bs;
    std::function<void()> extend = [&] {
        best = std::max(best, static_cast<int>(as.size()));
        for (std::size_t a = 0; a < rel.x_size(); ++a) {
            for (std::size_t b = 0; b < rel.y_size(); ++b) {
                if (!rel.related(a, b)) continue;
                bool ok = true;
                for (std::size_t j = 0; j < bs.size() && ok; ++j) ok = !rel.related(a, bs[j]);
                for (std::size_t i = 0; i < as.size() && ok; ++i) ok = rel.related(as[i], b);
                if (!ok) continue;
                as.push_back(a);
                bs.push_back(b);
                extend();
                as.pop_back();
                bs.pop_back();
            }
        }
    };
    extend();
    return best;
}

}  // namespace

TEST_CASE("dualize transposes") {
    const auto r = BiRelation::from_strings(2, 3, {"101", "010"});
    const auto d = dualize(r);
    CHECK(d.x_size() == 3);
    CHECK(d.y_size() == 2);
    CHECK(d.row(0).to_string() == "10");
    CHECK(d.row(1).to_string() == "01");
    CHECK(d.row(2).to_string() == "10");
    CHECK(dualize(identity(4)) == identity(4));
}

TEST_CASE("system_of examples") {
    BiRelation full(3, 4);
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 4; ++b) full.set(a, b);
    }
    CHECK(system_of(full).size() == 1);
    CHECK(system_of(identity(3)).size() == 3);
    const auto pl = system_of(pointline_fq(3));
    CHECK(pl.size() == 9);
    for (const auto& m : pl.members()) CHECK(m.count() == 3);
}

TEST_CASE("count_types examples") {
    CHECK(count_types(FormulaSet({identity(4)}), {0, 1}) == 3);
    // Δ = {x1 = y, x2 = y} with objects the pairs over a domain M.
    auto coordinate_equality = [](std::size_t m) {
        std::vector<BiRelation> rels(2, BiRelation(m * m, m));
        for (std::size_t x = 0; x < m * m; ++x) {
            rels[0].set(x, x / m);
            rels[1].set(x, x % m);
        }
        return FormulaSet(rels);
    };
    CHECK(count_types(coordinate_equality(4), {0, 1, 2}) == 16);
    // With B all of M every coordinate hits B, so the "outside B" type is missing.
    CHECK(count_types(coordinate_equality(3), {0, 1, 2}) == 9);
    CHECK_THROWS_AS(count_types(FormulaSet({identity(3)}), {5}), RangeError);
    CHECK_THROWS_AS(FormulaSet({}), PreconditionError);
    CHECK_THROWS_AS(FormulaSet({identity(3), identity(4)}), InputShapeError);
}

TEST_CASE("count_types matches the truth-matrix oracle and is order invariant") {
    std::mt19937_64 rng(21);
    for (int i = 0; i < 30; ++i) {
        const FormulaSet delta({random_relation(rng, 8, 8), random_relation(rng, 8, 8)});
        std::vector<std::size_t> all(8);
        for (std::size_t y = 0; y < 8; ++y) all[y] = y;
        std::shuffle(all.begin(), all.end(), rng);
        std::vector<std::size_t> B(all.begin(), all.begin() + 4);
        const auto v = count_types(delta, B);
        CHECK(v == types_by_matrix(delta, B));
        std::shuffle(B.begin(), B.end(), rng);
        CHECK(count_types(delta, B) == v);
        CHECK(count_types(FormulaSet({delta[1], delta[0]}), B) == v);
    }
}

TEST_CASE("dual shatter agrees with brute force") {
    std::mt19937_64 rng(22);
    for (int i = 0; i < 30; ++i) {
        const auto rel = random_relation(rng, uniform(rng, 1, 7), uniform(rng, 1, 7));
        const auto cols = oracle::columns(rel);
        for (std::size_t t = 0; t <= rel.y_size(); ++t) {
            // Columns may repeat, so the oracle picks parameter indices, not distinct sets.
            CHECK(dual_shatter(rel, t).value == oracle::dual_shatter(cols, rel.x_size(), t));
        }
    }
    CHECK_THROWS_AS(dual_shatter(identity(3), 4), RangeError);
}

TEST_CASE("dual shatter budget gives a flagged lower bound") {
    // 11 atoms for any 10 columns, never the early-exit cap of 30.
    const auto r = dual_shatter(identity(30), 10, 50);
    CHECK(r.exactness == Exactness::lower_bound);
    CHECK_FALSE(r.warning.empty());
}

TEST_CASE("dual shatter of a product formula set is bounded by the product") {
    std::mt19937_64 rng(24);
    for (int i = 0; i < 15; ++i) {
        const auto a = random_relation(rng, 8, 6);
        const auto b = random_relation(rng, 8, 6);
        for (std::size_t t = 0; t <= 3; ++t) {
            CHECK(dual_shatter(FormulaSet({a, b}), t).value <= dual_shatter(a, t).value * dual_shatter(b, t).value);
        }
        CHECK(dual_shatter(FormulaSet({a}), 2).value == dual_shatter(a, 2).value);
    }
}

TEST_CASE("dual shatter of the ultrametric ball relation on 16 leaves") {
    const UltrametricSpace space(2, 4);
    const auto balls = ball_family_system(space, all_balls(space));
    std::vector<BitVec> rows;
    for (std::size_t x = 0; x < space.size(); ++x) {
        BitVec row(balls.size());
        for (std::size_t b = 0; b < balls.size(); ++b) row.set(b, balls.member(b).test(x));
        rows.push_back(row);
    }
    const BiRelation rel(balls.size(), rows);
    const auto v = dual_shatter(rel, 3).value;
    // Three balls are pairwise nested or disjoint, so they cut out at most 4 cells.
    CHECK(v == 4);
    CHECK(v == oracle::dual_shatter(oracle::masks(balls), space.size(), 3));
}

TEST_CASE("ladder dimension examples and oracle") {
    CHECK(ladder_dimension(less_equal(4)) == 4);
    CHECK(ladder_dimension(identity(4)) == 1);
    CHECK(ladder_dimension(BiRelation(4, 4)) == 0);
    std::mt19937_64 rng(25);
    for (int i = 0; i < 25; ++i) {
        const auto rel = random_relation(rng, uniform(rng, 1, 5), uniform(rng, 1, 5));
        CHECK(ladder_dimension(rel) == ladder_oracle(rel));
    }
}

TEST_CASE("boolean combinations") {
    std::mt19937_64 rng(26);
    for (int i = 0; i < 15; ++i) {
        const auto a = random_relation(rng, 8, 8);
        const auto b = random_relation(rng, 8, 8);
        CHECK(negate(negate(a)) == a);
        CHECK(boolean_combine(a, a, BoolOp::op_not) == negate(a));
        const auto both = boolean_combine(a, b, BoolOp::op_or);
        for (std::size_t t = 0; t <= 3; ++t) {
            CHECK(dual_shatter(negate(a), t).value == dual_shatter(a, t).value);
            CHECK(dual_shatter(both, t).value <= dual_shatter(a, t).value * dual_shatter(b, t).value);
            CHECK(dual_shatter(boolean_combine(a, b, BoolOp::op_and), t).value <=
                  dual_shatter(a, t).value * dual_shatter(b, t).value);
        }
    }
    CHECK_THROWS_AS(boolean_combine(identity(3), identity(4), BoolOp::op_and), InputShapeError);
}

TEST_CASE("shelah coding: parameter counts and type injection") {
    std::mt19937_64 rng(27);
    for (int i = 0; i < 20; ++i) {
        const std::size_t d = 1 + static_cast<std::size_t>(i % 2);
        std::vector<BiRelation> rels;
        for (std::size_t k = 0; k < d; ++k) rels.push_back(random_relation(rng, 8, 8));
        const ShelahCode code{FormulaSet(rels)};
        const std::vector<std::size_t> B{1, 4, 6};
        const auto params = code.build_params(B);
        REQUIRE(params.size() == 2 * d * B.size());
        for (const auto& p : params) CHECK(p.size() == code.tuple_length());
        const auto psi = code.materialize(params);
        // Distinct Δ-types over B must land on distinct ψ-types over B'.
        std::map<BitVec, BitVec> image;
        bool injective = true;
        for (std::size_t x = 0; x < 8; ++x) {
            const auto src = type_signature(code.delta(), x, B);
            const auto dst = psi.row(x);
            const auto [it, fresh] = image.emplace(src, dst);
            if (!fresh && it->second != dst) injective = false;
        }
        std::set<BitVec> targets;
        for (const auto& [src, dst] : image) targets.insert(dst);
        CHECK(injective);
        CHECK(targets.size() == image.size());
        CHECK(count_types(code.delta(), B) <= psi.rows().size());
    }
    const ShelahCode single{FormulaSet({identity(4)})};
    CHECK_THROWS_AS(single.build_params({2}), PreconditionError);
}

TEST_CASE("shelah coding: no z clause means an empty column") {
    std::mt19937_64 rng(28);
    const ShelahCode code{FormulaSet({random_relation(rng, 6, 6), random_relation(rng, 6, 6)})};
    // z at index 2d, z_1..z_2d after it; make every z_k differ from z.
    ShelahCode::Param p(code.tuple_length(), 0);
    p[4] = 1;
    for (std::size_t x = 0; x < 6; ++x) CHECK_FALSE(code.holds(x, p));
}

TEST_CASE("parameter lift") {
    const auto iv = intervals(6, 1);
    BiRelation rel(6, iv.size());
    for (std::size_t b = 0; b < iv.size(); ++b) {
        for (std::size_t a = 0; a < 6; ++a) rel.set(a, b, iv.member(b).test(a));
    }
    const std::size_t t = 3;
    const auto psi = lift_parameter(rel, t + 1, 0);
    const auto k = shatter_function(system_of(rel), t).value;
    CHECK(t * k <= shatter_function(system_of(psi), 2 * t).value);

    // The witness set from the construction already realizes k·t traces.
    std::vector<std::size_t> best_A;
    for_each_combination(6, t, [&](const std::vector<std::size_t>& A) {
        if (trace_count(system_of(rel), A) == k) {
            best_A = A;
            return false;
        }
        return true;
    });
    const auto A_prime = lift_witness(rel, t + 1, 0, best_A, 5);
    CHECK(A_prime.size() == 2 * t);
    CHECK(trace_count(system_of(psi), A_prime) >= k * t);
    CHECK_THROWS_AS(lift_witness(rel, t, 0, best_A, 5), PreconditionError);
    CHECK_THROWS_AS(lift_parameter(BiRelation(0, 3), 2, 0), PreconditionError);
}

TEST_CASE("parameter lift: one column gives every singleton augmentation") {
    const auto phi = BiRelation::from_strings(3, 1, {"1", "0", "1"});
    const std::size_t m = 3;
    const auto psi = lift_parameter(phi, m, 0);
    const auto sys = system_of(psi);
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t c = 1; c < m; ++c) {
            // Column (y, c) with c != 0 contains exactly the objects with u = c, so traces
            // on {(a, c)} include the singleton.
            CHECK(trace_count(sys, {a * m + c}) == 2);
        }
    }
}

TEST_CASE("power delta") {
    std::mt19937_64 rng(30);
    const FormulaSet delta({random_relation(rng, 5, 5)});
    const auto one = power_delta(delta, 1);
    CHECK(one.size() == 1);
    CHECK(one[0] == delta[0]);
    const auto two = power_delta(delta, 2);
    CHECK(two.x_size() == 25);
    const std::vector<std::size_t> B{0, 2, 3};
    const auto base = count_types(delta, B);
    CHECK(base * base <= count_types(two, B));
    // Coordinate 0 of the product carries the types of the factor.
    std::set<BitVec> projected;
    for (std::size_t x = 0; x < two.x_size(); ++x) projected.insert(type_signature(FormulaSet({two[0]}), x, B));
    CHECK(projected.size() == base);
    CHECK_THROWS_AS(power_delta(delta, 6, 1000), BudgetExceeded);
}

TEST_CASE("pullback") {
    std::mt19937_64 rng(31);
    const auto s = random_system(rng, 6, 12);
    const std::vector<std::size_t> id{0, 1, 2, 3, 4, 5};
    CHECK(pullback(s, id) == s);
    const std::vector<std::size_t> collapse{0, 0, 2, 3, 4, 5};
    const std::vector<std::size_t> doubled{0, 1, 2, 3, 4, 5, 0, 1, 2, 3, 4, 5};
    for (std::size_t t = 0; t <= 6; ++t) {
        CHECK(shatter_function(pullback(s, collapse), t).value <= shatter_function(s, t).value);
        CHECK(shatter_function(pullback(s, doubled), t).value == shatter_function(s, t).value);
    }
    CHECK_THROWS_AS(pullback(s, {7}), RangeError);
}

TEST_CASE("property: duality identities on random relations") {
    std::mt19937_64 rng(32);
    for (int i = 0; i < 40; ++i) {
        const auto rel = random_relation(rng, uniform(rng, 1, 8), uniform(rng, 1, 8));
        const auto dual = dualize(rel);
        CHECK(dualize(dual) == rel);
        for (std::size_t t = 0; t <= rel.x_size(); ++t) {
            CHECK(shatter_function(system_of(rel), t).value == dual_shatter(dual, t).value);
        }
        const int vc = vc_dimension(system_of(rel));
        const int vc_dual = vc_dimension(system_of(dual));
        CHECK(vc < (1 << (1 + vc_dual)));
        const auto members = system_of(rel).size();
        if (members <= 5) CHECK(system_of(dual).size() <= (std::size_t{1} << members));
        // VC equals the largest t with π(t) = 2^t.
        int via_pi = 0;
        for (std::size_t t = 0; t <= rel.x_size(); ++t) {
            if (shatter_function(system_of(rel), t).value == (std::uint64_t{1} << t)) via_pi = static_cast<int>(t);
        }
        CHECK(vc == via_pi);
    }
}

TEST_CASE("ladder dimensions of a relation and its dual on symmetric instances") {
    std::mt19937_64 rng(33);
    for (int i = 0; i < 10; ++i) {
        auto rel = random_relation(rng, 5, 5);
        for (std::size_t a = 0; a < 5; ++a) {
            for (std::size_t b = 0; b < a; ++b) rel.set(a, b, rel.related(b, a));
        }
        CHECK(ladder_dimension(rel) == ladder_dimension(dualize(rel)));
    }
}
