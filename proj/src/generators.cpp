#include "vclab/generators.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "vclab/combinatorics.hpp"
#include "vclab/error.hpp"

namespace vclab {

SetSystem subsets_at_most_d(std::size_t n, std::size_t d) {
    if (d > n) throw RangeError("subsets_at_most_d: d=" + std::to_string(d) + " exceeds n=" + std::to_string(n));
    std::vector<BitVec> members;
    for (std::size_t size = 0; size <= d; ++size) {
        for_each_combination(n, size, [&](const std::vector<std::size_t>& c) {
            members.push_back(BitVec::from_indices(n, c));
            return true;
        });
    }
    return SetSystem(n, std::move(members));
}

SetSystem subsets_of_size(std::size_t n, std::size_t k) {
    if (k > n) throw RangeError("subsets_of_size: k=" + std::to_string(k) + " exceeds n=" + std::to_string(n));
    std::vector<BitVec> members;
    for_each_combination(n, k, [&](const std::vector<std::size_t>& c) {
        members.push_back(BitVec::from_indices(n, c));
        return true;
    });
    return SetSystem(n, std::move(members));
}

SetSystem intervals(std::size_t n_points, std::size_t k) {
    if (n_points < 1) throw RangeError("intervals: need at least one point");
    if (k < 1) throw RangeError("intervals: k must be at least 1");
    // A union of r runs is fixed by 2r cut positions p_1 < ... < p_2r in
    // [0, n]; run i covers [p_{2i-1}, p_{2i}).
    std::vector<BitVec> members;
    for (std::size_t r = 0; r <= k && 2 * r <= n_points + 1; ++r) {
        for_each_combination(n_points + 1, 2 * r, [&](const std::vector<std::size_t>& cuts) {
            BitVec s(n_points);
            for (std::size_t i = 0; i < cuts.size(); i += 2) {
                for (std::size_t x = cuts[i]; x < cuts[i + 1]; ++x) s.set(x);
            }
            members.push_back(std::move(s));
            return true;
        });
    }
    return SetSystem(n_points, std::move(members));
}

SetSystem convex_sets(std::size_t n_points) { return intervals(n_points, 1); }

namespace {

using i128 = __int128;

long long lcm_checked(long long a, long long b) {
    const long long g = std::gcd(a, b);
    const i128 l = static_cast<i128>(a / g) * b;
    if (l > (i128{1} << 60)) throw OverflowError("halfplanes: common denominator too large");
    return static_cast<long long>(l);
}

}  // namespace

SetSystem halfplanes(const std::vector<Point2>& points, bool closed) {
    (void)closed;
    const std::size_t n = points.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (points[i] == points[j]) {
                throw PreconditionError("halfplanes: points " + std::to_string(i) + " and " + std::to_string(j) +
                                        " coincide");
            }
        }
    }
    long long den = 1;
    for (const auto& [x, y] : points) {
        den = lcm_checked(den, x.denominator());
        den = lcm_checked(den, y.denominator());
    }
    constexpr i128 kLimit = i128{1} << 60;
    std::vector<std::pair<i128, i128>> p;
    for (const auto& [x, y] : points) {
        const i128 sx = static_cast<i128>(x.numerator()) * (den / x.denominator());
        const i128 sy = static_cast<i128>(y.numerator()) * (den / y.denominator());
        if (sx >= kLimit || sx <= -kLimit || sy >= kLimit || sy <= -kLimit) {
            throw OverflowError("halfplanes: scaled coordinates exceed 60 bits");
        }
        p.emplace_back(sx, sy);
    }

    std::vector<BitVec> members{BitVec(n), BitVec::full(n)};
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const i128 dx = p[j].first - p[i].first;
            const i128 dy = p[j].second - p[i].second;
            BitVec left(n);
            BitVec right(n);
            std::vector<std::pair<i128, std::size_t>> on;
            for (std::size_t k = 0; k < n; ++k) {
                const i128 ex = p[k].first - p[i].first;
                const i128 ey = p[k].second - p[i].second;
                const i128 cross = dx * ey - dy * ex;
                if (cross > 0) {
                    left.set(k);
                } else if (cross < 0) {
                    right.set(k);
                } else {
                    on.emplace_back(dx * ex + dy * ey, k);
                }
            }
            std::sort(on.begin(), on.end());
            // Tilting the line about a point between two consecutive collinear
            // points puts a prefix of them on one side and the rest on the other.
            for (const BitVec* side : {&left, &right}) {
                BitVec prefix = *side;
                BitVec suffix = *side;
                members.push_back(prefix);
                for (std::size_t m = 0; m < on.size(); ++m) {
                    prefix.set(on[m].second);
                    suffix.set(on[on.size() - 1 - m].second);
                    members.push_back(prefix);
                    members.push_back(suffix);
                }
            }
        }
    }
    return SetSystem(n, std::move(members));
}

namespace {

void check_divisors(std::size_t n, const std::vector<std::size_t>& divisors) {
    if (n < 1) throw RangeError("Z_n needs n >= 1");
    for (auto d : divisors) {
        if (d == 0 || n % d != 0) {
            throw PreconditionError(std::to_string(d) + " does not divide " + std::to_string(n));
        }
    }
}

}  // namespace

SetSystem cosets_zn(std::size_t n, const std::vector<std::size_t>& divisors) {
    check_divisors(n, divisors);
    std::vector<BitVec> members;
    for (auto d : divisors) {
        for (std::size_t a = 0; a < d; ++a) {
            BitVec s(n);
            for (std::size_t x = a; x < n; x += d) s.set(x);
            members.push_back(std::move(s));
        }
    }
    return SetSystem(n, std::move(members));
}

SetSystem subgroups_zn(std::size_t n, const std::vector<std::size_t>& divisors) {
    check_divisors(n, divisors);
    std::vector<BitVec> members;
    for (auto d : divisors) {
        BitVec s(n);
        for (std::size_t x = 0; x < n; x += d) s.set(x);
        members.push_back(std::move(s));
    }
    return SetSystem(n, std::move(members));
}

std::vector<std::size_t> divisors_of(std::size_t n) {
    std::vector<std::size_t> out;
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d == 0) out.push_back(d);
    }
    return out;
}

SetSystem arithmetic_progressions(std::size_t window, std::size_t max_modulus) {
    if (max_modulus < 1 || window < max_modulus) {
        throw RangeError("arithmetic_progressions needs window >= max_modulus >= 1");
    }
    std::vector<BitVec> members;
    for (std::size_t b = 1; b <= max_modulus; ++b) {
        for (std::size_t a = 0; a < b; ++a) {
            BitVec s(window);
            for (std::size_t x = a; x < window; x += b) s.set(x);
            members.push_back(std::move(s));
        }
    }
    return SetSystem(window, std::move(members));
}

bool is_prime(std::uint64_t q) {
    if (q < 2) return false;
    for (std::uint64_t f = 2; f * f <= q; ++f) {
        if (q % f == 0) return false;
    }
    return true;
}

BiRelation pointline_fq(std::uint64_t q) {
    if (!is_prime(q)) throw PreconditionError("pointline_fq: " + std::to_string(q) + " is not prime");
    if (q > kFieldCap) throw BudgetExceeded("pointline_fq: q=" + std::to_string(q) + " above cap");
    const std::size_t qq = static_cast<std::size_t>(q);
    BiRelation rel(qq * qq, qq * qq);
    for (std::size_t a = 0; a < qq; ++a) {
        for (std::size_t b = 0; b < qq; ++b) {
            for (std::size_t x = 0; x < qq; ++x) {
                const std::size_t y = (a * x + b) % qq;
                rel.set(x * qq + y, a * qq + b);
            }
        }
    }
    return rel;
}

ElekesGrid elekes_grid(std::size_t k) {
    if (k < 1) throw RangeError("elekes_grid needs k >= 1");
    if (k > kElekesCap) throw BudgetExceeded("elekes_grid: k=" + std::to_string(k) + " above cap");
    ElekesGrid g;
    g.k = k;
    g.x_count = k;
    g.y_count = 4 * k * k;
    g.slope_count = 2 * k;
    g.intercept_count = 2 * k * k;
    g.incidence = BiRelation(g.x_count * g.y_count, g.slope_count * g.intercept_count);
    for (std::size_t a = 0; a < g.slope_count; ++a) {
        for (std::size_t b = 0; b < g.intercept_count; ++b) {
            for (std::size_t x = 0; x < g.x_count; ++x) {
                const std::size_t y = a * x + b;
                if (y < g.y_count) g.incidence.set(x * g.y_count + y, a * g.intercept_count + b);
            }
        }
    }
    return g;
}

Hypercube hypercube_edges(std::size_t d, std::size_t cap) {
    if (d > cap) throw BudgetExceeded("hypercube_edges: d=" + std::to_string(d) + " above cap " + std::to_string(cap));
    Hypercube h;
    h.d = d;
    const std::size_t v = std::size_t{1} << d;
    std::vector<BitVec> members;
    for (std::size_t u = 0; u < v; ++u) {
        members.push_back(BitVec::from_indices(v, std::vector<std::size_t>{u}));
        for (std::size_t bit = 0; bit < d; ++bit) {
            const std::size_t w = u ^ (std::size_t{1} << bit);
            if (u < w) {
                h.edges.emplace_back(u, w);
                members.push_back(BitVec::from_indices(v, std::vector<std::size_t>{u, w}));
            }
        }
    }
    h.system = SetSystem(v, std::move(members));
    return h;
}

std::size_t max_induced_edges(std::size_t d, std::size_t t, std::uint64_t budget) {
    const std::size_t v = std::size_t{1} << d;
    if (t > v) throw RangeError("max_induced_edges: t exceeds 2^d");
    if (binomial(v, t) > budget) throw BudgetExceeded("max_induced_edges: C(2^d, t) above budget");
    std::size_t best = 0;
    for_each_combination(v, t, [&](const std::vector<std::size_t>& c) {
        std::size_t e = 0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            for (std::size_t j = i + 1; j < c.size(); ++j) {
                if (std::has_single_bit(c[i] ^ c[j])) ++e;
            }
        }
        best = std::max(best, e);
        return true;
    });
    return best;
}

namespace {

void require_square(const BiRelation& rel) {
    if (rel.x_size() != rel.y_size()) {
        throw InputShapeError("phi_hat needs a square relation, got " + std::to_string(rel.x_size()) + "x" +
                              std::to_string(rel.y_size()));
    }
}

}  // namespace

SetSystem phi_hat(const BiRelation& rel) {
    require_square(rel);
    const std::size_t n = rel.x_size();
    std::vector<BitVec> members;
    for (std::size_t a = 0; a < n; ++a) {
        for (auto b : rel.row(a).indices()) {
            BitVec s(n);
            s.set(a);
            s.set(b);
            members.push_back(std::move(s));
        }
    }
    return SetSystem(n, std::move(members));
}

PhiHatBounds phi_hat_bounds(const BiRelation& rel, const BitVec& A) {
    require_square(rel);
    const std::size_t n = rel.x_size();
    if (A.size() != n) throw InputShapeError("phi_hat_bounds: subset width differs from relation size");
    PhiHatBounds out;
    out.trace_count = trace(phi_hat(rel), A).size();
    std::vector<bool> touches(n, false);
    std::vector<bool> inside(n, false);
    std::vector<bool> outside(n, false);
    for (std::size_t a = 0; a < n; ++a) {
        for (auto b : rel.row(a).indices()) {
            touches[a] = touches[b] = true;
            if (A.test(b)) inside[a] = true;
            if (A.test(a)) inside[b] = true;
            if (!A.test(b)) outside[a] = true;
            if (!A.test(a)) outside[b] = true;
            if (A.test(a) && A.test(b)) ++out.induced_edges;
            if (!A.test(a) && !A.test(b)) out.empty_trace = true;
        }
    }
    for (auto a : A.indices()) {
        if (touches[a] && !inside[a]) ++out.a0;
        if (outside[a]) ++out.a_split;
    }
    return out;
}

namespace {

struct KrsSearch {
    const BiRelation& rel;
    std::size_t r;
    std::size_t s;
    std::uint64_t budget;
    std::uint64_t used = 0;
    std::vector<std::size_t> chosen;

    std::optional<BitVec> run(std::size_t start, const BitVec& common) {
        if (chosen.size() == r) return common;
        for (std::size_t a = start; a < rel.x_size(); ++a) {
            if (rel.x_size() - a < r - chosen.size()) break;
            if (++used > budget) throw BudgetExceeded("detect_krs: budget exhausted, result inconclusive");
            BitVec next = common & rel.row(a);
            if (next.count() < s) continue;
            chosen.push_back(a);
            if (auto found = run(a + 1, next)) return found;
            chosen.pop_back();
        }
        return std::nullopt;
    }
};

}  // namespace

std::optional<KrsWitness> detect_krs(const BiRelation& rel, std::size_t r, std::size_t s, std::uint64_t budget) {
    if (r > s) throw RangeError("detect_krs expects r <= s");
    if (r == 0) throw RangeError("detect_krs expects r >= 1");
    KrsSearch search{rel, r, s, budget, 0, {}};
    auto common = search.run(0, BitVec::full(rel.y_size()));
    if (!common) return std::nullopt;
    KrsWitness w;
    w.left = search.chosen;
    auto right = common->indices();
    w.right.assign(right.begin(), right.begin() + static_cast<std::ptrdiff_t>(s));
    return w;
}

Family family_from_string(const std::string& name) {
    if (name == "subsets") return Family::subsets_at_most_d;
    if (name == "intervals") return Family::intervals_k;
    if (name == "convex") return Family::convex;
    if (name == "halfplanes" || name == "halfspaces") return Family::halfspaces;
    if (name == "cosets") return Family::cosets_zn;
    if (name == "progressions") return Family::arithmetic_progressions;
    if (name == "pointline-fq") return Family::pointline_fq;
    if (name == "elekes") return Family::elekes_grid;
    if (name == "hypercube") return Family::hypercube_edges;
    if (name == "phi-hat") return Family::phi_hat;
    throw ParseError("unknown family '" + name + "'");
}

std::string to_string(Family family) {
    switch (family) {
        case Family::subsets_at_most_d: return "subsets";
        case Family::intervals_k: return "intervals";
        case Family::convex: return "convex";
        case Family::halfspaces: return "halfplanes";
        case Family::cosets_zn: return "cosets";
        case Family::arithmetic_progressions: return "progressions";
        case Family::pointline_fq: return "pointline-fq";
        case Family::elekes_grid: return "elekes";
        case Family::hypercube_edges: return "hypercube";
        case Family::phi_hat: return "phi-hat";
    }
    return "?";
}

std::variant<SetSystem, BiRelation> generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::subsets_at_most_d: return subsets_at_most_d(spec.n, spec.d);
        case Family::intervals_k: return intervals(spec.n, spec.k);
        case Family::convex: return convex_sets(spec.n);
        case Family::halfspaces: return halfplanes(spec.points);
        case Family::cosets_zn: return cosets_zn(spec.n, spec.divisors);
        case Family::arithmetic_progressions: return arithmetic_progressions(spec.window, spec.max_modulus);
        case Family::pointline_fq: return pointline_fq(spec.q);
        case Family::elekes_grid: return elekes_grid(spec.k).incidence;
        case Family::hypercube_edges: return hypercube_edges(spec.d).system;
        case Family::phi_hat:
            if (!spec.relation) throw PreconditionError("phi-hat needs an input relation");
            return phi_hat(*spec.relation);
    }
    throw ParseError("unhandled family");
}

}  // namespace vclab
