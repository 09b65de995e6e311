#include "vclab/set_system.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <random>
#include <unordered_set>

#include "vclab/combinatorics.hpp"
#include "vclab/error.hpp"

namespace vclab {

namespace {

BitVec intersect_members(const SetSystem& system, const std::vector<std::size_t>& idx) {
    BitVec acc = BitVec::full(system.ground_size());
    for (auto i : idx) acc &= system.member(i);
    return acc;
}

BitVec mask_of(std::size_t n, const std::vector<std::size_t>& positions) {
    return BitVec::from_indices(n, positions);
}

void charge(std::uint64_t& used, std::uint64_t budget, const char* what, std::optional<std::int64_t> lower) {
    if (++used > budget) {
        throw BudgetExceeded(std::string(what) + ": enumeration budget of " + std::to_string(budget) +
                                 " exceeded",
                             lower);
    }
}

}  // namespace

SetSystem::SetSystem(std::size_t ground_size, std::vector<BitVec> members)
    : ground_size_(ground_size), members_(std::move(members)) {
    for (std::size_t i = 0; i < members_.size(); ++i) {
        if (members_[i].size() != ground_size_) {
            throw InputShapeError("member " + std::to_string(i) + " has width " +
                                  std::to_string(members_[i].size()) + ", expected " +
                                  std::to_string(ground_size_));
        }
    }
    std::sort(members_.begin(), members_.end());
    auto last = std::unique(members_.begin(), members_.end());
    had_duplicates_ = last != members_.end();
    members_.erase(last, members_.end());
}

SetSystem SetSystem::from_strings(std::size_t ground_size, const std::vector<std::string>& members) {
    std::vector<BitVec> bits;
    bits.reserve(members.size());
    for (const auto& m : members) bits.push_back(BitVec::from_string(m));
    return SetSystem(ground_size, std::move(bits));
}

SetSystem SetSystem::from_index_lists(std::size_t ground_size,
                                      const std::vector<std::vector<std::size_t>>& members) {
    std::vector<BitVec> bits;
    bits.reserve(members.size());
    for (const auto& m : members) bits.push_back(BitVec::from_indices(ground_size, m));
    return SetSystem(ground_size, std::move(bits));
}

bool SetSystem::contains(const BitVec& set) const {
    return std::binary_search(members_.begin(), members_.end(), set);
}

SetSystem SetSystem::dual() const {
    std::vector<BitVec> cols;
    cols.reserve(ground_size_);
    for (std::size_t x = 0; x < ground_size_; ++x) {
        BitVec col(members_.size());
        for (std::size_t j = 0; j < members_.size(); ++j) {
            if (members_[j].test(x)) col.set(j);
        }
        cols.push_back(std::move(col));
    }
    return SetSystem(members_.size(), std::move(cols));
}

SetSystem SetSystem::complements() const {
    std::vector<BitVec> out;
    out.reserve(members_.size());
    for (const auto& m : members_) out.push_back(m.complement());
    return SetSystem(ground_size_, std::move(out));
}

TracePattern::TracePattern(PatternKind kind, std::size_t size) : kind(kind), size(size) {
    if (size < 2) throw RangeError("trace pattern size must be at least 2, got " + std::to_string(size));
}

BitVec TracePattern::set(std::size_t i) const {
    BitVec s(size);
    switch (kind) {
        case PatternKind::chain:
            for (std::size_t j = 0; j <= i; ++j) s.set(j);
            break;
        case PatternKind::star:
            s.set(i);
            break;
        case PatternKind::costar:
            s = BitVec::full(size);
            s.reset(i);
            break;
    }
    return s;
}

SetSystem TracePattern::as_system() const {
    std::vector<BitVec> sets;
    for (std::size_t i = 0; i < size; ++i) sets.push_back(set(i));
    return SetSystem(size, std::move(sets));
}

std::string to_string(PatternKind kind) {
    switch (kind) {
        case PatternKind::chain: return "chain";
        case PatternKind::star: return "star";
        case PatternKind::costar: return "costar";
    }
    return "?";
}

PatternKind pattern_kind_from_string(const std::string& name) {
    if (name == "chain") return PatternKind::chain;
    if (name == "star") return PatternKind::star;
    if (name == "costar") return PatternKind::costar;
    throw ParseError("unknown trace pattern '" + name + "'");
}

SetSystem trace(const SetSystem& system, const BitVec& subset) {
    if (subset.size() != system.ground_size()) {
        throw InputShapeError("trace subset has width " + std::to_string(subset.size()) + ", expected " +
                              std::to_string(system.ground_size()));
    }
    const auto positions = subset.indices();
    std::vector<BitVec> out;
    out.reserve(system.size());
    for (const auto& m : system.members()) {
        BitVec r(positions.size());
        for (std::size_t j = 0; j < positions.size(); ++j) {
            if (m.test(positions[j])) r.set(j);
        }
        out.push_back(std::move(r));
    }
    return SetSystem(positions.size(), std::move(out));
}

std::vector<std::uint64_t> trace_keys(const SetSystem& system, const std::vector<std::size_t>& positions) {
    if (positions.size() > 64) throw RangeError("trace_keys supports at most 64 positions");
    std::vector<std::uint64_t> keys;
    keys.reserve(system.size());
    for (const auto& m : system.members()) keys.push_back(m.extract(positions));
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    return keys;
}

std::uint64_t trace_count(const SetSystem& system, const std::vector<std::size_t>& positions) {
    if (positions.size() <= 64) return trace_keys(system, positions).size();
    const BitVec mask = mask_of(system.ground_size(), positions);
    std::unordered_set<BitVec, BitVecHash> seen;
    for (const auto& m : system.members()) seen.insert(m & mask);
    return seen.size();
}

bool is_shattered(const SetSystem& system, const std::vector<std::size_t>& positions) {
    if (positions.size() >= 64) return false;
    const std::uint64_t need = std::uint64_t{1} << positions.size();
    if (system.size() < need) return false;
    return trace_count(system, positions) == need;
}

ShatterValue shatter_function(const SetSystem& system, std::size_t t, const ShatterOptions& options) {
    const std::size_t n = system.ground_size();
    if (t > n) {
        throw RangeError("shatter_function: t=" + std::to_string(t) + " exceeds ground size " + std::to_string(n));
    }
    ShatterValue result;
    if (system.empty()) return result;

    const std::uint64_t power = t >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << t);
    const std::uint64_t cap = std::min<std::uint64_t>(power, system.size());

    if (options.mode == ShatterMode::sample) {
        result.exactness = Exactness::lower_bound;
        std::mt19937_64 rng(options.seed);
        std::vector<std::size_t> pool(n);
        std::iota(pool.begin(), pool.end(), std::size_t{0});
        for (std::uint64_t s = 0; s < options.samples; ++s) {
            for (std::size_t i = 0; i < t; ++i) {
                std::uniform_int_distribution<std::size_t> pick(i, n - 1);
                std::swap(pool[i], pool[pick(rng)]);
            }
            std::vector<std::size_t> chosen(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(t));
            std::sort(chosen.begin(), chosen.end());
            result.value = std::max(result.value, trace_count(system, chosen));
            ++result.evaluated;
            if (result.value == cap) break;
        }
        return result;
    }

    const std::uint64_t total = saturate_u64(binomial(n, t));
    bool stopped_early = false;
    for (CombinationIterator it(n, t); it.valid(); it.next()) {
        if (result.evaluated == options.budget) {
            stopped_early = true;
            break;
        }
        ++result.evaluated;
        result.value = std::max(result.value, trace_count(system, it.current()));
        if (result.value == cap) return result;
    }
    if (stopped_early && result.evaluated < total) {
        throw BudgetExceeded("shatter_function(t=" + std::to_string(t) + "): C(" + std::to_string(n) + "," +
                                 std::to_string(t) + ") subsets exceed budget " + std::to_string(options.budget),
                             static_cast<std::int64_t>(result.value));
    }
    return result;
}

int vc_dimension(const SetSystem& system, std::uint64_t budget) {
    if (system.empty()) return -1;
    const std::size_t n = system.ground_size();
    std::uint64_t used = 0;
    std::vector<std::vector<std::size_t>> level{{}};
    int dim = 0;
    while (true) {
        const std::size_t k = level.front().size();
        if (k + 1 >= 64 || (std::uint64_t{1} << (k + 1)) > system.size()) break;
        std::vector<std::vector<std::size_t>> next;
        for (const auto& base : level) {
            const std::size_t start = base.empty() ? 0 : base.back() + 1;
            for (std::size_t e = start; e < n; ++e) {
                std::vector<std::size_t> cand = base;
                cand.push_back(e);
                // Every k-subset must already be shattered.
                bool ok = true;
                for (std::size_t drop = 0; drop + 1 < cand.size() && ok; ++drop) {
                    std::vector<std::size_t> sub;
                    for (std::size_t j = 0; j < cand.size(); ++j) {
                        if (j != drop) sub.push_back(cand[j]);
                    }
                    ok = std::binary_search(level.begin(), level.end(), sub);
                }
                if (!ok) continue;
                charge(used, budget, "vc_dimension", dim);
                if (is_shattered(system, cand)) next.push_back(std::move(cand));
            }
        }
        if (next.empty()) break;
        level = std::move(next);
        dim = static_cast<int>(level.front().size());
    }
    return dim;
}

int independence_dimension(const SetSystem& system, std::uint64_t budget) {
    if (system.empty()) return 0;
    try {
        return std::max(0, vc_dimension(system.dual(), budget));
    } catch (const BudgetExceeded& e) {
        throw BudgetExceeded(std::string("independence_dimension: ") + e.what(), e.lower_bound());
    }
}

bool is_irredundant(const SetSystem& system, const std::vector<std::size_t>& member_indices) {
    const BitVec all = intersect_members(system, member_indices);
    if (all.none()) return false;
    for (std::size_t drop = 0; drop < member_indices.size(); ++drop) {
        BitVec rest = BitVec::full(system.ground_size());
        for (std::size_t j = 0; j < member_indices.size(); ++j) {
            if (j != drop) rest &= system.member(member_indices[j]);
        }
        if (rest == all) return false;
    }
    return true;
}

namespace {

struct BreadthSearch {
    const SetSystem& system;
    std::uint64_t budget;
    std::uint64_t used = 0;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;

    void run(std::size_t start) {
        for (std::size_t j = start; j < system.size(); ++j) {
            current.push_back(j);
            charge(used, budget, "breadth", static_cast<std::int64_t>(std::max<std::size_t>(1, best.size())));
            if (is_irredundant(system, current)) {
                if (current.size() > best.size()) best = current;
                run(j + 1);
            }
            current.pop_back();
        }
    }
};

}  // namespace

BreadthResult breadth_with_witness(const SetSystem& system, std::uint64_t budget) {
    BreadthSearch search{system, budget, 0, {}, {}};
    search.run(0);
    BreadthResult result;
    result.value = std::max(1, static_cast<int>(search.best.size()));
    result.witness = search.best;
    return result;
}

int breadth(const SetSystem& system, std::uint64_t budget) { return breadth_with_witness(system, budget).value; }

bool breadth_condition_holds(const SetSystem& system, int d, std::size_t max_size, std::uint64_t budget) {
    if (d < 1) throw RangeError("breadth condition requires d >= 1");
    const std::size_t m = system.size();
    const auto du = static_cast<std::size_t>(d);
    std::uint64_t used = 0;
    for (std::size_t size = du + 1; size <= std::min(max_size, m); ++size) {
        bool holds = true;
        for_each_combination(m, size, [&](const std::vector<std::size_t>& fam) {
            charge(used, budget, "breadth_condition_holds", std::nullopt);
            const BitVec all = intersect_members(system, fam);
            if (all.none()) return true;
            bool found = false;
            for_each_combination(size, du, [&](const std::vector<std::size_t>& pick) {
                std::vector<std::size_t> sub;
                for (auto p : pick) sub.push_back(fam[p]);
                found = intersect_members(system, sub) == all;
                return !found;
            });
            holds = found;
            return holds;
        });
        if (!holds) return false;
    }
    return true;
}

bool is_consistent(const SetSystem& system, const std::vector<std::size_t>& member_indices) {
    return intersect_members(system, member_indices).any();
}

bool is_d_consistent(const SetSystem& system, const std::vector<std::size_t>& member_indices, std::size_t d) {
    if (d >= member_indices.size()) return is_consistent(system, member_indices);
    bool ok = true;
    for_each_combination(member_indices.size(), d, [&](const std::vector<std::size_t>& pick) {
        std::vector<std::size_t> sub;
        for (auto p : pick) sub.push_back(member_indices[p]);
        ok = is_consistent(system, sub);
        return ok;
    });
    return ok;
}

namespace {

struct HellySearch {
    const SetSystem& system;
    std::uint64_t budget;
    std::uint64_t used = 0;
    std::vector<std::size_t> current;
    std::vector<std::size_t> best;

    // `acc` is the intersection of `current`, which is nonempty (or current is empty).
    void run(std::size_t start, const BitVec& acc) {
        for (std::size_t j = start; j < system.size(); ++j) {
            charge(used, budget, "helly_number", static_cast<std::int64_t>(std::max<std::size_t>(1, best.size())));
            BitVec next = acc & system.member(j);
            current.push_back(j);
            if (next.any()) {
                run(j + 1, next);
            } else if (current.size() > best.size() && minimal_inconsistent()) {
                best = current;
            }
            current.pop_back();
        }
    }

    bool minimal_inconsistent() const {
        for (std::size_t drop = 0; drop + 1 < current.size(); ++drop) {
            BitVec rest = BitVec::full(system.ground_size());
            for (std::size_t j = 0; j < current.size(); ++j) {
                if (j != drop) rest &= system.member(current[j]);
            }
            if (rest.none()) return false;
        }
        return true;
    }
};

}  // namespace

HellyResult helly_number(const SetSystem& system, std::size_t member_cap, std::uint64_t budget) {
    if (system.size() > member_cap) {
        throw BudgetExceeded("helly_number: " + std::to_string(system.size()) + " members exceed cap " +
                             std::to_string(member_cap));
    }
    HellySearch search{system, budget, 0, {}, {}};
    search.run(0, BitVec::full(system.ground_size()));
    HellyResult result;
    result.value = std::max(1, static_cast<int>(search.best.size()));
    if (search.best.size() > 1) result.witness = search.best;
    return result;
}

namespace {

// Bit j of every key refers to positions[j].
bool chain_order(const std::vector<std::uint64_t>& keys, std::size_t m, std::vector<std::size_t>* order) {
    // reach[i] = a key of popcount i+1 that heads a nested chain from a singleton.
    std::vector<std::vector<std::uint64_t>> by_size(m + 1);
    for (auto k : keys) by_size[static_cast<std::size_t>(std::popcount(k))].push_back(k);
    std::vector<std::vector<std::pair<std::uint64_t, std::uint64_t>>> reach(m + 1);  // (key, parent)
    for (auto k : by_size[1]) reach[1].emplace_back(k, 0);
    for (std::size_t s = 2; s <= m; ++s) {
        for (auto k : by_size[s]) {
            for (const auto& [p, unused] : reach[s - 1]) {
                if ((p & ~k) == 0) {
                    reach[s].emplace_back(k, p);
                    break;
                }
            }
        }
        if (reach[s].empty()) return false;
    }
    if (m == 0 || reach[m].empty()) return m == 0;
    if (order != nullptr) {
        order->assign(m, 0);
        std::uint64_t key = reach[m].front().first;
        for (std::size_t s = m; s >= 1; --s) {
            std::uint64_t parent = 0;
            for (const auto& [k, p] : reach[s]) {
                if (k == key) {
                    parent = p;
                    break;
                }
            }
            (*order)[s - 1] = static_cast<std::size_t>(std::countr_zero(key & ~parent));
            key = parent;
        }
    }
    return true;
}

bool pattern_realized(PatternKind kind, const std::vector<std::uint64_t>& keys, std::size_t m) {
    const std::uint64_t full = m == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << m) - 1);
    switch (kind) {
        case PatternKind::chain:
            return chain_order(keys, m, nullptr);
        case PatternKind::star:
            for (std::size_t i = 0; i < m; ++i) {
                if (!std::binary_search(keys.begin(), keys.end(), std::uint64_t{1} << i)) return false;
            }
            return true;
        case PatternKind::costar:
            for (std::size_t i = 0; i < m; ++i) {
                if (!std::binary_search(keys.begin(), keys.end(), full & ~(std::uint64_t{1} << i))) return false;
            }
            return true;
    }
    return false;
}

struct PatternSearch {
    const SetSystem& system;
    PatternKind kind;
    std::size_t k;
    std::uint64_t budget;
    std::uint64_t used = 0;
    std::vector<std::size_t> current;

    bool run(std::size_t start) {
        if (current.size() == k) return true;
        for (std::size_t e = start; e < system.ground_size(); ++e) {
            if (system.ground_size() - e < k - current.size()) break;
            charge(used, budget, "contains_trace", std::nullopt);
            current.push_back(e);
            if (pattern_realized(kind, trace_keys(system, current), current.size()) && run(e + 1)) return true;
            current.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<TraceWitness> contains_trace(const SetSystem& system, const TracePattern& pattern,
                                           std::uint64_t budget) {
    if (pattern.size > 64) throw RangeError("contains_trace supports pattern sizes up to 64");
    if (pattern.size > system.ground_size()) return std::nullopt;
    PatternSearch search{system, pattern.kind, pattern.size, budget, 0, {}};
    if (!search.run(0)) return std::nullopt;

    const auto& chosen = search.current;
    TraceWitness witness;
    if (pattern.kind == PatternKind::chain) {
        std::vector<std::size_t> order;
        chain_order(trace_keys(system, chosen), chosen.size(), &order);
        for (auto j : order) witness.base.push_back(chosen[j]);
    } else {
        witness.base = chosen;
    }
    for (std::size_t i = 0; i < pattern.size; ++i) {
        const std::uint64_t want = pattern.set(i).words()[0];
        for (std::size_t m = 0; m < system.size(); ++m) {
            if (system.member(m).extract(witness.base) == want) {
                witness.members.push_back(m);
                break;
            }
        }
    }
    return witness;
}

bool verify_trace_witness(const SetSystem& system, const TracePattern& pattern, const TraceWitness& witness) {
    if (witness.base.size() != pattern.size || witness.members.size() != pattern.size) return false;
    std::vector<std::size_t> sorted = witness.base;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
    for (auto b : sorted) {
        if (b >= system.ground_size()) return false;
    }
    for (std::size_t i = 0; i < pattern.size; ++i) {
        if (witness.members[i] >= system.size()) return false;
        const BitVec& member = system.member(witness.members[i]);
        const BitVec want = pattern.set(i);
        for (std::size_t j = 0; j < pattern.size; ++j) {
            if (member.test(witness.base[j]) != want.test(j)) return false;
        }
    }
    return true;
}

DualityConditions check_breadth_duality(const SetSystem& system, int d, std::uint64_t budget) {
    if (d < 1) throw RangeError("check_breadth_duality requires d >= 1");
    const auto& ms = system.members();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (ms[i].none()) throw PreconditionError("family contains the empty set (member " + std::to_string(i) + ")");
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            const bool meet = system.contains(ms[i] & ms[j]);
            const bool join = system.contains(ms[i] | ms[j]);
            if (!meet || !join) {
                throw PreconditionError("family not closed under " + std::string(meet ? "union" : "intersection") +
                                        " for members " + ms[i].to_string() + " and " + ms[j].to_string());
            }
        }
    }
    DualityConditions out;
    const auto size = static_cast<std::size_t>(d) + 1;
    std::uint64_t used = 0;
    for_each_combination(ms.size(), size, [&](const std::vector<std::size_t>& fam) {
        charge(used, budget, "check_breadth_duality", std::nullopt);
        bool c1 = false;
        bool c2 = false;
        for (std::size_t i = 0; i < size; ++i) {
            BitVec meet = BitVec::full(system.ground_size());
            BitVec join(system.ground_size());
            for (std::size_t j = 0; j < size; ++j) {
                if (j == i) continue;
                meet &= ms[fam[j]];
                join |= ms[fam[j]];
            }
            c1 = c1 || meet.is_subset_of(ms[fam[i]]);
            c2 = c2 || ms[fam[i]].is_subset_of(join);
        }
        out.cond1 = out.cond1 && c1;
        out.cond2 = out.cond2 && c2;
        return out.cond1 || out.cond2;
    });
    return out;
}

}  // namespace vclab
