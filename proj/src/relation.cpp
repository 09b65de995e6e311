#include "vclab/relation.hpp"

#include <algorithm>
#include <unordered_map>

#include "vclab/combinatorics.hpp"
#include "vclab/error.hpp"

namespace vclab {

BiRelation::BiRelation(std::size_t x_size, std::size_t y_size) : y_size_(y_size), rows_(x_size, BitVec(y_size)) {}

BiRelation::BiRelation(std::size_t y_size, std::vector<BitVec> rows) : y_size_(y_size), rows_(std::move(rows)) {
    for (std::size_t a = 0; a < rows_.size(); ++a) {
        if (rows_[a].size() != y_size_) {
            throw InputShapeError("row " + std::to_string(a) + " has width " + std::to_string(rows_[a].size()) +
                                  ", expected " + std::to_string(y_size_));
        }
    }
}

BiRelation BiRelation::from_strings(std::size_t x_size, std::size_t y_size, const std::vector<std::string>& rows) {
    if (rows.size() != x_size) {
        throw InputShapeError("relation has " + std::to_string(rows.size()) + " rows, expected " +
                              std::to_string(x_size));
    }
    std::vector<BitVec> bits;
    bits.reserve(rows.size());
    for (const auto& r : rows) bits.push_back(BitVec::from_string(r));
    return BiRelation(y_size, std::move(bits));
}

BitVec BiRelation::column(std::size_t b) const {
    if (b >= y_size_) throw RangeError("column " + std::to_string(b) + " out of range");
    BitVec col(rows_.size());
    for (std::size_t a = 0; a < rows_.size(); ++a) {
        if (rows_[a].test(b)) col.set(a);
    }
    return col;
}

std::size_t BiRelation::edge_count() const noexcept {
    std::size_t c = 0;
    for (const auto& r : rows_) c += r.count();
    return c;
}

FormulaSet::FormulaSet(std::vector<BiRelation> relations) : relations_(std::move(relations)) {
    if (relations_.empty()) throw PreconditionError("formula set must contain at least one relation");
    for (std::size_t i = 1; i < relations_.size(); ++i) {
        if (relations_[i].x_size() != x_size() || relations_[i].y_size() != y_size()) {
            throw InputShapeError("relation " + std::to_string(i) + " has shape " +
                                  std::to_string(relations_[i].x_size()) + "x" +
                                  std::to_string(relations_[i].y_size()) + ", expected " +
                                  std::to_string(x_size()) + "x" + std::to_string(y_size()));
        }
    }
}

BiRelation dualize(const BiRelation& rel) {
    std::vector<BitVec> rows;
    rows.reserve(rel.y_size());
    for (std::size_t b = 0; b < rel.y_size(); ++b) rows.push_back(rel.column(b));
    return BiRelation(rel.x_size(), std::move(rows));
}

SetSystem system_of(const BiRelation& rel) {
    std::vector<BitVec> cols;
    cols.reserve(rel.y_size());
    for (std::size_t b = 0; b < rel.y_size(); ++b) cols.push_back(rel.column(b));
    return SetSystem(rel.x_size(), std::move(cols));
}

namespace {

void check_params(const FormulaSet& delta, const std::vector<std::size_t>& params) {
    for (auto b : params) {
        if (b >= delta.y_size()) {
            throw RangeError("parameter index " + std::to_string(b) + " out of range (y_size " +
                             std::to_string(delta.y_size()) + ")");
        }
    }
}

std::uint64_t count_types_unchecked(const FormulaSet& delta, const std::vector<std::size_t>& params) {
    std::vector<BitVec> sigs;
    sigs.reserve(delta.x_size());
    for (std::size_t x = 0; x < delta.x_size(); ++x) sigs.push_back(type_signature(delta, x, params));
    std::sort(sigs.begin(), sigs.end());
    return static_cast<std::uint64_t>(std::unique(sigs.begin(), sigs.end()) - sigs.begin());
}

}  // namespace

BitVec type_signature(const FormulaSet& delta, std::size_t x, const std::vector<std::size_t>& params) {
    BitVec sig(delta.size() * params.size());
    std::size_t pos = 0;
    for (const auto& phi : delta.relations()) {
        const BitVec& row = phi.row(x);
        for (auto b : params) sig.set(pos++, row.test(b));
    }
    return sig;
}

std::uint64_t count_types(const FormulaSet& delta, const std::vector<std::size_t>& params) {
    check_params(delta, params);
    return count_types_unchecked(delta, params);
}

DualShatterResult dual_shatter(const FormulaSet& delta, std::size_t t, std::uint64_t budget) {
    if (t > delta.y_size()) {
        throw RangeError("dual_shatter: t=" + std::to_string(t) + " exceeds y_size " + std::to_string(delta.y_size()));
    }
    DualShatterResult result;
    // No more types than objects, and no more than 2^(|Δ| t) truth vectors.
    const std::size_t bits = delta.size() * t;
    const std::uint64_t cap = bits >= 64 ? delta.x_size()
                                         : std::min<std::uint64_t>(delta.x_size(), std::uint64_t{1} << bits);
    std::uint64_t used = 0;
    for (CombinationIterator it(delta.y_size(), t); it.valid(); it.next()) {
        if (used == budget) {
            result.exactness = Exactness::lower_bound;
            result.warning = "dual_shatter(t=" + std::to_string(t) + "): budget of " + std::to_string(budget) +
                             " parameter sets exhausted; value is a lower bound";
            break;
        }
        ++used;
        result.value = std::max(result.value, count_types_unchecked(delta, it.current()));
        if (result.value == cap) break;
    }
    return result;
}

DualShatterResult dual_shatter(const BiRelation& rel, std::size_t t, std::uint64_t budget) {
    return dual_shatter(FormulaSet({rel}), t, budget);
}

namespace {

struct LadderSearch {
    const BiRelation& rel;
    std::vector<BitVec> cols;
    std::uint64_t budget;
    std::uint64_t used = 0;
    int best = 0;
    std::unordered_map<std::string, int> memo;

    // cand_a: objects unrelated to every b chosen so far.
    // cand_b: parameters related to every a chosen so far.
    int extend(const BitVec& cand_a, const BitVec& cand_b, int depth) {
        const std::string key = cand_a.to_string() + "|" + cand_b.to_string();
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        if (++used > budget) {
            throw BudgetExceeded("ladder_dimension: budget of " + std::to_string(budget) + " states exceeded", best);
        }
        int longest = 0;
        for (auto a : cand_a.indices()) {
            const BitVec next_b = cand_b & rel.row(a);
            if (next_b.none()) continue;
            BitVec without_a = cand_a;
            without_a.reset(a);
            for (auto b : next_b.indices()) {
                BitVec next_a = without_a;
                for (auto x : (next_a & cols[b]).indices()) next_a.reset(x);
                BitVec rest_b = next_b;
                rest_b.reset(b);
                const int len = 1 + extend(next_a, rest_b, depth + 1);
                longest = std::max(longest, len);
                best = std::max(best, depth + len);
            }
        }
        memo.emplace(key, longest);
        return longest;
    }
};

}  // namespace

int ladder_dimension(const BiRelation& rel, std::uint64_t budget) {
    LadderSearch search{rel, {}, budget, 0, 0, {}};
    for (std::size_t b = 0; b < rel.y_size(); ++b) search.cols.push_back(rel.column(b));
    return search.extend(BitVec::full(rel.x_size()), BitVec::full(rel.y_size()), 0);
}

BiRelation negate(const BiRelation& rel) {
    std::vector<BitVec> rows;
    rows.reserve(rel.x_size());
    for (const auto& r : rel.rows()) rows.push_back(r.complement());
    return BiRelation(rel.y_size(), std::move(rows));
}

BiRelation boolean_combine(const BiRelation& a, const BiRelation& b, BoolOp op) {
    if (op == BoolOp::op_not) return negate(a);
    if (a.x_size() != b.x_size() || a.y_size() != b.y_size()) {
        throw InputShapeError("boolean_combine: shapes " + std::to_string(a.x_size()) + "x" +
                              std::to_string(a.y_size()) + " and " + std::to_string(b.x_size()) + "x" +
                              std::to_string(b.y_size()) + " differ");
    }
    std::vector<BitVec> rows;
    rows.reserve(a.x_size());
    for (std::size_t i = 0; i < a.x_size(); ++i) {
        rows.push_back(op == BoolOp::op_and ? (a.row(i) & b.row(i)) : (a.row(i) | b.row(i)));
    }
    return BiRelation(a.y_size(), std::move(rows));
}

ShelahCode::ShelahCode(FormulaSet delta) : delta_(std::move(delta)) {}

bool ShelahCode::holds(std::size_t x, const Param& param) const {
    const std::size_t dd = d();
    if (param.size() != tuple_length()) {
        throw InputShapeError("coding parameter has length " + std::to_string(param.size()) + ", expected " +
                              std::to_string(tuple_length()));
    }
    // Layout: y_1..y_2d at 0..2d-1, z at 2d, z_1..z_2d at 2d+1..4d.
    const std::size_t z = param[2 * dd];
    std::size_t hits = 0;
    std::size_t hit = 0;
    for (std::size_t k = 0; k < 2 * dd; ++k) {
        if (param[2 * dd + 1 + k] == z) {
            ++hits;
            hit = k;
        }
    }
    if (hits != 1) return false;
    if (hit < dd) return delta_[hit].related(x, param[hit]);
    return !delta_[hit - dd].related(x, param[hit]);
}

std::vector<ShelahCode::Param> ShelahCode::build_params(const std::vector<std::size_t>& B, std::size_t b0,
                                                        std::size_t b1) const {
    if (B.size() < 2) throw PreconditionError("coding needs |B| >= 2, got " + std::to_string(B.size()));
    if (b0 == b1) throw PreconditionError("coding needs two distinct parameters b0 != b1");
    for (auto b : B) {
        if (b >= delta_.y_size()) throw RangeError("parameter index " + std::to_string(b) + " out of range");
    }
    const std::size_t dd = d();
    std::vector<Param> out;
    out.reserve(2 * dd * B.size());
    for (auto b : B) {
        for (std::size_t k = 0; k < dd; ++k) {
            // b0^(k): y_{d+k} = b, z = b1, z_{d+k} = b1, everything else b0.
            Param neg(tuple_length(), b0);
            neg[dd + k] = b;
            neg[2 * dd] = b1;
            neg[2 * dd + 1 + dd + k] = b1;
            // b1^(k): y_k = b, z = b1, z_k = b1.
            Param pos(tuple_length(), b0);
            pos[k] = b;
            pos[2 * dd] = b1;
            pos[2 * dd + 1 + k] = b1;
            out.push_back(std::move(neg));
            out.push_back(std::move(pos));
        }
    }
    return out;
}

std::vector<ShelahCode::Param> ShelahCode::build_params(const std::vector<std::size_t>& B) const {
    if (B.size() < 2) throw PreconditionError("coding needs |B| >= 2, got " + std::to_string(B.size()));
    return build_params(B, B[0], B[1]);
}

BiRelation ShelahCode::materialize(const std::vector<Param>& params) const {
    BiRelation rel(delta_.x_size(), params.size());
    for (std::size_t x = 0; x < delta_.x_size(); ++x) {
        for (std::size_t j = 0; j < params.size(); ++j) {
            if (holds(x, params[j])) rel.set(x, j);
        }
    }
    return rel;
}

BiRelation lift_parameter(const BiRelation& phi, std::size_t extra_size, std::size_t zero) {
    if (phi.x_size() == 0) throw PreconditionError("lift_parameter: empty object domain");
    if (zero >= extra_size) {
        throw RangeError("lift_parameter: zero element " + std::to_string(zero) + " outside extra domain of size " +
                         std::to_string(extra_size));
    }
    const std::size_t m = extra_size;
    BiRelation psi(phi.x_size() * m, phi.y_size() * m);
    for (std::size_t x = 0; x < phi.x_size(); ++x) {
        for (std::size_t u = 0; u < m; ++u) {
            for (std::size_t y = 0; y < phi.y_size(); ++y) {
                for (std::size_t c = 0; c < m; ++c) {
                    if ((u == zero && phi.related(x, y)) || u == c) psi.set(x * m + u, y * m + c);
                }
            }
        }
    }
    return psi;
}

std::vector<std::size_t> lift_witness(const BiRelation& phi, std::size_t extra_size, std::size_t zero,
                                      const std::vector<std::size_t>& A, std::size_t a_prime) {
    if (phi.x_size() == 0) throw PreconditionError("lift_witness: empty object domain");
    if (zero >= extra_size) throw RangeError("lift_witness: zero element outside extra domain");
    if (a_prime >= phi.x_size()) throw RangeError("lift_witness: a' out of range");
    if (extra_size < A.size() + 1) {
        throw PreconditionError("lift_witness: need " + std::to_string(A.size()) +
                                " distinct extra elements besides zero, domain has " + std::to_string(extra_size));
    }
    std::vector<std::size_t> out;
    for (auto a : A) {
        if (a >= phi.x_size()) throw RangeError("lift_witness: object " + std::to_string(a) + " out of range");
        out.push_back(a * extra_size + zero);
    }
    std::size_t u = 0;
    for (std::size_t j = 0; j < A.size(); ++j, ++u) {
        if (u == zero) ++u;
        out.push_back(a_prime * extra_size + u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

FormulaSet power_delta(const FormulaSet& delta, std::size_t d, std::uint64_t budget) {
    if (d < 1) throw RangeError("power_delta requires d >= 1");
    const std::size_t nx = delta.x_size();
    u128 objects = 1;
    for (std::size_t i = 0; i < d; ++i) {
        objects *= nx;
        if (objects > budget) {
            throw BudgetExceeded("power_delta: |X|^" + std::to_string(d) + " objects exceed budget " +
                                 std::to_string(budget));
        }
    }
    const auto count = static_cast<std::size_t>(objects);
    std::vector<BiRelation> out;
    for (std::size_t i = 0; i < d; ++i) {
        std::size_t stride = 1;
        for (std::size_t j = i + 1; j < d; ++j) stride *= nx;
        for (const auto& phi : delta.relations()) {
            std::vector<BitVec> rows;
            rows.reserve(count);
            for (std::size_t tuple = 0; tuple < count; ++tuple) rows.push_back(phi.row((tuple / stride) % nx));
            out.emplace_back(delta.y_size(), std::move(rows));
        }
    }
    return FormulaSet(std::move(out));
}

SetSystem pullback(const SetSystem& system, const std::vector<std::size_t>& f) {
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (f[i] >= system.ground_size()) {
            throw RangeError("pullback: f(" + std::to_string(i) + ") = " + std::to_string(f[i]) +
                             " outside ground set of size " + std::to_string(system.ground_size()));
        }
    }
    std::vector<BitVec> out;
    out.reserve(system.size());
    for (const auto& m : system.members()) {
        BitVec pre(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (m.test(f[i])) pre.set(i);
        }
        out.push_back(std::move(pre));
    }
    return SetSystem(f.size(), std::move(out));
}

}  // namespace vclab
