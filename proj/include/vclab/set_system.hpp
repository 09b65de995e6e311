#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vclab/bitvec.hpp"

namespace vclab {

inline constexpr std::uint64_t kDefaultBudget = 10'000'000;
inline constexpr std::size_t kDefaultHellyCap = 24;

/*
 * A finite base set {0..ground_size-1} together with a family of subsets.
 * Members are deduplicated and sorted on construction; whether the input
 * contained duplicates is remembered.
 */
class SetSystem {
public:
    SetSystem() = default;
    SetSystem(std::size_t ground_size, std::vector<BitVec> members);

    static SetSystem from_strings(std::size_t ground_size, const std::vector<std::string>& members);
    static SetSystem from_index_lists(std::size_t ground_size, const std::vector<std::vector<std::size_t>>& members);

    std::size_t ground_size() const noexcept { return ground_size_; }
    const std::vector<BitVec>& members() const noexcept { return members_; }
    const BitVec& member(std::size_t i) const { return members_.at(i); }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool had_duplicates() const noexcept { return had_duplicates_; }
    bool contains(const BitVec& set) const;

    friend bool operator==(const SetSystem& a, const SetSystem& b) {
        return a.ground_size_ == b.ground_size_ && a.members_ == b.members_;
    }

    /// The family of element columns: member i of the result has element j
    /// of this system set iff element i lies in member j. Duplicated columns
    /// collapse.
    SetSystem dual() const;

    /// {X \ S : S in family}
    SetSystem complements() const;

private:
    std::size_t ground_size_ = 0;
    std::vector<BitVec> members_;
    bool had_duplicates_ = false;
};

enum class PatternKind { chain, star, costar };

struct TracePattern {
    PatternKind kind;
    std::size_t size;

    TracePattern(PatternKind kind, std::size_t size);

    /// Pattern set i on [size]: chain {0..i}, star {i}, costar [size] minus {i}.
    BitVec set(std::size_t i) const;
    SetSystem as_system() const;
};

std::string to_string(PatternKind kind);
PatternKind pattern_kind_from_string(const std::string& name);

enum class Exactness { exact, lower_bound };

struct ShatterValue {
    std::uint64_t value = 0;
    Exactness exactness = Exactness::exact;
    std::uint64_t evaluated = 0;  // subsets examined
};

enum class ShatterMode { exact, sample };

struct ShatterOptions {
    ShatterMode mode = ShatterMode::exact;
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t samples = 20'000;
    std::uint64_t seed = 1;
};

/// {S ∩ A}, renumbered onto the elements of A in increasing order.
SetSystem trace(const SetSystem& system, const BitVec& subset);

/// Number of distinct traces on the given base elements.
std::uint64_t trace_count(const SetSystem& system, const std::vector<std::size_t>& positions);

/// Sorted distinct trace keys on at most 64 positions; bit j of a key is positions[j].
std::vector<std::uint64_t> trace_keys(const SetSystem& system, const std::vector<std::size_t>& positions);

bool is_shattered(const SetSystem& system, const std::vector<std::size_t>& positions);

ShatterValue shatter_function(const SetSystem& system, std::size_t t, const ShatterOptions& options = {});

/// -1 for the empty family.
int vc_dimension(const SetSystem& system, std::uint64_t budget = kDefaultBudget);

/// Largest n such that some n members have all 2^n atoms nonempty.
int independence_dimension(const SetSystem& system, std::uint64_t budget = kDefaultBudget);

/// True when the members at these indices have nonempty intersection and
/// dropping any one of them strictly enlarges that intersection.
bool is_irredundant(const SetSystem& system, const std::vector<std::size_t>& member_indices);

struct BreadthResult {
    int value = 1;
    std::vector<std::size_t> witness;  // largest irredundant subfamily found
};

/*
 * breadth(S) = max(1, size of a largest irredundant subfamily).
 *
 * A (d+1)-subfamily violates the breadth-d condition exactly when it is
 * irredundant, and subfamilies of irredundant families are irredundant, so a
 * depth-first search over irredundant families is exact for arbitrary
 * (not necessarily intersection-closed) families.
 */
BreadthResult breadth_with_witness(const SetSystem& system, std::uint64_t budget = kDefaultBudget);
int breadth(const SetSystem& system, std::uint64_t budget = kDefaultBudget);

/// Checks the breadth-d condition straight from the definition for every
/// subfamily of size d+1..max_size: each nonempty intersection equals the
/// intersection of some d of its members.
bool breadth_condition_holds(const SetSystem& system, int d, std::size_t max_size,
                             std::uint64_t budget = kDefaultBudget);

struct HellyResult {
    int value = 1;
    std::vector<std::size_t> witness;  // minimal inconsistent subfamily of size value, if value > 1
};

/// Helly number as max(1, size of a largest minimal inconsistent subfamily).
HellyResult helly_number(const SetSystem& system, std::size_t member_cap = kDefaultHellyCap,
                         std::uint64_t budget = kDefaultBudget);

/// True when every d-subfamily of the given members intersects.
bool is_d_consistent(const SetSystem& system, const std::vector<std::size_t>& member_indices, std::size_t d);
bool is_consistent(const SetSystem& system, const std::vector<std::size_t>& member_indices);

struct TraceWitness {
    std::vector<std::size_t> base;     // base[i] is the image of pattern element i
    std::vector<std::size_t> members;  // members[i] realizes pattern set i
};

/// Returns a placement of the pattern, nullopt when absent; BudgetExceeded when inconclusive.
std::optional<TraceWitness> contains_trace(const SetSystem& system, const TracePattern& pattern,
                                           std::uint64_t budget = kDefaultBudget);

/// Direct check of a claimed placement.
bool verify_trace_witness(const SetSystem& system, const TracePattern& pattern, const TraceWitness& witness);

struct DualityConditions {
    bool cond1 = true;  // some member contains the intersection of the others
    bool cond2 = true;  // some member is covered by the union of the others
};

/// Evaluates both conditions of the breadth duality lemma over all (d+1)-subfamilies.
/// Requires the family to be closed under pairwise ∩ and ∪ and not to contain ∅.
DualityConditions check_breadth_duality(const SetSystem& system, int d, std::uint64_t budget = kDefaultBudget);

}  // namespace vclab
