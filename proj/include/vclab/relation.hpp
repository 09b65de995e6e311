#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vclab/bitvec.hpp"
#include "vclab/set_system.hpp"

namespace vclab {

/// Φ ⊆ X × Y stored row-wise: rows[a] has bit b set iff (a,b) ∈ Φ.
class BiRelation {
public:
    BiRelation() = default;
    BiRelation(std::size_t x_size, std::size_t y_size);
    BiRelation(std::size_t y_size, std::vector<BitVec> rows);

    static BiRelation from_strings(std::size_t x_size, std::size_t y_size, const std::vector<std::string>& rows);

    std::size_t x_size() const noexcept { return rows_.size(); }
    std::size_t y_size() const noexcept { return y_size_; }
    const std::vector<BitVec>& rows() const noexcept { return rows_; }
    const BitVec& row(std::size_t a) const { return rows_.at(a); }
    BitVec column(std::size_t b) const;

    bool related(std::size_t a, std::size_t b) const { return rows_[a].test(b); }
    void set(std::size_t a, std::size_t b, bool value = true) { rows_.at(a).set(b, value); }
    std::size_t edge_count() const noexcept;

    friend bool operator==(const BiRelation&, const BiRelation&) = default;

private:
    std::size_t y_size_ = 0;
    std::vector<BitVec> rows_;
};

/// Δ(x;y): a nonempty ordered list of relations on the same X × Y.
class FormulaSet {
public:
    explicit FormulaSet(std::vector<BiRelation> relations);

    std::size_t size() const noexcept { return relations_.size(); }
    std::size_t x_size() const noexcept { return relations_.front().x_size(); }
    std::size_t y_size() const noexcept { return relations_.front().y_size(); }
    const std::vector<BiRelation>& relations() const noexcept { return relations_; }
    const BiRelation& operator[](std::size_t i) const { return relations_.at(i); }

private:
    std::vector<BiRelation> relations_;
};

BiRelation dualize(const BiRelation& rel);

/// S_Φ = {Φ_y : y ∈ Y} on base X.
SetSystem system_of(const BiRelation& rel);

/// Number of complete Δ(x;B)-types realized in X: distinct truth vectors
/// (φ(x;b))_{φ∈Δ, b∈B}, packed in (φ, b) lexicographic order.
std::uint64_t count_types(const FormulaSet& delta, const std::vector<std::size_t>& params);

/// The truth vector of x over Δ and B in (φ, b) lexicographic order.
BitVec type_signature(const FormulaSet& delta, std::size_t x, const std::vector<std::size_t>& params);

struct DualShatterResult {
    std::uint64_t value = 0;
    Exactness exactness = Exactness::exact;
    std::string warning;  // nonempty when the value is only a lower bound
};

/// π*_Δ(t) = max |S^Δ(B)| over t-subsets B of Y. Past the budget the best
/// value found is returned flagged as a lower bound with a warning.
DualShatterResult dual_shatter(const FormulaSet& delta, std::size_t t, std::uint64_t budget = kDefaultBudget);
DualShatterResult dual_shatter(const BiRelation& rel, std::size_t t, std::uint64_t budget = kDefaultBudget);

/// Largest n with a_1..a_n, b_1..b_n such that (a_i, b_j) ∈ Φ iff i <= j.
int ladder_dimension(const BiRelation& rel, std::uint64_t budget = kDefaultBudget);

enum class BoolOp { op_not, op_and, op_or };

BiRelation negate(const BiRelation& rel);
BiRelation boolean_combine(const BiRelation& a, const BiRelation& b, BoolOp op);

/*
 * The single relation ψ_Δ(x; y_1..y_2d, z, z_1..z_2d) coding a formula set of
 * size d. Parameters are tuples of 4d+1 indices into Y and are only
 * materialized for the tuples a caller asks about.
 */
class ShelahCode {
public:
    using Param = std::vector<std::size_t>;

    explicit ShelahCode(FormulaSet delta);

    std::size_t d() const noexcept { return delta_.size(); }
    std::size_t tuple_length() const noexcept { return 4 * d() + 1; }
    const FormulaSet& delta() const noexcept { return delta_; }

    bool holds(std::size_t x, const Param& param) const;

    /// For b0 != b1 in B returns b0^(k)(b), b1^(k)(b) for b in B, k = 1..d,
    /// in that order; the result has 2d|B| tuples. ψ at b0^(k)(b) defines
    /// ¬φ_k(x;b) and at b1^(k)(b) defines φ_k(x;b).
    std::vector<Param> build_params(const std::vector<std::size_t>& B, std::size_t b0, std::size_t b1) const;
    std::vector<Param> build_params(const std::vector<std::size_t>& B) const;

    /// x_size × |params| relation with column j = ψ(X; params[j]).
    BiRelation materialize(const std::vector<Param>& params) const;

private:
    FormulaSet delta_;
};

/*
 * ψ((x,u); (y,c)) = (u = zero ∧ φ(x;y)) ∨ (u = c) with u, c ranging over an
 * extra domain M of the given size. Objects (x,u) are indexed x·|M| + u and
 * parameters (y,c) are indexed y·|M| + c.
 */
BiRelation lift_parameter(const BiRelation& phi, std::size_t extra_size, std::size_t zero);

/// The set A' = (A × {0}) ∪ {(a', a_1), ..., (a', a_t)} as lifted object
/// indices, with a_1..a_t the first t elements of M other than zero.
std::vector<std::size_t> lift_witness(const BiRelation& phi, std::size_t extra_size, std::size_t zero,
                                      const std::vector<std::size_t>& A, std::size_t a_prime);

/// Δ' = {φ(x_i; y) : i < d, φ ∈ Δ} on objects X^d, coordinate-major: relation
/// i·|Δ| + j is φ_j applied to coordinate i. Tuple (x_0..x_{d-1}) has index
/// Σ x_i |X|^(d-1-i).
FormulaSet power_delta(const FormulaSet& delta, std::size_t d, std::uint64_t budget = kDefaultBudget);

/// {f^{-1}(S)} on X' where f maps index i of X' to f[i] in X.
SetSystem pullback(const SetSystem& system, const std::vector<std::size_t>& f);

}  // namespace vclab
