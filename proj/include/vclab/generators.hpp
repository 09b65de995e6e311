#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include <boost/rational.hpp>

#include "vclab/relation.hpp"
#include "vclab/set_system.hpp"

namespace vclab {

using Rational = boost::rational<long long>;
using Point2 = std::pair<Rational, Rational>;

inline constexpr std::size_t kHypercubeCap = 10;
inline constexpr std::uint64_t kFieldCap = 101;
inline constexpr std::size_t kElekesCap = 6;

/// All subsets of {0..n-1} with at most d elements.
SetSystem subsets_at_most_d(std::size_t n, std::size_t d);

/// All k-element subsets of {0..n-1}.
SetSystem subsets_of_size(std::size_t n, std::size_t k);

/// Unions of at most k runs of consecutive points among n ordered points.
SetSystem intervals(std::size_t n_points, std::size_t k);

/// Convex subsets of an ordered n-set (at most one run), including ∅.
SetSystem convex_sets(std::size_t n_points);

/// Traces of closed half-planes on a finite point set. On a finite set open
/// and closed half-planes cut out the same family, so `closed` only records
/// intent.
SetSystem halfplanes(const std::vector<Point2>& points, bool closed = true);

/// Cosets a + dZ_n for each listed divisor d.
SetSystem cosets_zn(std::size_t n, const std::vector<std::size_t>& divisors);

/// The subgroups dZ_n for each listed divisor d.
SetSystem subgroups_zn(std::size_t n, const std::vector<std::size_t>& divisors);

std::vector<std::size_t> divisors_of(std::size_t n);

/// (a + bZ) ∩ [0, window) for 1 <= b <= max_modulus, 0 <= a < b.
SetSystem arithmetic_progressions(std::size_t window, std::size_t max_modulus);

bool is_prime(std::uint64_t q);

/// Points (x,y) of F_q^2 against non-vertical lines y = ax + b. Point (x,y)
/// has index x·q + y and line (a,b) has index a·q + b.
BiRelation pointline_fq(std::uint64_t q);

struct ElekesGrid {
    std::size_t k = 0;
    std::size_t x_count = 0;  // k
    std::size_t y_count = 0;  // 4k^2
    std::size_t slope_count = 0;      // 2k
    std::size_t intercept_count = 0;  // 2k^2
    BiRelation incidence;             // point (x,y) -> x·y_count + y, line (a,b) -> a·intercept_count + b
};

/// Grid {0..k-1} × {0..4k²-1} against lines y = ax + b, 0 <= a < 2k, 0 <= b < 2k².
ElekesGrid elekes_grid(std::size_t k);

struct Hypercube {
    std::size_t d = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges;  // u < v, differing in one bit
    SetSystem system;  // base 2^d vertices; members are edges and singletons
};

Hypercube hypercube_edges(std::size_t d, std::size_t cap = kHypercubeCap);

/// Largest number of Q_d edges induced by t vertices, by brute force.
std::size_t max_induced_edges(std::size_t d, std::size_t t, std::uint64_t budget = kDefaultBudget);

/// S_φ̂ = {{a,b} : (a,b) ∈ Φ} on base X for a square relation.
SetSystem phi_hat(const BiRelation& rel);

struct PhiHatBounds {
    std::uint64_t trace_count = 0;   // |A ∩ S_φ̂|
    std::uint64_t a0 = 0;            // elements of A with a neighbour somewhere but none in A
    std::uint64_t a_split = 0;       // elements of A with a neighbour outside A
    std::uint64_t induced_edges = 0; // ordered pairs (a,b) ∈ Φ with a,b ∈ A, loops included
    bool empty_trace = false;        // some edge avoids A entirely

    bool lower_holds() const { return 2 * a0 + induced_edges <= 2 * trace_count; }
    bool upper_holds() const { return trace_count <= 1 + a0 + induced_edges; }
    bool corrected_upper_holds() const { return trace_count <= 1 + a_split + induced_edges; }
};

PhiHatBounds phi_hat_bounds(const BiRelation& rel, const BitVec& A);

struct KrsWitness {
    std::vector<std::size_t> left;   // r objects
    std::vector<std::size_t> right;  // s parameters
};

/// Searches for r distinct objects and s distinct parameters that are all related.
std::optional<KrsWitness> detect_krs(const BiRelation& rel, std::size_t r, std::size_t s,
                                     std::uint64_t budget = kDefaultBudget);

enum class Family {
    subsets_at_most_d,
    intervals_k,
    convex,
    halfspaces,
    cosets_zn,
    arithmetic_progressions,
    pointline_fq,
    elekes_grid,
    hypercube_edges,
    phi_hat
};

Family family_from_string(const std::string& name);
std::string to_string(Family family);

struct FamilySpec {
    Family family = Family::subsets_at_most_d;
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t k = 1;
    std::uint64_t q = 0;
    std::size_t window = 0;
    std::size_t max_modulus = 0;
    std::vector<std::size_t> divisors;
    std::vector<Point2> points;
    std::optional<BiRelation> relation;  // input for phi_hat
};

std::variant<SetSystem, BiRelation> generate(const FamilySpec& spec);

}  // namespace vclab
