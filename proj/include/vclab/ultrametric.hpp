#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "vclab/set_system.hpp"

namespace vclab {

/*
 * Leaves of a p-ary tree of depth D, or a designated subset of them. A leaf
 * is a digit string of length D, stored as its base-p value. The valuation
 * v(a,b) is the length of the longest common prefix; v(a,a) stands for
 * infinity and is reported as D + 1.
 */
class UltrametricSpace {
public:
    UltrametricSpace(unsigned p, unsigned depth);
    UltrametricSpace(unsigned p, unsigned depth, std::vector<std::uint64_t> elements);

    static UltrametricSpace from_strings(unsigned p, unsigned depth, const std::vector<std::string>& elements);

    unsigned p() const noexcept { return p_; }
    unsigned depth() const noexcept { return depth_; }
    bool is_full() const noexcept { return full_; }
    const std::vector<std::uint64_t>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }

    /// Position of a leaf in elements(); throws RangeError when absent.
    std::size_t index_of(std::uint64_t leaf) const;
    bool contains(std::uint64_t leaf) const;

    unsigned digit(std::uint64_t leaf, unsigned level) const;
    std::uint64_t prefix(std::uint64_t leaf, unsigned length) const;
    unsigned valuation(std::uint64_t a, std::uint64_t b) const;

    std::string to_string(std::uint64_t leaf) const;
    std::uint64_t parse(const std::string& digits) const;

private:
    unsigned p_;
    unsigned depth_;
    bool full_ = true;
    std::uint64_t leaf_count_ = 1;
    std::vector<std::uint64_t> elements_;  // sorted
};

/// Closed ball B_ρ(c) = {x : v(x,c) >= ρ}.
struct Ball {
    std::uint64_t center = 0;
    unsigned radius = 0;

    friend bool operator==(const Ball&, const Ball&) = default;
    friend auto operator<=>(const Ball&, const Ball&) = default;
};

/// Same ball with its center replaced by the least element of the space inside it.
Ball canonical(const UltrametricSpace& space, const Ball& ball);
bool same_ball(const UltrametricSpace& space, const Ball& a, const Ball& b);

std::vector<std::uint64_t> ball_members(const UltrametricSpace& space, const Ball& ball);

/// Distance in the tree of balls ordered by inclusion.
unsigned ball_graph_distance(const UltrametricSpace& space, const Ball& a, const Ball& b);

struct BallCount {
    std::uint64_t count = 0;
    bool boundary = false;  // the d-neighbourhood would leave radii 0..D
};

/// Balls within graph distance d of `ball`, counted in the truncated tree of
/// prefixes of length 0..D.
BallCount count_balls_within(const UltrametricSpace& space, const Ball& ball, unsigned d);

/// Σ_{i<=d} (p+1)^i = ((p+1)^(d+1) - 1) / p.
std::uint64_t beta_d(unsigned p, unsigned d);

/// 1 + Σ_{s=1..d} (p+1) p^(s-1): the size of a radius-d ball in the (p+1)-regular tree.
std::uint64_t regular_tree_ball_count(unsigned p, unsigned d);

/// Distinct balls B_{v(a,b)}(a) for a != b in A, canonical and sorted.
std::vector<Ball> special_balls(const UltrametricSpace& space, const std::vector<std::uint64_t>& A);

/// Every distinct ball meeting the space, canonical and sorted.
std::vector<Ball> all_balls(const UltrametricSpace& space);

/// Members are ball member sets over element positions of the space.
SetSystem ball_family_system(const UltrametricSpace& space, const std::vector<Ball>& balls);

}  // namespace vclab
