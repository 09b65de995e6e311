#include "vclab/ultrametric.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "vclab/error.hpp"

namespace vclab {

namespace {

constexpr char kDigits[] = "0123456789abcdefghijklmnopqrstuvwxyz";

std::uint64_t checked_power(unsigned p, unsigned e) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < e; ++i) {
        if (r > (std::uint64_t{1} << 62) / p) throw OverflowError("p^depth exceeds 62 bits");
        r *= p;
    }
    return r;
}

}  // namespace

UltrametricSpace::UltrametricSpace(unsigned p, unsigned depth) : p_(p), depth_(depth) {
    if (p < 2 || p > 36) throw RangeError("branching p must lie in 2..36");
    if (depth < 1) throw RangeError("depth must be at least 1");
    leaf_count_ = checked_power(p, depth);
    if (leaf_count_ > (std::uint64_t{1} << 24)) throw BudgetExceeded("full leaf set above 2^24 elements");
    elements_.resize(leaf_count_);
    for (std::uint64_t i = 0; i < leaf_count_; ++i) elements_[i] = i;
}

UltrametricSpace::UltrametricSpace(unsigned p, unsigned depth, std::vector<std::uint64_t> elements)
    : p_(p), depth_(depth), full_(false), elements_(std::move(elements)) {
    if (p < 2 || p > 36) throw RangeError("branching p must lie in 2..36");
    if (depth < 1) throw RangeError("depth must be at least 1");
    leaf_count_ = checked_power(p, depth);
    std::sort(elements_.begin(), elements_.end());
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
    for (auto e : elements_) {
        if (e >= leaf_count_) throw RangeError("leaf " + std::to_string(e) + " outside the tree");
    }
    full_ = elements_.size() == leaf_count_;
}

UltrametricSpace UltrametricSpace::from_strings(unsigned p, unsigned depth, const std::vector<std::string>& elements) {
    const UltrametricSpace shape(p, depth, {});
    std::vector<std::uint64_t> leaves;
    for (const auto& s : elements) leaves.push_back(shape.parse(s));
    return UltrametricSpace(p, depth, std::move(leaves));
}

std::size_t UltrametricSpace::index_of(std::uint64_t leaf) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), leaf);
    if (it == elements_.end() || *it != leaf) throw RangeError("leaf " + to_string(leaf) + " not in space");
    return static_cast<std::size_t>(it - elements_.begin());
}

bool UltrametricSpace::contains(std::uint64_t leaf) const {
    return std::binary_search(elements_.begin(), elements_.end(), leaf);
}

unsigned UltrametricSpace::digit(std::uint64_t leaf, unsigned level) const {
    for (unsigned i = level + 1; i < depth_; ++i) leaf /= p_;
    return static_cast<unsigned>(leaf % p_);
}

std::uint64_t UltrametricSpace::prefix(std::uint64_t leaf, unsigned length) const {
    for (unsigned i = length; i < depth_; ++i) leaf /= p_;
    return leaf;
}

unsigned UltrametricSpace::valuation(std::uint64_t a, std::uint64_t b) const {
    if (a == b) return depth_ + 1;
    unsigned common = depth_;
    while (a != b) {
        a /= p_;
        b /= p_;
        --common;
    }
    return common;
}

std::string UltrametricSpace::to_string(std::uint64_t leaf) const {
    std::string s(depth_, '0');
    for (unsigned i = depth_; i-- > 0;) {
        s[i] = kDigits[leaf % p_];
        leaf /= p_;
    }
    return s;
}

std::uint64_t UltrametricSpace::parse(const std::string& digits) const {
    if (digits.size() != depth_) {
        throw InputShapeError("digit string '" + digits + "' has length " + std::to_string(digits.size()) +
                              ", expected " + std::to_string(depth_));
    }
    std::uint64_t v = 0;
    for (char c : digits) {
        const char* pos = std::find(kDigits, kDigits + p_, c);
        if (pos == kDigits + p_) throw ParseError("digit '" + std::string(1, c) + "' invalid for p=" + std::to_string(p_));
        v = v * p_ + static_cast<std::uint64_t>(pos - kDigits);
    }
    return v;
}

namespace {

void check_ball(const UltrametricSpace& space, const Ball& ball) {
    if (ball.radius > space.depth()) {
        throw RangeError("radius " + std::to_string(ball.radius) + " exceeds depth " + std::to_string(space.depth()));
    }
}

}  // namespace

std::vector<std::uint64_t> ball_members(const UltrametricSpace& space, const Ball& ball) {
    check_ball(space, ball);
    std::vector<std::uint64_t> out;
    const std::uint64_t want = space.prefix(ball.center, ball.radius);
    for (auto e : space.elements()) {
        if (space.prefix(e, ball.radius) == want) out.push_back(e);
    }
    return out;
}

Ball canonical(const UltrametricSpace& space, const Ball& ball) {
    check_ball(space, ball);
    const auto members = ball_members(space, ball);
    if (members.empty()) {
        // Center outside a designated subset and no element below it: keep the
        // least leaf of the cylinder.
        std::uint64_t least = space.prefix(ball.center, ball.radius);
        for (unsigned i = ball.radius; i < space.depth(); ++i) least *= space.p();
        return Ball{least, ball.radius};
    }
    return Ball{members.front(), ball.radius};
}

bool same_ball(const UltrametricSpace& space, const Ball& a, const Ball& b) {
    return a.radius == b.radius && space.valuation(a.center, b.center) >= a.radius;
}

unsigned ball_graph_distance(const UltrametricSpace& space, const Ball& a, const Ball& b) {
    check_ball(space, a);
    check_ball(space, b);
    const unsigned meet = std::min({a.radius, b.radius, space.valuation(a.center, b.center)});
    return (a.radius - meet) + (b.radius - meet);
}

BallCount count_balls_within(const UltrametricSpace& space, const Ball& ball, unsigned d) {
    check_ball(space, ball);
    BallCount out;
    out.boundary = ball.radius < d || ball.radius + d > space.depth();
    // Nodes are (level, prefix); breadth-first search over parent/child edges.
    std::set<std::pair<unsigned, std::uint64_t>> seen;
    std::deque<std::pair<std::pair<unsigned, std::uint64_t>, unsigned>> queue;
    const std::pair<unsigned, std::uint64_t> start{ball.radius, space.prefix(ball.center, ball.radius)};
    seen.insert(start);
    queue.push_back({start, 0});
    while (!queue.empty()) {
        auto [node, dist] = queue.front();
        queue.pop_front();
        if (dist == d) continue;
        auto [level, pre] = node;
        std::vector<std::pair<unsigned, std::uint64_t>> next;
        if (level > 0) next.emplace_back(level - 1, pre / space.p());
        if (level < space.depth()) {
            for (unsigned c = 0; c < space.p(); ++c) next.emplace_back(level + 1, pre * space.p() + c);
        }
        for (const auto& nb : next) {
            if (seen.insert(nb).second) queue.push_back({nb, dist + 1});
        }
    }
    out.count = seen.size();
    return out;
}

std::uint64_t beta_d(unsigned p, unsigned d) {
    std::uint64_t total = 0;
    std::uint64_t term = 1;
    for (unsigned i = 0; i <= d; ++i) {
        total += term;
        term *= p + 1;
    }
    return total;
}

std::uint64_t regular_tree_ball_count(unsigned p, unsigned d) {
    std::uint64_t total = 1;
    std::uint64_t shell = p + 1;
    for (unsigned s = 1; s <= d; ++s) {
        total += shell;
        shell *= p;
    }
    return total;
}

std::vector<Ball> special_balls(const UltrametricSpace& space, const std::vector<std::uint64_t>& A) {
    std::vector<Ball> out;
    for (auto a : A) {
        for (auto b : A) {
            if (a == b) continue;
            out.push_back(canonical(space, Ball{a, space.valuation(a, b)}));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Ball> all_balls(const UltrametricSpace& space) {
    std::vector<Ball> out;
    for (unsigned r = 0; r <= space.depth(); ++r) {
        std::uint64_t last_prefix = ~std::uint64_t{0};
        for (auto e : space.elements()) {
            const std::uint64_t pre = space.prefix(e, r);
            if (pre != last_prefix) {
                out.push_back(Ball{e, r});
                last_prefix = pre;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

SetSystem ball_family_system(const UltrametricSpace& space, const std::vector<Ball>& balls) {
    std::vector<BitVec> members;
    members.reserve(balls.size());
    for (const auto& ball : balls) {
        BitVec s(space.size());
        for (auto e : ball_members(space, ball)) s.set(space.index_of(e));
        members.push_back(std::move(s));
    }
    return SetSystem(space.size(), std::move(members));
}

}  // namespace vclab
