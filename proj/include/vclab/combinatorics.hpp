#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace vclab {

using u128 = unsigned __int128;

/// Exact binomial coefficient; throws OverflowError past 128 bits.
u128 binomial(std::uint64_t n, std::uint64_t k);

/// C(n,0) + ... + C(n,d). Requires d <= n.
u128 sauer_shelah_bound(std::uint64_t n, std::uint64_t d);

/// Same sum without the d <= n precondition (terms with k > n vanish).
u128 binomial_sum_at_most(std::uint64_t n, std::uint64_t d);

std::string to_string(u128 value);

/// Saturating conversion used for budget arithmetic.
std::uint64_t saturate_u64(u128 value) noexcept;

/*
 * Iterates k-subsets of {0..n-1} in colex order:
 * {0,1,2}, {0,1,3}, {0,2,3}, {1,2,3}, {0,1,4}, ...
 */
class CombinationIterator {
public:
    CombinationIterator(std::size_t n, std::size_t k);

    bool valid() const noexcept { return valid_; }
    const std::vector<std::size_t>& current() const noexcept { return comb_; }
    void next();

private:
    std::size_t n_;
    std::vector<std::size_t> comb_;
    bool valid_;
};

/// Calls f(comb) for each k-subset of {0..n-1} in colex order until f returns false.
template <typename F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
    for (CombinationIterator it(n, k); it.valid(); it.next()) {
        if (!f(it.current())) return;
    }
}

}  // namespace vclab
