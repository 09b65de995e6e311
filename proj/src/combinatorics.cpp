#include "vclab/combinatorics.hpp"

#include <algorithm>
#include <limits>

#include "vclab/error.hpp"

namespace vclab {

namespace {

constexpr u128 kU128Max = ~u128{0};

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

u128 checked_add(u128 a, u128 b) {
    if (a > kU128Max - b) throw OverflowError("128-bit overflow in binomial sum");
    return a + b;
}

}  // namespace

u128 binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    u128 result = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        // result * (n-k+i) / i, dividing out common factors first so the
        // intermediate product stays within range whenever the result does.
        u128 num = n - k + i;
        u128 den = i;
        u128 g = gcd128(result, den);
        u128 r = result / g;
        den /= g;
        num /= den;
        if (num != 0 && r > kU128Max / num) {
            throw OverflowError("C(" + std::to_string(n) + "," + std::to_string(k) + ") exceeds 128 bits");
        }
        result = r * num;
    }
    return result;
}

u128 sauer_shelah_bound(std::uint64_t n, std::uint64_t d) {
    if (d > n) {
        throw RangeError("sauer_shelah_bound requires d <= n (got n=" + std::to_string(n) +
                         ", d=" + std::to_string(d) + ")");
    }
    return binomial_sum_at_most(n, d);
}

u128 binomial_sum_at_most(std::uint64_t n, std::uint64_t d) {
    u128 total = 0;
    for (std::uint64_t k = 0; k <= std::min(n, d); ++k) total = checked_add(total, binomial(n, k));
    return total;
}

std::string to_string(u128 value) {
    if (value == 0) return "0";
    std::string s;
    while (value != 0) {
        s.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
        value /= 10;
    }
    std::reverse(s.begin(), s.end());
    return s;
}

std::uint64_t saturate_u64(u128 value) noexcept {
    constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
    return value > cap ? cap : static_cast<std::uint64_t>(value);
}

CombinationIterator::CombinationIterator(std::size_t n, std::size_t k)
    : n_(n), comb_(k), valid_(k <= n) {
    for (std::size_t i = 0; i < k; ++i) comb_[i] = i;
}

void CombinationIterator::next() {
    const std::size_t k = comb_.size();
    // Colex successor: bump the first entry that has room, reset those below it.
    std::size_t i = 0;
    while (i < k && comb_[i] + 1 == (i + 1 < k ? comb_[i + 1] : n_)) ++i;
    if (i == k) {
        valid_ = false;
        return;
    }
    ++comb_[i];
    for (std::size_t j = 0; j < i; ++j) comb_[j] = j;
}

}  // namespace vclab
