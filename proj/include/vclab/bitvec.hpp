#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace vclab {

/*
 * Fixed-width bit vector over the index set {0, ..., size-1}.
 *
 * Bit i encodes membership of element i. The ordering is lexicographic on
 * the '0'/'1' string form, element 0 first, so "0110" < "1000".
 */
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t size);

    static BitVec from_string(std::string_view bits);
    static BitVec from_indices(std::size_t size, std::span<const std::size_t> indices);
    static BitVec full(std::size_t size);

    std::size_t size() const noexcept { return size_; }

    bool test(std::size_t i) const noexcept { return (words_[i >> 6] >> (i & 63)) & 1U; }
    void set(std::size_t i, bool value = true) noexcept;
    void reset(std::size_t i) noexcept { set(i, false); }

    std::size_t count() const noexcept;
    bool any() const noexcept;
    bool none() const noexcept { return !any(); }
    bool all() const noexcept { return count() == size_; }

    bool is_subset_of(const BitVec& other) const noexcept;
    bool intersects(const BitVec& other) const noexcept;

    BitVec& operator&=(const BitVec& other) noexcept;
    BitVec& operator|=(const BitVec& other) noexcept;
    BitVec& operator^=(const BitVec& other) noexcept;
    BitVec complement() const;

    friend BitVec operator&(BitVec a, const BitVec& b) noexcept { return a &= b; }
    friend BitVec operator|(BitVec a, const BitVec& b) noexcept { return a |= b; }
    friend BitVec operator^(BitVec a, const BitVec& b) noexcept { return a ^= b; }

    friend bool operator==(const BitVec& a, const BitVec& b) noexcept = default;
    friend std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) noexcept;

    std::vector<std::size_t> indices() const;
    std::string to_string() const;

    /// Packs the bits at the given positions into a word; position j of the
    /// result holds bit `positions[j]`. Requires positions.size() <= 64.
    std::uint64_t extract(std::span<const std::size_t> positions) const noexcept;

    std::span<const std::uint64_t> words() const noexcept { return words_; }
    std::size_t hash() const noexcept;

private:
    void trim() noexcept;

    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

struct BitVecHash {
    std::size_t operator()(const BitVec& v) const noexcept { return v.hash(); }
};

}  // namespace vclab
