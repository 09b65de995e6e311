#include "vclab/bitvec.hpp"

#include <bit>

#include "vclab/error.hpp"

namespace vclab {

namespace {
constexpr std::size_t word_count(std::size_t bits) { return (bits + 63) / 64; }
}  // namespace

BitVec::BitVec(std::size_t size) : size_(size), words_(word_count(size), 0) {}

BitVec BitVec::from_string(std::string_view bits) {
    BitVec v(bits.size());
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') {
            v.set(i);
        } else if (bits[i] != '0') {
            throw ParseError("bit string contains '" + std::string(1, bits[i]) + "' at position " +
                             std::to_string(i));
        }
    }
    return v;
}

BitVec BitVec::from_indices(std::size_t size, std::span<const std::size_t> indices) {
    BitVec v(size);
    for (auto i : indices) {
        if (i >= size) {
            throw RangeError("index " + std::to_string(i) + " outside width " + std::to_string(size));
        }
        v.set(i);
    }
    return v;
}

BitVec BitVec::full(std::size_t size) {
    BitVec v(size);
    for (auto& w : v.words_) w = ~std::uint64_t{0};
    v.trim();
    return v;
}

void BitVec::set(std::size_t i, bool value) noexcept {
    const std::uint64_t mask = std::uint64_t{1} << (i & 63);
    if (value) {
        words_[i >> 6] |= mask;
    } else {
        words_[i >> 6] &= ~mask;
    }
}

std::size_t BitVec::count() const noexcept {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
}

bool BitVec::any() const noexcept {
    for (auto w : words_) {
        if (w != 0) return true;
    }
    return false;
}

bool BitVec::is_subset_of(const BitVec& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & ~other.words_[i]) != 0) return false;
    }
    return true;
}

bool BitVec::intersects(const BitVec& other) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        if ((words_[i] & other.words_[i]) != 0) return true;
    }
    return false;
}

BitVec& BitVec::operator&=(const BitVec& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
    return *this;
}

BitVec& BitVec::operator|=(const BitVec& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
    return *this;
}

BitVec& BitVec::operator^=(const BitVec& other) noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    return *this;
}

BitVec BitVec::complement() const {
    BitVec v = *this;
    for (auto& w : v.words_) w = ~w;
    v.trim();
    return v;
}

std::strong_ordering operator<=>(const BitVec& a, const BitVec& b) noexcept {
    const std::size_t n = std::min(a.words_.size(), b.words_.size());
    for (std::size_t i = 0; i < n; ++i) {
        const std::uint64_t diff = a.words_[i] ^ b.words_[i];
        if (diff != 0) {
            // The lowest differing element decides; a '0' there sorts first.
            const std::uint64_t low = diff & (~diff + 1);
            return (a.words_[i] & low) ? std::strong_ordering::greater : std::strong_ordering::less;
        }
    }
    return a.size_ <=> b.size_;
}

std::vector<std::size_t> BitVec::indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for (std::size_t wi = 0; wi < words_.size(); ++wi) {
        std::uint64_t w = words_[wi];
        while (w != 0) {
            out.push_back(wi * 64 + static_cast<std::size_t>(std::countr_zero(w)));
            w &= w - 1;
        }
    }
    return out;
}

std::string BitVec::to_string() const {
    std::string s(size_, '0');
    for (std::size_t i = 0; i < size_; ++i) {
        if (test(i)) s[i] = '1';
    }
    return s;
}

std::uint64_t BitVec::extract(std::span<const std::size_t> positions) const noexcept {
    std::uint64_t key = 0;
    for (std::size_t j = 0; j < positions.size(); ++j) {
        key |= static_cast<std::uint64_t>(test(positions[j])) << j;
    }
    return key;
}

std::size_t BitVec::hash() const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ size_;
    for (auto w : words_) {
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

void BitVec::trim() noexcept {
    if (size_ % 64 != 0 && !words_.empty()) {
        words_.back() &= (std::uint64_t{1} << (size_ % 64)) - 1;
    }
}

}  // namespace vclab
