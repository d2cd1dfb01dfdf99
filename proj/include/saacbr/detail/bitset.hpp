#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace saacbr::detail {

// Fixed-size bitset with word-level intersection tests, used by the
// framework-mining hot path (minimality scans over candidate interposers).
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    std::size_t size() const { return bits_; }

    // true iff (a & b & c) is non-empty
    static bool intersects(const Bitset& a, const Bitset& b, const Bitset& c) {
        const std::size_t n = a.words_.size();
        for (std::size_t w = 0; w < n; ++w) {
            if (a.words_[w] & b.words_[w] & c.words_[w]) return true;
        }
        return false;
    }

private:
    std::size_t bits_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace saacbr::detail
