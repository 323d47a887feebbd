#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace coblab {

// Bit-packed F2 vector, 64-bit words. The workhorse behind cochains,
// coboundary rows and the exhaustive sweeps.
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    std::size_t size() const { return size_; }
    std::size_t word_count() const { return words_.size(); }
    std::uint64_t word(std::size_t w) const { return words_[w]; }
    std::uint64_t* data() { return words_.data(); }
    const std::uint64_t* data() const { return words_.data(); }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }
    void set(std::size_t i, bool v) {
        const std::uint64_t m = 1ULL << (i & 63);
        if (v) words_[i >> 6] |= m; else words_[i >> 6] &= ~m;
    }
    void flip(std::size_t i) { words_[i >> 6] ^= 1ULL << (i & 63); }
    void clear() { for (auto& w : words_) w = 0; }

    bool any() const {
        for (auto w : words_) if (w) return true;
        return false;
    }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }

    void xor_in(const BitVec& other) {
        if (other.size_ != size_) throw std::invalid_argument("BitVec: size mismatch");
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= other.words_[i];
    }

    friend bool operator==(const BitVec& a, const BitVec& b) {
        return a.size_ == b.size_ && a.words_ == b.words_;
    }

    // Little-endian nibble order: hex digit 0 covers bits 0..3.
    std::string to_hex() const {
        static const char* digits = "0123456789abcdef";
        std::string s((size_ + 3) / 4, '0');
        for (std::size_t i = 0; i < s.size(); ++i) {
            const std::size_t w = (i * 4) >> 6;
            const unsigned nib = (words_[w] >> ((i * 4) & 63)) & 0xf;
            s[i] = digits[nib];
        }
        return s;
    }

    static BitVec from_hex(const std::string& s, std::size_t n) {
        BitVec v(n);
        for (std::size_t i = 0; i < s.size() && i * 4 < n; ++i) {
            const char c = s[i];
            unsigned nib;
            if (c >= '0' && c <= '9') nib = c - '0';
            else if (c >= 'a' && c <= 'f') nib = 10 + (c - 'a');
            else if (c >= 'A' && c <= 'F') nib = 10 + (c - 'A');
            else throw std::invalid_argument("BitVec: bad hex digit");
            v.words_[(i * 4) >> 6] |= static_cast<std::uint64_t>(nib) << ((i * 4) & 63);
        }
        return v;
    }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace coblab
