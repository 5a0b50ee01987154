#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "csp/error.hpp"

namespace csp {

inline constexpr int kMaxItems = 16;

// A 0/1 cutting pattern over n unit-demand items, encoded as a bitmask.
// Item i (1-based, sorted by nondecreasing length) sits at bit i-1, so the
// mask value equals num(a) = sum_i 2^(i-1) a_i.
struct Pattern {
    std::uint32_t bits = 0;
    int n = 0;

    Pattern() = default;
    Pattern(std::uint32_t b, int items) : bits(b), n(items) {
        if (items < 1 || items > kMaxItems) fail(ErrorCode::NTooLarge, "pattern size out of range");
        if (b >> items) fail(ErrorCode::DimensionMismatch, "bits above position n-1 must be zero");
    }

    int weight() const { return std::popcount(bits); }
    bool operator==(const Pattern&) const = default;
};

inline std::uint32_t num(const Pattern& a) { return a.bits; }

inline std::uint32_t full_mask(int n) { return (n >= 32) ? ~0u : ((1u << n) - 1u); }

// Set of patterns for fixed n, one bit per mask value. Used for pattern
// classes and for the implied feasible/infeasible sets of the enumeration.
class MaskSet {
  public:
    MaskSet() = default;
    explicit MaskSet(int n) : n_(n), words_((std::size_t(1) << n) / 64 + 1, 0) {}

    int n() const { return n_; }
    std::size_t universe() const { return std::size_t(1) << n_; }

    bool test(std::uint32_t m) const { return (words_[m >> 6] >> (m & 63)) & 1; }
    void set(std::uint32_t m) { words_[m >> 6] |= std::uint64_t(1) << (m & 63); }
    void reset(std::uint32_t m) { words_[m >> 6] &= ~(std::uint64_t(1) << (m & 63)); }

    MaskSet& operator|=(const MaskSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }

    // Merges o and returns how many bits were newly set.
    std::size_t or_count(const MaskSet& o) {
        std::size_t added = 0;
        for (std::size_t i = 0; i < words_.size(); ++i) {
            added += std::popcount(o.words_[i] & ~words_[i]);
            words_[i] |= o.words_[i];
        }
        return added;
    }
    MaskSet& operator&=(const MaskSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    MaskSet& subtract(const MaskSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    bool intersects(const MaskSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }

    std::size_t count() const {
        std::size_t c = 0;
        for (std::uint64_t w : words_) c += std::popcount(w);
        return c;
    }

    bool operator==(const MaskSet&) const = default;

    // Calls f(mask) for every member in increasing mask order.
    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t wi = 0; wi < words_.size(); ++wi) {
            std::uint64_t w = words_[wi];
            while (w) {
                int b = std::countr_zero(w);
                std::uint32_t m = std::uint32_t(wi * 64 + b);
                if (m < universe()) f(m);
                w &= w - 1;
            }
        }
    }

    std::vector<std::uint32_t> to_vector() const {
        std::vector<std::uint32_t> v;
        v.reserve(count());
        for_each([&](std::uint32_t m) { v.push_back(m); });
        return v;
    }

    const std::vector<std::uint64_t>& words() const { return words_; }

  private:
    int n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace csp
