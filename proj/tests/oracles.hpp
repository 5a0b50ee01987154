#pragma once

// Test-only oracles, kept independent of the library paths they check.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "csp/instance.hpp"
#include "csp/pattern.hpp"
#include "csp/rational.hpp"
#include "csp/realization.hpp"

namespace oracle {

using csp::Rational;

// Suffix-sum dominance straight from the definition, written against the
// component vectors rather than bitmask tricks.
inline bool dominates(std::uint32_t a, std::uint32_t b, int n) {
    std::vector<int> av(n), bv(n);
    for (int i = 0; i < n; ++i) {
        av[i] = (a >> i) & 1;
        bv[i] = (b >> i) & 1;
    }
    for (int j = 0; j < n; ++j) {
        int sa = 0, sb = 0;
        for (int i = j; i < n; ++i) {
            sa += av[i];
            sb += bv[i];
        }
        if (sa > sb) return false;
    }
    return true;
}

// Exact min sum(x) with A x = ones by enumerating candidate supports of
// independent columns; every optimal basic solution has such a support.
inline std::optional<Rational> min_unit_cover_by_vertex_enum(const std::vector<std::uint32_t>& cols,
                                                             int n) {
    std::optional<Rational> best;
    std::vector<std::size_t> pick;
    std::function<void(std::size_t)> go = [&](std::size_t from) {
        if (!pick.empty()) {
            // Solve A_S x = 1 exactly; accept unique nonnegative solutions.
            std::size_t k = pick.size();
            std::vector<std::vector<Rational>> m(n, std::vector<Rational>(k + 1, Rational(0)));
            for (int r = 0; r < n; ++r) {
                for (std::size_t c = 0; c < k; ++c)
                    if (cols[pick[c]] & (1u << r)) m[r][c] = 1;
                m[r][k] = 1;
            }
            std::size_t rank = 0;
            std::vector<int> lead(k, -1);
            for (std::size_t c = 0; c < k && rank < (std::size_t)n; ++c) {
                std::size_t piv = rank;
                while (piv < (std::size_t)n && m[piv][c] == 0) ++piv;
                if (piv == (std::size_t)n) continue;
                std::swap(m[piv], m[rank]);
                Rational d = m[rank][c];
                for (auto& v : m[rank]) v /= d;
                for (std::size_t r = 0; r < (std::size_t)n; ++r)
                    if (r != rank && m[r][c] != 0) {
                        Rational f = m[r][c];
                        for (std::size_t cc = 0; cc <= k; ++cc) m[r][cc] -= f * m[rank][cc];
                    }
                lead[c] = (int)rank;
                ++rank;
            }
            bool independent = rank == k;
            bool consistent = true;
            for (std::size_t r = rank; r < (std::size_t)n; ++r)
                if (m[r][k] != 0) consistent = false;
            if (independent && consistent) {
                Rational total = 0;
                bool nonneg = true;
                for (std::size_t c = 0; c < k; ++c) {
                    const Rational& x = m[lead[c]][k];
                    if (x < 0) nonneg = false;
                    total += x;
                }
                if (nonneg && (!best || total < *best)) best = total;
            }
        }
        if (pick.size() == (std::size_t)n) return;
        for (std::size_t j = from; j < cols.size(); ++j) {
            pick.push_back(j);
            go(j + 1);
            pick.pop_back();
        }
    };
    go(0);
    return best;
}

// All monotone winning sets with the empty coalition losing and the grand
// coalition winning (the Dedekind filter), handed to `take` as mask sets.
inline void enumerate_monotone_winning(int n, const std::function<void(const csp::MaskSet&)>& take) {
    std::uint32_t full = csp::full_mask(n);
    std::vector<std::uint32_t> order; // decreasing popcount so supersets come first
    for (std::uint32_t m = 0; m <= full; ++m) order.push_back(m);
    std::stable_sort(order.begin(), order.end(), [](std::uint32_t a, std::uint32_t b) {
        return std::popcount(a) > std::popcount(b);
    });
    csp::MaskSet win(n);
    std::function<void(std::size_t)> go = [&](std::size_t idx) {
        if (idx == order.size()) {
            take(win);
            return;
        }
        std::uint32_t a = order[idx];
        if (a == full) {
            win.set(a);
            go(idx + 1);
            win.reset(a);
            return;
        }
        if (a != 0) {
            bool can_win = true;
            for (int i = 0; i < n && can_win; ++i)
                if (!(a & (1u << i)) && !win.test(a | (1u << i))) can_win = false;
            if (can_win) {
                win.set(a);
                go(idx + 1);
                win.reset(a);
            }
        }
        go(idx + 1); // a losing is always allowed
    };
    go(0);
}

// Distinct proper-pattern sets over all integer instances with capacity at
// most l_max; used to saturate the small-n class counts.
inline std::set<std::vector<std::uint64_t>> classes_by_brute_force(int n, long long l_max) {
    std::set<std::vector<std::uint64_t>> seen;
    std::vector<long long> lengths(n);
    std::function<void(int, long long, long long)> go = [&](int idx, long long lo, long long cap) {
        if (idx == n) {
            auto cls = csp::proper_patterns(csp::make_instance(cap, lengths));
            seen.insert(cls.patterns.words());
            return;
        }
        for (long long v = lo; v <= cap; ++v) {
            lengths[idx] = v;
            go(idx + 1, v, cap);
        }
    };
    for (long long cap = 1; cap <= l_max; ++cap) go(0, 1, cap);
    return seen;
}

struct RandomInstanceGen {
    std::mt19937_64 rng;
    explicit RandomInstanceGen(std::uint64_t seed) : rng(seed) {}

    csp::Instance next(int n_min, int n_max, long long l_cap) {
        std::uniform_int_distribution<int> dn(n_min, n_max);
        std::uniform_int_distribution<long long> dl(1, l_cap);
        int n = dn(rng);
        long long cap = dl(rng);
        std::uniform_int_distribution<long long> dv(1, cap);
        std::vector<long long> lengths(n);
        for (auto& v : lengths) v = dv(rng);
        return csp::make_instance(cap, std::move(lengths));
    }
};

} // namespace oracle
