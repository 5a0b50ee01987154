#include "csp/dominance.hpp"

#include <algorithm>

namespace csp {

bool dominates(std::uint32_t a, std::uint32_t b, int n) {
    int sa = 0, sb = 0;
    for (int j = n - 1; j >= 0; --j) {
        sa += (a >> j) & 1;
        sb += (b >> j) & 1;
        if (sa > sb) return false;
    }
    return true;
}

bool dominates(const Pattern& a, const Pattern& b) {
    if (a.n != b.n) fail(ErrorCode::DimensionMismatch, "patterns have different n");
    return dominates(a.bits, b.bits, a.n);
}

DominanceTable::DominanceTable(int n) : n_(n) {
    if (n < 1 || n > kMaxItems) fail(ErrorCode::NTooLarge, "dominance table needs 1 <= n <= 16");
    std::size_t size = std::size_t(1) << n;
    below_.assign(size, MaskSet(n));
    above_.assign(size, MaskSet(n));
    for (std::uint32_t b = 0; b < size; ++b) {
        // num() is monotone under dominance, so a <= b needs a's value <= b's.
        for (std::uint32_t a = 0; a <= b; ++a) {
            if (dominates(a, b, n)) {
                below_[b].set(a);
                above_[a].set(b);
            }
        }
    }
}

DominanceTable build_table(int n) { return DominanceTable(n); }

MaskSet downward_closure(const std::vector<std::uint32_t>& s, const DominanceTable& t) {
    MaskSet out(t.n());
    for (std::uint32_t b : s) {
        if (b >= out.universe()) fail(ErrorCode::DimensionMismatch, "pattern outside table universe");
        out |= t.below(b);
    }
    return out;
}

std::vector<std::uint32_t> maximal_elements(const std::vector<std::uint32_t>& s, const DominanceTable& t) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t a : s) {
        bool top = true;
        for (std::uint32_t b : s) {
            if (a != b && t.rel(a, b) && !t.rel(b, a)) {
                top = false;
                break;
            }
        }
        if (top && std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::uint32_t> maximal_of_closed(const MaskSet& closed) {
    int n = closed.n();
    std::uint32_t full = full_mask(n);
    std::vector<std::uint32_t> out;
    closed.for_each([&](std::uint32_t a) {
        std::uint32_t free = full & ~a;
        if (free) {
            std::uint32_t lowest_free = free & (~free + 1);
            if (closed.test(a | lowest_free)) return;
        }
        for (int i = 0; i + 1 < n; ++i) {
            std::uint32_t bit = 1u << i, up = bit << 1;
            if ((a & bit) && !(a & up) && closed.test((a & ~bit) | up)) return;
        }
        out.push_back(a);
    });
    return out;
}

bool is_downward_closed(const MaskSet& s) {
    int n = s.n();
    bool ok = true;
    // Every single down-step from a member must stay inside: clearing the
    // lowest set bit, and shifting any set bit one position down.
    s.for_each([&](std::uint32_t a) {
        if (!ok || a == 0) return;
        std::uint32_t lowest = a & (~a + 1);
        if (!s.test(a & ~lowest)) {
            ok = false;
            return;
        }
        for (int i = 1; i < n; ++i) {
            std::uint32_t bit = 1u << i, down = bit >> 1;
            if ((a & bit) && !(a & down) && !s.test((a & ~bit) | down)) {
                ok = false;
                return;
            }
        }
    });
    return ok;
}

} // namespace csp
