#include "csp/realization.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "csp/rational.hpp"

namespace csp {

PatternClass class_from_maximal(int n, std::vector<std::uint32_t> masks) {
    if (n < 1 || n > kMaxItems) fail(ErrorCode::NTooLarge, "class needs 1 <= n <= 16");
    PatternClass c;
    c.n = n;
    c.patterns = MaskSet(n);
    for (std::uint32_t m : masks) {
        if (m >> n) fail(ErrorCode::DimensionMismatch, "mask outside universe");
        for (std::uint32_t a = 0; a <= m; ++a) // num() is monotone under dominance
            if (dominates(a, m, n)) c.patterns.set(a);
    }
    c.maximal = maximal_of_closed(c.patterns);
    return c;
}

PatternClass proper_patterns(const Instance& e) {
    PatternClass c;
    c.n = e.n;
    c.patterns = MaskSet(e.n);
    std::vector<long long> sum(std::size_t(1) << e.n, 0);
    for (std::uint32_t m = 0; m < (1u << e.n); ++m) {
        if (m) {
            std::uint32_t low = m & (~m + 1);
            sum[m] = sum[m & (m - 1)] + e.l[std::countr_zero(low)];
        }
        if (sum[m] <= e.L) c.patterns.set(m);
    }
    c.maximal = maximal_of_closed(c.patterns);
    return c;
}

LinearSystem build_length_system(const std::vector<std::uint32_t>& le,
                                 const std::vector<std::uint32_t>& gt, int n) {
    LinearSystem sys;
    sys.num_vars = n + 1; // l_1..l_n, then L
    auto row = [&](auto fill) {
        std::vector<Rational> c(n + 1, Rational(0));
        fill(c);
        return c;
    };
    sys.add(row([&](auto& c) { c[0] = 1; }), Rel::Ge, 1); // 1 <= l_1
    for (int i = 0; i + 1 < n; ++i)
        sys.add(row([&](auto& c) { c[i + 1] = 1; c[i] = -1; }), Rel::Ge, 0);
    sys.add(row([&](auto& c) { c[n] = 1; c[n - 1] = -1; }), Rel::Ge, 0); // l_n <= L
    for (std::uint32_t a : le)
        sys.add(row([&](auto& c) {
            for (int i = 0; i < n; ++i)
                if (a & (1u << i)) c[i] = 1;
            c[n] = -1;
        }), Rel::Le, 0);
    for (std::uint32_t a : gt)
        sys.add(row([&](auto& c) {
            for (int i = 0; i < n; ++i)
                if (a & (1u << i)) c[i] = 1;
            c[n] = -1;
        }), Rel::Ge, 1);
    return sys;
}

bool partially_realizable(const std::vector<std::uint32_t>& p_le,
                          const std::vector<std::uint32_t>& p_gt, int n) {
    for (std::uint32_t a : p_le)
        for (std::uint32_t b : p_gt)
            if (a == b) fail(ErrorCode::OverlappingSets, "p_le and p_gt intersect");
    return feasible(build_length_system(p_le, p_gt, n)).status != LpStatus::Infeasible;
}

namespace {

// Minimal members of an upward-closed set: none of the single down-steps
// (clear the lowest set bit, shift a set bit one position down) stays inside.
std::vector<std::uint32_t> minimal_of_upclosed(const MaskSet& up, int n) {
    std::vector<std::uint32_t> out;
    up.for_each([&](std::uint32_t a) {
        if (a) {
            std::uint32_t lowest = a & (~a + 1);
            if (up.test(a & ~lowest)) return;
            for (int i = 1; i < n; ++i) {
                std::uint32_t bit = 1u << i, down = bit >> 1;
                if ((a & bit) && !(a & down) && up.test((a & ~bit) | down)) return;
            }
        }
        out.push_back(a);
    });
    return out;
}

} // namespace

RealizeOutcome realize(const PatternClass& c) {
    int n = c.n;
    if (!is_downward_closed(c.patterns))
        fail(ErrorCode::NotDownwardClosed, "pattern set is not dominance-closed");
    for (int i = 0; i < n; ++i)
        if (!c.patterns.test(1u << i))
            fail(ErrorCode::NotDownwardClosed, "pattern set must contain all singletons");

    MaskSet complement(n);
    for (std::uint32_t m = 0; m < (1u << n); ++m)
        if (!c.patterns.test(m)) complement.set(m);

    auto le = maximal_of_closed(c.patterns);
    auto gt = minimal_of_upclosed(complement, n);
    auto sol = feasible(build_length_system(le, gt, n));
    RealizeOutcome out;
    if (sol.status == LpStatus::Infeasible) return out;

    // Scale the rational witness to integers by the lcm of denominators.
    Integer scale = 1;
    for (const auto& v : sol.values) scale = lcm(scale, rat_den(v));
    std::vector<long long> lengths(n);
    for (int i = 0; i < n; ++i) {
        Integer v = rat_num(sol.values[i]) * (scale / rat_den(sol.values[i]));
        if (v > std::numeric_limits<long long>::max())
            fail(ErrorCode::NTooLarge, "scaled witness exceeds integer range");
        lengths[i] = (long long)v;
    }
    Integer big_l = rat_num(sol.values[n]) * (scale / rat_den(sol.values[n]));
    if (big_l > std::numeric_limits<long long>::max())
        fail(ErrorCode::NTooLarge, "scaled witness exceeds integer range");

    out.realizable = true;
    out.instance = make_instance((long long)big_l, lengths);
    if (!(proper_patterns(out.instance).patterns == c.patterns))
        fail(ErrorCode::ConsistencyViolation, "realized instance does not round-trip");
    return out;
}

std::string format_class_line(const PatternClass& c) {
    std::ostringstream out;
    out << c.n << ' ' << c.maximal.size();
    for (auto it = c.maximal.rbegin(); it != c.maximal.rend(); ++it) out << ' ' << *it;
    return out.str();
}

PatternClass parse_class_line(const std::string& line) {
    std::istringstream ss(line);
    int n = 0;
    std::size_t k = 0;
    if (!(ss >> n >> k)) fail(ErrorCode::ParseError, "expected \"n k m_1 ... m_k\"");
    if (n < 1 || n > kMaxItems) fail(ErrorCode::ParseError, "class n out of range");
    std::vector<std::uint32_t> masks;
    for (std::size_t i = 0; i < k; ++i) {
        long long m = -1;
        if (!(ss >> m) || m < 0 || (m >> n) != 0) fail(ErrorCode::ParseError, "bad mask in class line");
        masks.push_back((std::uint32_t)m);
    }
    std::string rest;
    if (ss >> rest) fail(ErrorCode::ParseError, "trailing tokens in class line");
    return class_from_maximal(n, std::move(masks));
}

} // namespace csp
