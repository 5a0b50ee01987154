#include "csp/ilp_export.hpp"

#include <ostream>

#include "csp/dominance.hpp"
#include "csp/error.hpp"
#include "csp/pattern.hpp"

namespace csp {

Integer big_m_value(int n) {
    // 4n ((n+1)/4)^((n+1)/2) = sqrt(16 n^2 (n+1)^(n+1) / 4^(n+1)), rounded up.
    Integer e = n + 1;
    Integer p = 16 * Integer(n) * Integer(n);
    for (int i = 0; i < n + 1; ++i) p *= e;
    Integer q = Integer(1) << (2 * (n + 1));
    Integer t = p / q;
    Integer m = sqrt(t);
    while (m * m * q < p) ++m;
    return m;
}

namespace {

void write_sum_of_items(std::ostream& out, std::uint32_t a) {
    for (int i = 0; i < 32; ++i)
        if (a & (1u << i)) out << " + l" << (i + 1);
}

} // namespace

void emit_direct_model(int n, int k, std::ostream& out) {
    if (n < 2 || n > 12) fail(ErrorCode::NTooLarge, "model emission supports 2 <= n <= 12");
    if (k < 2 || k > n) fail(ErrorCode::KOutOfRange, "need 2 <= k <= n");
    const std::uint32_t full = full_mask(n);
    const Integer M = big_m_value(n);

    auto yname = [&](int layer, std::uint32_t a) {
        if (layer <= 1) return std::string("y_") + std::to_string(a);
        return "yL" + std::to_string(layer) + "_" + std::to_string(a);
    };

    out << "\\ pattern-class search model: n=" << n << " k=" << k << " M=" << M << "\n";
    out << "Maximize\n obj: " << k;
    for (std::uint32_t a = 0; a <= full; ++a) out << " - x_" << a;
    out << "\nSubject To\n";

    out << " fix_0: y_0 = 1\n";
    for (int i = 0; i < n; ++i)
        out << " fix_e" << (i + 1) << ": y_" << (1u << i) << " = 1\n";

    for (std::uint32_t b = 0; b <= full; ++b)
        for (std::uint32_t a = 0; a <= b; ++a)
            if (a != b && dominates(a, b, n))
                out << " mono_" << a << "_" << b << ": y_" << a << " - y_" << b << " >= 0\n";

    for (std::uint32_t a = 0; a <= full; ++a) {
        out << " cap_" << a << ": " << M << " y_" << a;
        write_sum_of_items(out, a);
        out << " - L <= " << M << "\n";
        out << " rev_" << a << ": " << M << " y_" << a;
        write_sum_of_items(out, a);
        out << " - L >= 1\n";
    }

    for (int i = 1; i < n; ++i) out << " ord_" << i << ": l" << i << " - l" << (i + 1) << " <= 0\n";
    out << " ord_L: l" << n << " - L <= 0\n";

    for (int i = 0; i < n; ++i) {
        out << " cover_" << (i + 1) << ":";
        bool first = true;
        for (std::uint32_t a = 0; a <= full; ++a)
            if (a & (1u << i)) {
                out << (first ? " x_" : " + x_") << a;
                first = false;
            }
        out << " = 1\n";
    }
    for (std::uint32_t a = 0; a <= full; ++a)
        out << " link_" << a << ": x_" << a << " - y_" << a << " <= 0\n";

    // Layer i marks patterns coverable by at most i feasible patterns; the
    // full pattern must not be coverable by k-1 of them.
    for (int i = 2; i < k; ++i) {
        for (std::uint32_t a = 0; a <= full; ++a) {
            out << " grow_" << i << "_" << a << ": " << yname(i, a) << " - " << yname(i - 1, a)
                << " >= 0\n";
            for (std::uint32_t u = a;; u = (u - 1) & a) {
                std::uint32_t v = a ^ u;
                out << " pair_" << i << "_" << a << "_" << u << ": " << yname(i, a) << " - "
                    << yname(i - 1, u) << " - " << yname(1, v) << " >= -1\n";
                if (u == 0) break;
            }
        }
    }
    out << " top: " << yname(k - 1, full) << " = 0\n";

    out << "Bounds\n";
    for (int i = 1; i <= n; ++i) out << " l" << i << " >= 1\n";
    out << " L >= 1\n";

    out << "Generals\n";
    for (int i = 1; i <= n; ++i) out << " l" << i << "\n";
    out << " L\n";

    out << "Binaries\n";
    for (std::uint32_t a = 0; a <= full; ++a) out << " y_" << a << "\n";
    for (int i = 2; i < k; ++i)
        for (std::uint32_t a = 0; a <= full; ++a) out << " " << yname(i, a) << "\n";
    out << "End\n";
}

} // namespace csp
