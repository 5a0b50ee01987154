#include "csp/wsg.hpp"

#include "csp/simplex.hpp"

namespace csp {

std::size_t count_weighted_games(int n, const EnumOptions& opt) {
    ClassEnumerator eng(n, SystemKind::WeightedGame, opt);
    return eng.run([](const EnumState&) {});
}

bool is_weighted(const std::vector<std::uint32_t>& winning, int n) {
    if (n < 1 || n > kMaxItems) fail(ErrorCode::NTooLarge, "needs 1 <= n <= 16");
    MaskSet win(n);
    std::uint32_t full = full_mask(n);
    for (std::uint32_t a : winning) {
        if (a >> n) fail(ErrorCode::DimensionMismatch, "coalition outside universe");
        win.set(a);
    }
    if (win.test(0)) fail(ErrorCode::NotMonotone, "empty coalition cannot win");
    if (!win.test(full)) fail(ErrorCode::NotMonotone, "grand coalition must win");
    bool monotone = true;
    win.for_each([&](std::uint32_t a) {
        for (int i = 0; i < n && monotone; ++i)
            if (!(a & (1u << i)) && !win.test(a | (1u << i))) monotone = false;
    });
    if (!monotone) fail(ErrorCode::NotMonotone, "winning set is not superset-closed");

    // Separation system over w_1..w_n, q; integer-style strict split via
    // a'w <= q-1 on the losing side.
    LinearSystem sys;
    sys.num_vars = n + 1;
    auto row = [&](std::uint32_t a, Rational qcoef) {
        std::vector<Rational> c(n + 1, Rational(0));
        for (int i = 0; i < n; ++i)
            if (a & (1u << i)) c[i] = 1;
        c[n] = qcoef;
        return c;
    };
    {
        std::vector<Rational> c(n + 1, Rational(0));
        c[n] = 1;
        sys.add(std::move(c), Rel::Ge, 1); // q >= 1
    }
    for (std::uint32_t a = 0; a <= full; ++a) {
        if (win.test(a)) sys.add(row(a, Rational(-1)), Rel::Ge, 0);
        else sys.add(row(a, Rational(-1)), Rel::Le, -1);
    }
    return feasible(sys).status != LpStatus::Infeasible;
}

} // namespace csp
