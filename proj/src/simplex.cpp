#include "csp/simplex.hpp"

#include <sstream>

#include "csp/error.hpp"

namespace csp {

void LinearSystem::add(std::vector<Rational> coeff, Rel rel, Rational rhs) {
    if ((int)coeff.size() != num_vars) fail(ErrorCode::MalformedSystem, "row length != variable count");
    rows.push_back(Row{std::move(coeff), rel, std::move(rhs)});
}

std::string LinearSystem::dump() const {
    std::ostringstream out;
    for (const auto& r : rows) {
        for (const auto& c : r.coeff) out << rat_str(c) << ' ';
        out << (r.rel == Rel::Le ? "<=" : r.rel == Rel::Ge ? ">=" : "=") << ' ' << rat_str(r.rhs) << '\n';
    }
    return out.str();
}

bool check_solution(const LinearSystem& sys, const std::vector<Rational>& values) {
    if ((int)values.size() != sys.num_vars) return false;
    for (const auto& v : values)
        if (v < 0) return false;
    for (const auto& r : sys.rows) {
        Rational lhs = 0;
        for (int j = 0; j < sys.num_vars; ++j)
            if (r.coeff[j] != 0) lhs += r.coeff[j] * values[j];
        if (r.rel == Rel::Le && lhs > r.rhs) return false;
        if (r.rel == Rel::Ge && lhs < r.rhs) return false;
        if (r.rel == Rel::Eq && lhs != r.rhs) return false;
    }
    return true;
}

namespace {

constexpr std::size_t kPivotCap = 200000;

// Dense phase-one tableau. Columns: originals, then one slack per
// inequality row, then artificials, then the rhs cell. The objective row
// keeps reduced costs of the artificial-sum objective; its rhs cell holds
// the negated objective value.
struct Phase1 {
    std::size_t cols = 0, rhs = 0;
    std::vector<std::vector<Rational>> tab;
    std::vector<Rational> obj;
    std::vector<std::size_t> basis;
    std::vector<bool> banned; // artificials may never re-enter
    std::size_t first_art = 0;

    explicit Phase1(const LinearSystem& sys) {
        std::size_t m = sys.rows.size(), k = sys.num_vars;
        std::size_t slacks = 0, arts = 0;
        for (const auto& r : sys.rows)
            if (r.rel != Rel::Eq) ++slacks;
        // Count artificials after rhs normalization.
        for (const auto& r : sys.rows) {
            bool neg = r.rhs < 0;
            Rel rel = r.rel;
            if (neg && rel != Rel::Eq) rel = (rel == Rel::Le) ? Rel::Ge : Rel::Le;
            if (rel != Rel::Le) ++arts;
        }
        first_art = k + slacks;
        cols = k + slacks + arts;
        rhs = cols;
        tab.assign(m, std::vector<Rational>(cols + 1, Rational(0)));
        basis.assign(m, 0);
        banned.assign(cols, false);

        std::size_t slack_at = k, art_at = first_art;
        for (std::size_t i = 0; i < m; ++i) {
            const auto& r = sys.rows[i];
            bool neg = r.rhs < 0;
            Rel rel = r.rel;
            for (std::size_t j = 0; j < k; ++j) tab[i][j] = neg ? -r.coeff[j] : r.coeff[j];
            tab[i][rhs] = neg ? -r.rhs : r.rhs;
            if (neg && rel != Rel::Eq) rel = (rel == Rel::Le) ? Rel::Ge : Rel::Le;
            if (rel == Rel::Le) {
                tab[i][slack_at] = 1;
                basis[i] = slack_at++;
            } else {
                if (rel == Rel::Ge) tab[i][slack_at++] = -1;
                tab[i][art_at] = 1;
                basis[i] = art_at++;
            }
        }
        // Reduced costs of the artificial-sum objective under the start basis.
        obj.assign(cols + 1, Rational(0));
        for (std::size_t j = first_art; j < cols; ++j) obj[j] = 1;
        for (std::size_t i = 0; i < m; ++i) {
            if (basis[i] >= first_art)
                for (std::size_t j = 0; j <= cols; ++j) obj[j] -= tab[i][j];
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        auto& pr = tab[row];
        Rational inv = 1 / pr[col];
        for (auto& v : pr)
            if (v != 0) v *= inv;
        pr[col] = 1;
        for (std::size_t i = 0; i < tab.size(); ++i) {
            if (i == row || tab[i][col] == 0) continue;
            Rational f = tab[i][col];
            for (std::size_t j = 0; j <= cols; ++j)
                if (pr[j] != 0) tab[i][j] -= f * pr[j];
            tab[i][col] = 0;
        }
        if (obj[col] != 0) {
            Rational f = obj[col];
            for (std::size_t j = 0; j <= cols; ++j)
                if (pr[j] != 0) obj[j] -= f * pr[j];
            obj[col] = 0;
        }
        if (basis[row] >= first_art) banned[basis[row]] = true;
        basis[row] = col;
    }

    // Bland's rule: lowest eligible entering column, lowest basic variable
    // index on ratio ties. Terminates on the degenerate systems the
    // enumeration produces.
    bool run() {
        for (std::size_t iter = 0; iter < kPivotCap; ++iter) {
            std::size_t enter = cols;
            for (std::size_t j = 0; j < cols; ++j) {
                if (!banned[j] && obj[j] < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == cols) return true; // optimal
            std::size_t leave = tab.size();
            Rational best;
            for (std::size_t i = 0; i < tab.size(); ++i) {
                if (tab[i][enter] <= 0) continue;
                Rational ratio = tab[i][rhs] / tab[i][enter];
                if (leave == tab.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == tab.size())
                fail(ErrorCode::MalformedSystem, "phase-one objective unbounded");
            pivot(leave, enter);
        }
        fail(ErrorCode::PivotLimit, "simplex pivot cap exceeded");
    }
};

} // namespace

LpSolution feasible(const LinearSystem& sys, const std::vector<Rational>* hint) {
    for (const auto& r : sys.rows)
        if ((int)r.coeff.size() != sys.num_vars)
            fail(ErrorCode::MalformedSystem, "row length != variable count");
    if (hint && check_solution(sys, *hint)) {
        LpSolution s;
        s.status = LpStatus::Feasible;
        s.values = *hint;
        return s;
    }
    Phase1 t(sys);
    t.run();
    LpSolution s;
    if (t.obj[t.rhs] != 0) { // objective value is -obj[rhs]
        s.status = LpStatus::Infeasible;
        return s;
    }
    s.status = LpStatus::Feasible;
    s.values.assign(sys.num_vars, Rational(0));
    for (std::size_t i = 0; i < t.basis.size(); ++i)
        if (t.basis[i] < (std::size_t)sys.num_vars) s.values[t.basis[i]] = t.tab[i][t.rhs];
    return s;
}

} // namespace csp
