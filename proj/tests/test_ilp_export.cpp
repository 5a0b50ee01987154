#include <doctest.h>

#include <map>
#include <set>
#include <sstream>

#include "csp/enumeration.hpp"
#include "csp/metrics.hpp"
#include "csp/ilp_export.hpp"
#include "csp/simplex.hpp"

using namespace csp;

namespace {

// Minimal reader for the emitted model subset: rows of "name: terms rel rhs"
// with integer coefficients, plus Bounds/Generals/Binaries sections.
struct ParsedModel {
    struct Row {
        std::map<std::string, long long> terms;
        Rel rel = Rel::Eq;
        long long rhs = 0;
    };
    std::vector<Row> rows;
    std::map<std::string, long long> lower; // explicit lower bounds
    std::set<std::string> vars;

    void note_var(const std::string& v) { vars.insert(v); }
};

ParsedModel parse_model(const std::string& text) {
    ParsedModel m;
    std::istringstream in(text);
    std::string line;
    enum { None, Obj, Rows, Bounds, Other } sec = None;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '\\') continue;
        if (line == "Maximize") { sec = Obj; continue; }
        if (line == "Subject To") { sec = Rows; continue; }
        if (line == "Bounds") { sec = Bounds; continue; }
        if (line == "Generals" || line == "Binaries" || line == "End") { sec = Other; continue; }
        std::istringstream ls(line);
        if (sec == Rows) {
            std::string tok;
            REQUIRE(static_cast<bool>(ls >> tok)); // "name:"
            ParsedModel::Row row;
            long long sign = 1, coef = 1;
            bool have_coef = false;
            while (ls >> tok) {
                if (tok == "+") { sign = 1; have_coef = false; coef = 1; continue; }
                if (tok == "-") { sign = -1; have_coef = false; coef = 1; continue; }
                if (tok == "<=" || tok == ">=" || tok == "=") {
                    row.rel = tok == "<=" ? Rel::Le : tok == ">=" ? Rel::Ge : Rel::Eq;
                    REQUIRE(static_cast<bool>(ls >> row.rhs));
                    break;
                }
                if (std::isdigit((unsigned char)tok[0])) {
                    coef = std::stoll(tok);
                    have_coef = true;
                    continue;
                }
                row.terms[tok] += sign * (have_coef ? coef : 1);
                m.note_var(tok);
                sign = 1;
                coef = 1;
                have_coef = false;
            }
            m.rows.push_back(std::move(row));
        } else if (sec == Bounds) {
            std::string v, rel;
            long long b;
            REQUIRE(static_cast<bool>(ls >> v >> rel >> b));
            REQUIRE(rel == ">=");
            m.lower[v] = b;
            m.note_var(v);
        } else if (sec == Obj) {
            std::string tok;
            while (ls >> tok)
                if (!std::isdigit((unsigned char)tok[0]) && tok != "+" && tok != "-" &&
                    tok.find(':') == std::string::npos)
                    m.note_var(tok);
        }
    }
    return m;
}

std::string emit(int n, int k) {
    std::ostringstream out;
    emit_direct_model(n, k, out);
    return out.str();
}

} // namespace

TEST_CASE("big-M is the exact ceiling") {
    CHECK(big_m_value(3) == 12); // 4*3*(4/4)^2, integral already
    CHECK(big_m_value(2) == 6);  // ceil(8 * (3/4)^(3/2)) = ceil(5.196...)
    CHECK(big_m_value(5) == 68); // 20 * (3/2)^3 = 67.5 -> 68
    // n=4: 16 * (5/4)^(5/2) = 16 * sqrt(3125/1024); 3125/1024 in [3.05, 3.06]
    Integer m4 = big_m_value(4);
    CHECK(m4 == 28); // 16*sqrt(3.0517...) = 27.95...
    // monotone growth
    Integer prev = 0;
    for (int n = 2; n <= 12; ++n) {
        Integer m = big_m_value(n);
        CHECK(m > prev);
        prev = m;
    }
}

TEST_CASE("emission is deterministic and census matches") {
    auto a = emit(3, 2), b = emit(3, 2);
    CHECK(a == b);
    auto model = parse_model(a);
    int y = 0, x = 0, l = 0, big = 0, layered = 0;
    for (const auto& v : model.vars) {
        if (v.rfind("yL", 0) == 0) ++layered;
        else if (v[0] == 'y') ++y;
        else if (v[0] == 'x') ++x;
        else if (v[0] == 'l') ++l;
        else if (v == "L") ++big;
    }
    CHECK(y == 8);
    CHECK(x == 8);
    CHECK(l == 3);
    CHECK(big == 1);
    CHECK(layered == 0);
}

TEST_CASE("k = 2 pins the full pattern to zero") {
    auto model = parse_model(emit(2, 2));
    bool found = false;
    for (const auto& row : model.rows)
        if (row.rel == Rel::Eq && row.rhs == 0 && row.terms.size() == 1 &&
            row.terms.count("y_3"))
            found = true;
    CHECK(found);
}

TEST_CASE("k = 3 adds one layer with pair rows") {
    auto text = emit(3, 3);
    auto model = parse_model(text);
    CHECK(model.vars.count("yL2_7"));
    // pair row for a=7 = u|v with u=3, v=4: yL2_7 - yL2... - y_4 >= -1
    bool pair_row = false;
    for (const auto& row : model.rows) {
        if (row.rel != Rel::Ge || row.rhs != -1) continue;
        auto it = row.terms.find("yL2_7");
        if (it == row.terms.end() || it->second != 1) continue;
        if (row.terms.count("y_3") && row.terms.count("y_4")) pair_row = true;
    }
    CHECK(pair_row);
    CHECK(text.find("top: yL2_7 = 0") != std::string::npos);
}

TEST_CASE("fixing y to a realizable class leaves a feasible continuous system") {
    std::vector<PatternClass> classes;
    enumerate_classes(3, [&](const PatternClass& c) { classes.push_back(c); });
    REQUIRE(classes.size() == 5);
    auto model = parse_model(emit(3, 2));

    for (const auto& cls : classes) {
        // substitute y values, keep l1..l3, L, x_* as LP variables
        std::vector<std::string> vars = {"l1", "l2", "l3", "L",  "x_0", "x_1",
                                         "x_2", "x_3", "x_4", "x_5", "x_6", "x_7"};
        auto index_of = [&](const std::string& v) {
            for (std::size_t i = 0; i < vars.size(); ++i)
                if (vars[i] == v) return (int)i;
            return -1;
        };
        auto yval = [&](const std::string& v) -> long long {
            std::uint32_t mask = (std::uint32_t)std::stoul(v.substr(2));
            return cls.patterns.test(mask) ? 1 : 0;
        };
        LinearSystem sys;
        sys.num_vars = (int)vars.size();
        bool y_rows_ok = true; // fixed-variable rows select which classes fit the model
        for (const auto& row : model.rows) {
            std::vector<Rational> coeff(vars.size(), Rational(0));
            Rational rhs(row.rhs);
            bool all_fixed = true;
            for (const auto& [v, c] : row.terms) {
                int idx = index_of(v);
                if (idx >= 0) {
                    coeff[idx] += c;
                    all_fixed = false;
                } else {
                    rhs -= Rational(c) * yval(v); // fixed binary
                }
            }
            if (all_fixed) {
                bool ok = row.rel == Rel::Le   ? Rational(0) <= rhs
                          : row.rel == Rel::Ge ? Rational(0) >= rhs
                                               : rhs == 0;
                y_rows_ok = y_rows_ok && ok;
                continue;
            }
            sys.add(std::move(coeff), row.rel, rhs);
        }
        // bounds l_i >= 1, L >= 1
        for (const auto& [v, b] : model.lower) {
            std::vector<Rational> coeff(vars.size(), Rational(0));
            coeff[index_of(v)] = 1;
            sys.add(std::move(coeff), Rel::Ge, Rational(b));
        }
        // the continuous part must be realizable for every class
        auto sol = feasible(sys);
        CHECK(sol.status == LpStatus::Feasible);
        // the pure-y rows hold exactly when the class meets the z_D >= k layer
        CHECK(y_rows_ok == (zd_of_pattern_set(cls.patterns) >= 2));
    }
}

TEST_CASE("argument validation") {
    std::ostringstream out;
    CHECK_THROWS_AS(emit_direct_model(3, 1, out), Error);
    CHECK_THROWS_AS(emit_direct_model(3, 4, out), Error);
    CHECK_THROWS_AS(emit_direct_model(13, 2, out), Error);
}
