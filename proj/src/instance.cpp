#include "csp/instance.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include "csp/pattern.hpp"
#include "csp/rational.hpp"

namespace csp {

bool parse_rational(const std::string& text, Rational& out) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            Integer p(text);
            out = Rational(p);
        } else {
            Integer p(text.substr(0, slash));
            Integer q(text.substr(slash + 1));
            if (q == 0) return false;
            out = Rational(p, q);
        }
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

Instance make_instance(long long L, std::vector<long long> lengths) {
    if (L < 1) fail(ErrorCode::NonPositive, "capacity must be >= 1");
    if (lengths.empty()) fail(ErrorCode::NonPositive, "instance needs at least one item");
    if ((int)lengths.size() > kMaxItems)
        fail(ErrorCode::NTooLarge, "demand exceeds " + std::to_string(kMaxItems));
    for (long long v : lengths) {
        if (v < 1) fail(ErrorCode::NonPositive, "item length must be >= 1");
        if (v > L)
            fail(ErrorCode::LengthExceedsCapacity,
                 "item length " + std::to_string(v) + " exceeds capacity " + std::to_string(L));
    }
    std::sort(lengths.begin(), lengths.end());
    Instance e;
    e.n = (int)lengths.size();
    e.L = L;
    e.l = std::move(lengths);
    return e;
}

InstanceM make_instance_m(long long L, std::vector<long long> lengths, std::vector<long long> demands) {
    if (L < 1) fail(ErrorCode::NonPositive, "capacity must be >= 1");
    if (lengths.empty() || lengths.size() != demands.size())
        fail(ErrorCode::DimensionMismatch, "lengths and demands must have equal nonzero size");
    for (long long v : lengths) {
        if (v < 1) fail(ErrorCode::NonPositive, "item length must be >= 1");
        if (v > L) fail(ErrorCode::LengthExceedsCapacity, "item length exceeds capacity");
    }
    for (long long d : demands)
        if (d < 1) fail(ErrorCode::NonPositive, "demand must be >= 1");
    std::vector<std::size_t> idx(lengths.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](auto a, auto b) { return lengths[a] < lengths[b]; });
    InstanceM e;
    e.m = (int)lengths.size();
    e.L = L;
    for (auto i : idx) {
        e.l.push_back(lengths[i]);
        e.b.push_back(demands[i]);
    }
    return e;
}

Instance expand_to_unit_demand(const InstanceM& e) {
    long long n = 0;
    for (long long d : e.b) n += d;
    if (n > kMaxItems) fail(ErrorCode::NTooLarge, "total demand exceeds " + std::to_string(kMaxItems));
    std::vector<long long> lengths;
    lengths.reserve((std::size_t)n);
    for (int j = 0; j < e.m; ++j)
        for (long long c = 0; c < e.b[j]; ++c) lengths.push_back(e.l[j]);
    return make_instance(e.L, std::move(lengths));
}

InstanceM to_m_form(const Instance& e) {
    InstanceM m;
    m.L = e.L;
    for (long long v : e.l) {
        if (!m.l.empty() && m.l.back() == v) {
            ++m.b.back();
        } else {
            m.l.push_back(v);
            m.b.push_back(1);
        }
    }
    m.m = (int)m.l.size();
    return m;
}

InstanceM parse_instance_m(std::istream& in) {
    std::string line;
    int lineno = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            ++lineno;
            if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
            out = line;
            return true;
        }
        return false;
    };
    auto parse_fail = [&](const std::string& what) {
        fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": " + what);
    };

    std::string head;
    if (!next_line(head)) fail(ErrorCode::ParseError, "empty instance file");
    long long m = 0, L = 0;
    {
        std::istringstream ss(head);
        if (!(ss >> m >> L)) parse_fail("expected \"m L\"");
        std::string rest;
        if (ss >> rest) parse_fail("trailing tokens after \"m L\"");
    }
    if (m < 1) parse_fail("m must be >= 1");
    std::vector<long long> lengths, demands;
    for (long long j = 0; j < m; ++j) {
        std::string row;
        if (!next_line(row)) fail(ErrorCode::ParseError, "line " + std::to_string(lineno) + ": expected " + std::to_string(m) + " item lines");
        std::istringstream ss(row);
        long long li = 0, bi = 0;
        if (!(ss >> li >> bi)) parse_fail("expected \"l_i b_i\"");
        std::string rest;
        if (ss >> rest) parse_fail("trailing tokens after \"l_i b_i\"");
        lengths.push_back(li);
        demands.push_back(bi);
    }
    try {
        return make_instance_m(L, std::move(lengths), std::move(demands));
    } catch (const Error& err) {
        fail(ErrorCode::ParseError, std::string("invalid instance: ") + err.what());
    }
}

InstanceM load_instance_m(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(ErrorCode::ParseError, "cannot open " + path);
    return parse_instance_m(in);
}

std::string format_instance_m(const InstanceM& e) {
    std::ostringstream out;
    out << e.m << ' ' << e.L << '\n';
    for (int j = 0; j < e.m; ++j) out << e.l[j] << ' ' << e.b[j] << '\n';
    return out.str();
}

} // namespace csp
