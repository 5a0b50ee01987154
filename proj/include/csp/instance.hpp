#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "csp/error.hpp"

namespace csp {

// Unit-demand instance E = (n, L, l) with 1 <= l_1 <= ... <= l_n <= L.
struct Instance {
    int n = 0;
    long long L = 0;
    std::vector<long long> l;
};

// Multiplicity form E = (m, L, l, b); demand n = sum(b).
struct InstanceM {
    int m = 0;
    long long L = 0;
    std::vector<long long> l;
    std::vector<long long> b;
};

// Sorts the lengths; rejects nonpositive values and lengths above L.
Instance make_instance(long long L, std::vector<long long> lengths);

InstanceM make_instance_m(long long L, std::vector<long long> lengths, std::vector<long long> demands);

// b_j copies of each l_j, sorted. The demand sum must stay within kMaxItems.
Instance expand_to_unit_demand(const InstanceM& e);

// Groups equal lengths of a unit-demand instance into multiplicity form.
InstanceM to_m_form(const Instance& e);

// Line-oriented text format: "m L" then m lines "l_i b_i".
InstanceM parse_instance_m(std::istream& in);
InstanceM load_instance_m(const std::string& path);
std::string format_instance_m(const InstanceM& e);

} // namespace csp
