#include <doctest.h>

#include <random>

#include "csp/dominance.hpp"
#include "oracles.hpp"

using namespace csp;

namespace {

// Hand-derived relation for n = 3 from the suffix-sum triples; row a lists
// the masks that dominate a.
const std::vector<std::vector<std::uint32_t>> kAbove3 = {
    {0, 1, 2, 3, 4, 5, 6, 7}, // (0,0,0)
    {1, 2, 3, 4, 5, 6, 7},    // (1,0,0)
    {2, 3, 4, 5, 6, 7},       // (0,1,0)
    {3, 5, 6, 7},             // (1,1,0)
    {4, 5, 6, 7},             // (0,0,1)
    {5, 6, 7},                // (1,0,1)
    {6, 7},                   // (0,1,1)
    {7},                      // (1,1,1)
};

} // namespace

TEST_CASE("dominates on the spec pairs") {
    // vectors written (a_1, a_2, a_3), bit i-1 = a_i
    CHECK(dominates(0b001, 0b100, 3));       // (1,0,0) <= (0,0,1)
    CHECK_FALSE(dominates(0b100, 0b011, 3)); // (0,0,1) vs (1,1,0)
    CHECK(dominates(0b011, 0b110, 3));       // (1,1,0) <= (0,1,1)
    CHECK_THROWS_AS(dominates(Pattern(1, 2), Pattern(1, 3)), Error);
}

TEST_CASE("n=3 relation matches the hand-derived matrix") {
    DominanceTable t(3);
    for (std::uint32_t a = 0; a < 8; ++a)
        for (std::uint32_t b = 0; b < 8; ++b) {
            bool expect = std::find(kAbove3[a].begin(), kAbove3[a].end(), b) != kAbove3[a].end();
            CHECK(dominates(a, b, 3) == expect);
            CHECK(t.rel(a, b) == expect);
        }
}

TEST_CASE("table agrees with the definition and is a partial order, n <= 6") {
    for (int n = 1; n <= 6; ++n) {
        DominanceTable t(n);
        std::uint32_t full = full_mask(n);
        for (std::uint32_t a = 0; a <= full; ++a) {
            CHECK(t.rel(a, a));
            for (std::uint32_t b = 0; b <= full; ++b) {
                CHECK(t.rel(a, b) == oracle::dominates(a, b, n));
                if (a != b && t.rel(a, b)) CHECK_FALSE(t.rel(b, a)); // antisymmetry
                if ((a & b) == a) CHECK(t.rel(a, b));                // containment implies dominance
                if (t.rel(a, b)) CHECK(a <= b);                      // num-monotone
                for (std::uint32_t c = 0; c <= full && n <= 5; ++c)
                    if (t.rel(a, b) && t.rel(b, c)) CHECK(t.rel(a, c));
            }
        }
    }
}

TEST_CASE("num order does not imply dominance") {
    // (0,0,1) has num 4, (1,1,0) has num 3, incomparable both ways
    CHECK_FALSE(dominates(0b100, 0b011, 3));
    CHECK_FALSE(dominates(0b011, 0b100, 3));
    CHECK(0b011 <= 0b100);
}

TEST_CASE("dominance respects sorted length vectors") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 2000; ++it) {
        int n = 1 + int(rng() % 8);
        std::vector<long long> l(n);
        long long v = 1 + rng() % 5;
        for (auto& x : l) {
            x = v;
            v += rng() % 4;
        }
        std::uint32_t a = std::uint32_t(rng()) & full_mask(n);
        std::uint32_t b = std::uint32_t(rng()) & full_mask(n);
        if (!dominates(a, b, n)) continue;
        long long la = 0, lb = 0;
        for (int i = 0; i < n; ++i) {
            if (a & (1u << i)) la += l[i];
            if (b & (1u << i)) lb += l[i];
        }
        CHECK(la <= lb);
    }
}

TEST_CASE("downward closure") {
    DominanceTable t(3);
    auto c = downward_closure({0b110}, t); // (0,1,1)
    CHECK(c.count() == 7);
    CHECK_FALSE(c.test(0b111));
    for (std::uint32_t m : {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110})
        CHECK(c.test(m));

    auto zero = downward_closure({0}, t);
    CHECK(zero.count() == 1);

    DominanceTable t2(2);
    CHECK(downward_closure({0b11}, t2).count() == 4);
}

TEST_CASE("maximal elements") {
    DominanceTable t(3);
    auto closure = downward_closure({0b110}, t);
    CHECK(maximal_elements(closure.to_vector(), t) == std::vector<std::uint32_t>{0b110});
    CHECK(maximal_of_closed(closure) == std::vector<std::uint32_t>{0b110});

    CHECK(maximal_elements({0b001, 0b010}, t) == std::vector<std::uint32_t>{0b010});
    // an antichain maps to itself
    CHECK(maximal_elements({0b011, 0b100}, t) == std::vector<std::uint32_t>{0b011, 0b100});
}

TEST_CASE("closure of maximal is the identity on downward-closed sets") {
    std::mt19937_64 rng(5);
    for (int it = 0; it < 300; ++it) {
        int n = 2 + int(rng() % 4);
        DominanceTable t(n);
        std::vector<std::uint32_t> gen;
        for (int j = 0; j < 3; ++j) gen.push_back(std::uint32_t(rng()) & full_mask(n));
        auto closed = downward_closure(gen, t);
        CHECK(is_downward_closed(closed));
        auto maxed = maximal_of_closed(closed);
        CHECK(maxed == maximal_elements(closed.to_vector(), t));
        CHECK(downward_closure(maxed, t) == closed);
        for (std::size_t i = 0; i < maxed.size(); ++i)
            for (std::size_t j = i + 1; j < maxed.size(); ++j) {
                CHECK_FALSE(t.rel(maxed[i], maxed[j]));
                CHECK_FALSE(t.rel(maxed[j], maxed[i]));
            }
    }
}

TEST_CASE("is_downward_closed matches the brute-force definition, n <= 5") {
    std::mt19937_64 rng(17);
    for (int it = 0; it < 400; ++it) {
        int n = 2 + int(rng() % 4);
        DominanceTable t(n);
        MaskSet s(n);
        for (std::uint32_t m = 0; m <= full_mask(n); ++m)
            if (rng() & 1) s.set(m);
        bool brute = true;
        for (std::uint32_t b = 0; b <= full_mask(n) && brute; ++b)
            if (s.test(b))
                for (std::uint32_t a = 0; a <= b && brute; ++a)
                    if (t.rel(a, b) && !s.test(a)) brute = false;
        CHECK(is_downward_closed(s) == brute);
    }
}
