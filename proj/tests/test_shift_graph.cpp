#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shiftdisc/shift_graph.hpp"

using namespace shiftdisc;

TEST_CASE("is_shift_edge") {
    CHECK(is_shift_edge(SortedSet({1, 3, 5}), SortedSet({3, 5, 9})));
    CHECK_FALSE(is_shift_edge(SortedSet({1, 3, 5}), SortedSet({3, 4, 5})));
    CHECK_FALSE(is_shift_edge(SortedSet({1, 3, 5}), SortedSet({1, 3, 5})));
    CHECK_FALSE(is_shift_edge(SortedSet({3, 5, 9}), SortedSet({1, 3, 5})));
    CHECK_THROWS_AS(is_shift_edge(SortedSet({1, 2}), SortedSet({1, 2, 3})),
                    validation_error);
}

// Frozen oracles for the three abstract step rules; the pipeline must be
// proper because each rule separates consecutive path edges.

namespace {

int delta_rule(int u, int v) {
    unsigned x = static_cast<unsigned>(u ^ v);
    int i = 0;
    while (!((x >> i) & 1)) ++i;
    return 2 * i + ((u >> i) & 1);
}

int psi(int a, int b, int c) {
    if (b != 4) return b;
    for (int d = 1; d <= 3; ++d)
        if (d != a && d != c) return d;
    return -1;
}

} // namespace

TEST_CASE("delta rule: spec instance and path properness") {
    // colors 011 / 010 differ at bit 0; result 2*0 + 1
    CHECK(delta_rule(0b011, 0b010) == 1);
    for (int u = 0; u < 16; ++u)
        for (int v = 0; v < 16; ++v)
            for (int w = 0; w < 16; ++w) {
                if (u == v || v == w) continue;
                CHECK(delta_rule(u, v) != delta_rule(v, w));
                CHECK(delta_rule(u, v) < 8);
            }
}

TEST_CASE("k4 rule: paper instance and path properness") {
    CHECK(psi(1, 4, 3) == 2); // prefix 1, shared 4, suffix 3 -> 2
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c)
                for (int d = 1; d <= 4; ++d) {
                    if (a == b || b == c || c == d) continue;
                    CHECK(psi(a, b, c) != psi(b, c, d));
                    CHECK(psi(a, b, c) >= 1);
                    CHECK(psi(a, b, c) <= 3);
                }
}

TEST_CASE("subset rule: path properness over embedded antichains") {
    // min(A\B) lies in A but not B, so two consecutive edges disagree
    auto check_family = [](int n, int s, int count) {
        for (int r1 = 0; r1 < count; ++r1)
            for (int r2 = 0; r2 < count; ++r2)
                for (int r3 = 0; r3 < count; ++r3) {
                    if (r1 == r2 || r2 == r3) continue;
                    SortedSet A = unrank_subset(n, s, r1);
                    SortedSet B = unrank_subset(n, s, r2);
                    SortedSet C = unrank_subset(n, s, r3);
                    int e1 = set_difference(A, B).min();
                    int e2 = set_difference(B, C).min();
                    CHECK(e1 != e2);
                    CHECK(e1 >= 1);
                    CHECK(e1 <= n);
                }
    };
    check_family(4, 2, 6);
    check_family(6, 3, 20);
}

TEST_CASE("build_pipeline: structure and admissibility") {
    ColoringPipeline p5 = build_pipeline(16, 5);
    REQUIRE(p5.levels.size() == 5);
    CHECK(p5.levels[0].kind == StepKind::base);
    CHECK(p5.levels[4].kind == StepKind::k4);
    CHECK(p5.levels[4].color_bound == 3);
    CHECK(p5.three_color);

    ColoringPipeline p6 = build_pipeline(256, 6);
    REQUIRE(p6.levels.size() == 6);
    CHECK(p6.levels[5].color_bound == 3);

    CHECK_THROWS_AS(build_pipeline(1000000000, 5), validation_error);
    try {
        build_pipeline(1000000000, 5);
    } catch (const error& e) {
        CHECK(e.code() == "n-exceeds-tower-bound");
        CHECK(e.exit_code() == 2);
    }
    CHECK_THROWS_AS(build_pipeline(7, 4), validation_error); // l=4 caps at N=6
    CHECK_NOTHROW(build_pipeline(6, 4));
    CHECK_NOTHROW(build_pipeline(20, 5));
    CHECK_THROWS_AS(build_pipeline(21, 5), validation_error);
    CHECK_NOTHROW(build_pipeline(1024, 6));
    CHECK_THROWS_AS(build_pipeline(1025, 6), validation_error);
    CHECK_THROWS_AS(build_pipeline(16, 3), validation_error);
}

TEST_CASE("color: base convention, determinism, level guard") {
    ColoringPipeline p = build_pipeline(16, 5);
    CHECK(p.color(SortedSet({7})) == 6);
    SortedSet X({2, 3, 7, 11, 13});
    int c1 = p.color(X);
    int c2 = p.color(X);
    CHECK(c1 == c2);
    CHECK(c1 >= 0);
    CHECK(c1 <= 2);
    CHECK_THROWS_AS(p.color(SortedSet({1, 2, 3, 4, 5, 6})), validation_error);
    CHECK_THROWS_AS(p.color(SortedSet({1, 2, 3, 4, 17})), validation_error);
}

TEST_CASE("verify_proper: exhaustive on (16,5), used counts within the chain") {
    ColoringPipeline p = build_pipeline(16, 5);
    VerifyReport r = verify_proper(p, "exhaustive", 1000000, 0);
    CHECK(r.edges_checked == 8008); // C(16,6)
    CHECK(r.violations == 0);
    std::vector<int> used = p.used_counts();
    std::vector<int> cap = {16, 8, 6, 4, 3};
    REQUIRE(used.size() == cap.size());
    for (std::size_t i = 0; i < used.size(); ++i)
        CHECK(used[i] <= cap[i]);
}

TEST_CASE("verify_proper: sampled on (256,6), thread-count independent") {
    ColoringPipeline p = build_pipeline(256, 6);
    VerifyReport r1 = verify_proper(p, "sampled", 1000000, 42, 2000, 1);
    CHECK(r1.edges_checked == 2000);
    CHECK(r1.violations == 0);
    VerifyReport r3 = verify_proper(p, "sampled", 1000000, 42, 2000, 3);
    CHECK(r3.violations == r1.violations);
    CHECK(r3.edges_checked == r1.edges_checked);
    std::vector<int> used = p.used_counts();
    std::vector<int> cap = {256, 16, 8, 6, 4, 3};
    REQUIRE(used.size() == cap.size());
    for (std::size_t i = 0; i < used.size(); ++i)
        CHECK(used[i] <= cap[i]);
}

TEST_CASE("verify_proper: mutated final step is caught") {
    ColoringPipeline p = build_pipeline(16, 5);
    p.final_color_override = 0;
    VerifyReport r = verify_proper(p, "exhaustive", 1000000, 0);
    CHECK(r.violations > 0);
}

TEST_CASE("verify_proper: budget rejection names the count") {
    ColoringPipeline p = build_pipeline(16, 5);
    try {
        verify_proper(p, "exhaustive", 100, 0);
        CHECK(false);
    } catch (const budget_error& e) {
        CHECK(e.required() == "8008");
        CHECK(e.exit_code() == 3);
    }
}

TEST_CASE("fallback pipeline: proper for small l, labeled non-3-color") {
    ColoringPipeline p = build_fallback_pipeline(8, 2);
    CHECK_FALSE(p.three_color);
    VerifyReport r = verify_proper(p, "exhaustive", 1000000, 0);
    CHECK(r.edges_checked == 56); // C(8,3)
    CHECK(r.violations == 0);

    ColoringPipeline p3 = build_fallback_pipeline(12, 3);
    VerifyReport r3 = verify_proper(p3, "exhaustive", 1000000, 0);
    CHECK(r3.violations == 0);
}

TEST_CASE("odd_cycle_check") {
    CHECK(odd_cycle_check(5, 2, 10000));
    CHECK(odd_cycle_check(7, 3, 10000));
    for (int l = 2; l <= 6; ++l) CHECK(odd_cycle_check(2 * l + 1, l, 100000));
    CHECK_FALSE(odd_cycle_check(3, 2, 10000)); // N = l+1: a single edge
    CHECK_FALSE(odd_cycle_check(4, 3, 10000));
    CHECK_THROWS_AS(odd_cycle_check(30, 15, 1000), budget_error);
}

TEST_CASE("max_admissible_bits") {
    CHECK(max_admissible_bits(4) == 3);   // N <= 6
    CHECK(max_admissible_bits(5) == 5);   // N <= 20
    CHECK(max_admissible_bits(6) == 11);  // N <= 1024
    CHECK(max_admissible_bits(7) == 513); // N <= 2^512
}
