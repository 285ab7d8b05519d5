#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "shiftdisc/cubes.hpp"

using namespace shiftdisc;

namespace {

IntervalPartition part_A_8() {
    return IntervalPartition(SortedSet::range(1, 8), Variant::A, 2);
}

IntervalPartition part_B_6() {
    return IntervalPartition(SortedSet::range(1, 6), Variant::B, 2);
}

std::vector<SortedSet> all_subsets(const SortedSet& S, int k) {
    std::vector<SortedSet> out;
    std::vector<int> idx;
    for (int i = 1; i <= k; ++i) idx.push_back(i);
    do {
        std::vector<int> v;
        for (int i : idx) v.push_back(S[i - 1]);
        out.emplace_back(std::move(v));
    } while (next_subset(idx, S.size()));
    return out;
}

} // namespace

TEST_CASE("interval partition slicing") {
    IntervalPartition pa = part_A_8();
    CHECK(pa.n() == 2);
    CHECK(pa.k() == 6);
    CHECK(pa.interval(1) == SortedSet({1, 2, 3, 4}));
    CHECK(pa.interval(2) == SortedSet({5, 6, 7, 8}));
    CHECK_THROWS_AS(pa.interval(3), validation_error);

    IntervalPartition pb = part_B_6();
    CHECK(pb.n() == 2);
    CHECK(pb.k() == 4);
    CHECK(pb.interval(2) == SortedSet({4, 5, 6}));

    CHECK_THROWS_AS(IntervalPartition(SortedSet::range(1, 7), Variant::A, 2),
                    validation_error);
}

TEST_CASE("properly_hits: worked instances") {
    IntervalPartition pa = part_A_8();
    SortedSet X({1, 2, 3, 5, 6, 7});
    CHECK(properly_hits_A(X, pa, 1));
    CHECK(properly_hits_A(X, pa, 2));
    CHECK_FALSE(properly_hits_A(SortedSet({1, 2, 3, 4, 5, 6}), pa, 1));
    CHECK(count_hits(X, pa) == 2);
    CHECK(count_hits(SortedSet({1, 2, 3, 4, 5, 6}), pa) == 0);

    IntervalPartition pb = part_B_6();
    SortedSet Y({1, 2, 4, 5});
    CHECK(properly_hits_B(Y, pb, 1, 0));
    CHECK(properly_hits_B(Y, pb, 2, 0));
    CHECK_FALSE(properly_hits_B(SortedSet({1, 3, 4, 5}), pb, 1, 0));
    CHECK(count_hits(Y, pb) == 2);
}

TEST_CASE("maximal_cube and enumerate_cube: the [8] worked example") {
    IntervalPartition pa = part_A_8();
    SortedSet X({1, 2, 3, 5, 6, 7});
    auto cube = maximal_cube(X, pa);
    REQUIRE(cube.has_value());
    CHECK(cube->J() == std::vector<int>({1, 2}));
    CHECK(cube->R() == SortedSet({1, 3, 5, 7}));
    CHECK(cube->dimension() == 2);

    std::vector<SortedSet> members = enumerate_cube(*cube);
    REQUIRE(members.size() == 4);
    CHECK(members[0] == SortedSet({1, 2, 3, 5, 6, 7}));
    CHECK(members[1] == SortedSet({1, 2, 3, 5, 7, 8}));
    CHECK(members[2] == SortedSet({1, 3, 4, 5, 6, 7}));
    CHECK(members[3] == SortedSet({1, 3, 4, 5, 7, 8}));

    CHECK_FALSE(maximal_cube(SortedSet({1, 2, 3, 4, 5, 6}), pa).has_value());
}

TEST_CASE("maximal_cube: variant-B worked example") {
    IntervalPartition pb = part_B_6();
    auto cube = maximal_cube(SortedSet({1, 2, 4, 5}), pb);
    REQUIRE(cube.has_value());
    CHECK(cube->J() == std::vector<int>({1, 2}));
    CHECK(cube->R().empty());
    std::vector<SortedSet> members = enumerate_cube(*cube);
    REQUIRE(members.size() == 4);
    CHECK(members[0] == SortedSet({1, 2, 4, 5}));
    CHECK(members[1] == SortedSet({1, 2, 5, 6}));
    CHECK(members[2] == SortedSet({2, 3, 4, 5}));
    CHECK(members[3] == SortedSet({2, 3, 5, 6}));
}

TEST_CASE("cube constructor validation") {
    IntervalPartition pa = part_A_8();
    CHECK_THROWS_AS(Cube(pa, {}, SortedSet({1, 3, 5, 7})), validation_error);
    CHECK_THROWS_AS(Cube(pa, {1, 2}, SortedSet({1, 3, 5})), validation_error);
    // missing pair {2,3} at index distance 1, not l=2
    CHECK_THROWS_AS(Cube(pa, {1}, SortedSet({1, 4, 5, 6, 7})), validation_error);
    CHECK_NOTHROW(Cube(pa, {1}, SortedSet({1, 3, 5, 6, 7})));

    IntervalPartition pb = part_B_6();
    CHECK_THROWS_AS(Cube(pb, {1, 2}, SortedSet({1})), validation_error);
    CHECK_NOTHROW(Cube(pb, {1, 2}, SortedSet(std::vector<int>{})));
    // R meets S_2
    CHECK_THROWS_AS(Cube(pb, {2}, SortedSet({1, 4})), validation_error);
}

TEST_CASE("cover partition property: variants A and B, l=2, n in {2,3}") {
    for (int n : {2, 3}) {
        for (Variant var : {Variant::A, Variant::B}) {
            int len = var == Variant::A ? 4 : 3;
            IntervalPartition part(SortedSet::range(1, n * len), var, 2);
            int k = part.k();
            // group every covered k-set under its maximal cube
            std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<SortedSet>>
                groups;
            for (const SortedSet& X : all_subsets(part.ground(), k)) {
                int z = count_hits(X, part);
                auto cube = maximal_cube(X, part);
                CHECK(cube.has_value() == (z >= 1));
                if (!cube) continue;
                CHECK(cube->dimension() == z);
                groups[{cube->J(), cube->R().elems()}].push_back(X);
            }
            for (const auto& [key, members] : groups) {
                Cube cube(part, key.first, SortedSet(key.second));
                std::vector<SortedSet> enumd = enumerate_cube(cube);
                // the group of a maximal cube is exactly its enumeration:
                // cubes are pairwise disjoint and have 2^d members
                CHECK(enumd.size() == members.size());
                CHECK(enumd == members);
                for (const SortedSet& Y : enumd) {
                    auto back = maximal_cube(Y, part);
                    REQUIRE(back.has_value());
                    CHECK(back->J() == cube.J());
                    CHECK(back->R() == cube.R());
                }
            }
        }
    }
}

TEST_CASE("variant-B alignment: hit intersections are consecutive blocks of X") {
    for (int n : {2, 3}) {
        IntervalPartition part(SortedSet::range(1, 3 * n), Variant::B, 2);
        for (const SortedSet& X : all_subsets(part.ground(), part.k())) {
            auto cube = maximal_cube(X, part);
            if (!cube) continue;
            for (int j : cube->J()) {
                SortedSet I = part.interval(j);
                std::vector<int> inter;
                for (int e : I.elems())
                    if (X.contains(e)) inter.push_back(e);
                REQUIRE(static_cast<int>(inter.size()) == 2);
                // must equal a block X_q = {x_{2q+1}, x_{2q+2}}
                bool aligned = false;
                for (int q = 0; q + 1 < X.size(); q += 2)
                    if (X[q] == inter[0] && X[q + 1] == inter[1]) aligned = true;
                CHECK(aligned);
            }
        }
    }
}

TEST_CASE("main projections: worked example and dimension-1 cubes") {
    IntervalPartition pa = part_A_8();
    auto cube = maximal_cube(SortedSet({1, 2, 3, 5, 6, 7}), pa);
    REQUIRE(cube.has_value());
    MainProjections mp = main_projections(*cube);
    CHECK(mp.j_of.at(1) == 2);
    CHECK(mp.j_of.at(2) == 5);
    CHECK(mp.B == std::vector<int>({2, 5}));

    for (const SortedSet& X : all_subsets(pa.ground(), 6)) {
        auto c = maximal_cube(X, pa);
        if (!c || c->dimension() != 1) continue;
        CHECK(main_projections(*c).B.size() == 1);
    }
}

TEST_CASE("codec: round-trip over every cube of the [8] and [12] instances") {
    int codes_seen = 0;
    for (int n : {2, 3}) {
        IntervalPartition part(SortedSet::range(1, 4 * n), Variant::A, 2);
        ColoringPipeline pipe = build_fallback_pipeline(4 * n, 2);
        std::set<std::pair<std::vector<int>, std::vector<int>>> seen;
        for (const SortedSet& X : all_subsets(part.ground(), part.k())) {
            auto cube = maximal_cube(X, part);
            if (!cube) continue;
            auto key = std::make_pair(cube->J(), cube->R().elems());
            if (!seen.insert(key).second) continue;

            CubeImageCode code = encode_image(*cube, pipe);
            CHECK(static_cast<int>(code.B.size()) == cube->dimension());
            std::set<std::vector<int>> image;
            for (const SortedSet& Y : enumerate_cube(*cube))
                image.insert(window_vector(Y, pipe));
            CHECK(image.size() == (std::size_t(1) << cube->dimension()));
            CHECK(decode_image(code) == image);
            ++codes_seen;
        }
        CHECK(codes_seen > 0);
    }
}

TEST_CASE("codec: worked cube has |B| = 2 and f over {1,3,4}") {
    IntervalPartition pa = part_A_8();
    ColoringPipeline pipe = build_fallback_pipeline(8, 2);
    auto cube = maximal_cube(SortedSet({1, 2, 3, 5, 6, 7}), pa);
    CubeImageCode code = encode_image(*cube, pipe);
    CHECK(code.p_win == 5);
    CHECK(code.B == std::vector<int>({2, 5}));
    REQUIRE(code.sigma.size() == 2);
    for (auto& pr : code.sigma) CHECK(pr.first != pr.second);
    CHECK(code.f.size() == 3);
    CHECK(code.f.count(1) == 1);
    CHECK(code.f.count(3) == 1);
    CHECK(code.f.count(4) == 1);
}

TEST_CASE("decode validation") {
    CubeImageCode empty;
    empty.p_win = 3;
    CHECK_THROWS_AS(decode_image(empty), validation_error);

    CubeImageCode code;
    code.p_win = 2;
    code.B = {1};
    code.sigma = {{1, 2}};
    CHECK_THROWS_AS(decode_image(code), validation_error); // f missing for coord 2
    code.f[2][{1, 1}] = 3;
    CHECK_THROWS_AS(decode_image(code), validation_error); // key (2,1) undefined
    code.f[2][{2, 1}] = 1;
    std::set<std::vector<int>> out = decode_image(code);
    CHECK(out.size() == 2);
    CHECK(out.count({1, 3}) == 1);
    CHECK(out.count({2, 1}) == 1);
}
