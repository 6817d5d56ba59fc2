#include <doctest.h>

#include <stdexcept>

#include "gbst/generators.hpp"
#include "gbst/point_set.hpp"

using namespace gbst;

namespace {

TypedPointSet make_set(int n, std::initializer_list<TypedPoint> pts) {
    PointSetBuilder b(n);
    for (const auto& p : pts) b.add(p);
    return b.build();
}

TypedPointSet random_set(int n, int rows, Rng& rng) {
    PointSetBuilder b(n);
    for (int k = 1; k <= n; ++k) {
        for (int t = -2; t <= rows; ++t) {
            if (rng.below(3) != 0) continue;
            PointKind kind = t <= 0 ? PointKind::TreeInit
                                    : (rng.below(4) == 0 ? PointKind::Access
                                                         : PointKind::Touched);
            b.add(k, t, kind);
        }
    }
    return b.build();
}

}  // namespace

TEST_CASE("rect_count counts closed rectangles") {
    auto ps = make_set(2, {{1, 1, PointKind::Access}, {2, 2, PointKind::Access}});
    CHECK(ps.rect_count({1, 1}, {2, 2}) == 2);
    CHECK(ps.rect_count({2, 2}, {1, 1}) == 2);  // corner order is free

    auto ps3 = make_set(2, {{1, 1, PointKind::Access},
                            {2, 1, PointKind::Touched},
                            {2, 2, PointKind::Access}});
    CHECK(ps3.rect_count({1, 1}, {2, 2}) == 3);

    TypedPointSet empty = PointSetBuilder(0).build();
    CHECK(empty.rect_count({5, 5}, {-3, 7}) == 0);

    CHECK_THROWS_AS(ps.rect_count({0, 1}, {2, 2}), std::out_of_range);
    CHECK_THROWS_AS(ps.rect_count({1, 1}, {2, 3}), std::out_of_range);
}

TEST_CASE("rect_count is symmetric in its corners") {
    Rng rng(14);
    for (int trial = 0; trial < 30; ++trial) {
        auto ps = random_set(rng.between(1, 8), rng.between(1, 8), rng);
        if (ps.empty()) continue;
        for (int probe = 0; probe < 20; ++probe) {
            const int k1 = rng.between(1, ps.n_keys());
            const int k2 = rng.between(1, ps.n_keys());
            const int t1 = rng.between(ps.min_time(), ps.max_time());
            const int t2 = rng.between(ps.min_time(), ps.max_time());
            CHECK(ps.rect_count({k1, t1}, {k2, t2}) == ps.rect_count({k2, t2}, {k1, t1}));
        }
    }
}

TEST_CASE("tau finds the last strictly earlier touch") {
    auto ps = make_set(2, {{2, 0, PointKind::TreeInit}, {2, 1, PointKind::Access}});
    CHECK(ps.tau(2, 2) == 1);
    CHECK(ps.tau(2, 1) == 0);

    auto ps2 = make_set(3, {{3, -1, PointKind::TreeInit}});
    CHECK(ps2.tau(3, 2) == -1);

    auto ps3 = make_set(2, {{1, 1, PointKind::Access}});
    CHECK(!ps3.tau(2, 1).has_value());
    CHECK_THROWS_AS(ps3.tau(0, 1), std::out_of_range);
}

TEST_CASE("flip reflects keys and keeps kinds") {
    auto ps = make_set(3, {{1, 1, PointKind::Access}});
    auto f = ps.flip();
    REQUIRE(f.size() == 1);
    CHECK(f.at(3, 1) == PointKind::Access);

    auto id2 = make_set(2, {{1, 1, PointKind::Access}, {2, 2, PointKind::Access}});
    auto fid = id2.flip();
    CHECK(fid.at(2, 1) == PointKind::Access);
    CHECK(fid.at(1, 2) == PointKind::Access);
}

TEST_CASE("flip is an involution on random sets") {
    Rng rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        auto ps = random_set(rng.between(1, 9), rng.between(1, 9), rng);
        auto back = ps.flip().flip();
        REQUIRE(back.size() == ps.size());
        auto a = ps.points();
        auto b = back.points();
        CHECK(std::equal(a.begin(), a.end(), b.begin(), b.end()));
        CHECK(ps.consistent());
    }
}

TEST_CASE("tau returns a real point strictly below the query row") {
    Rng rng(12);
    for (int trial = 0; trial < 40; ++trial) {
        auto ps = random_set(rng.between(1, 8), rng.between(1, 8), rng);
        for (int k = 1; k <= ps.n_keys(); ++k) {
            for (int t = -3; t <= 10; ++t) {
                auto tt = ps.tau(k, t);
                if (tt) {
                    CHECK(*tt < t);
                    CHECK(ps.at(k, *tt).has_value());
                }
            }
        }
    }
}

TEST_CASE("builder rejects malformed points") {
    PointSetBuilder b(2);
    CHECK_THROWS_AS(b.add(3, 1, PointKind::Access), std::invalid_argument);
    CHECK_THROWS_AS(b.add(1, 1, PointKind::TreeInit), std::invalid_argument);
    CHECK_THROWS_AS(b.add(1, 0, PointKind::Access), std::invalid_argument);
    b.add(1, 1, PointKind::Access);
    b.add(1, 1, PointKind::Touched);  // duplicate position, caught at build
    CHECK_THROWS_AS(b.build(), std::invalid_argument);
}

TEST_CASE("JSON export round-trips byte-exactly") {
    Rng rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        auto ps = random_set(rng.between(1, 10), rng.between(1, 10), rng);
        const auto text = to_json(ps);
        const auto back = point_set_from_json(text);
        CHECK(to_json(back) == text);
        REQUIRE(back.size() == ps.size());
    }
    CHECK(to_json(PointSetBuilder(0).build()) == R"({"n":0,"points":[]})");
}
