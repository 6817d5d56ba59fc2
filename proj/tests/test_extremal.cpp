#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "gbst/extremal.hpp"
#include "oracles.hpp"

using namespace gbst;

TEST_CASE("permutation matrix operations") {
    const Perm p({1, 3, 4, 2});
    CHECK(p.dleft() == Perm({2, 3, 1}));
    CHECK(Perm({2, 3, 4, 1}).dleft() == Perm({2, 3, 1}));
    CHECK(p.dright() == Perm({1, 2, 3}));

    CHECK(reducibility(Perm({1, 3, 2})).left);
    CHECK(!reducibility(Perm({1, 3, 2})).right);
    CHECK(reducibility(Perm({2, 1, 3})).right);
    const auto r = reducibility(Perm({2, 4, 1, 3}));
    CHECK(!r.left);
    CHECK(!r.right);

    CHECK(Perm({1, 2}).rot90ccw() == Perm({2, 1}));
    CHECK(Perm({2, 3, 1}).rot90ccw().rot90ccw().rot90ccw().rot90ccw() == Perm({2, 3, 1}));

    CHECK_THROWS_AS(Perm({1}).dleft(), std::domain_error);
    CHECK_THROWS_AS(Perm({2, 2}), std::invalid_argument);
}

TEST_CASE("reduction paths") {
    CHECK(reduction_path(Perm({1, 2}), Perm({1})) == 1);
    CHECK(reduction_path(Perm({1, 3, 2, 4}), Perm({1, 3, 2})) == 1);
    CHECK(!reduction_path(Perm({2, 4, 1, 3}), Perm({1, 2, 3})).has_value());
    CHECK(reduction_path(Perm({1, 2, 3}), Perm({1, 2, 3})) == 0);
    CHECK(reduction_path(Perm({1, 2, 3, 4}), Perm({1})) == 3);
}

TEST_CASE("ex brute force worked examples") {
    const auto single = ex_bruteforce(2, 2, Pattern::parse("*"));
    CHECK(single.value == 0);
    CHECK(single.exhaustive);

    // A pattern wider than the matrix cannot embed.
    const auto wide = ex_bruteforce(2, 2, Pattern::parse("*.*\n.*."));
    CHECK(wide.value == 4);

    const Pattern i2 = Perm({1, 2}).to_pattern();
    const auto e33 = ex_bruteforce(3, 3, i2);
    CHECK(e33.value == 5);
    CHECK(e33.exhaustive);
    CHECK(e33.witness.ones() == 5);
    CHECK(!matrix_contains(e33.witness, i2));
    CHECK(!oracle::brute_contains(e33.witness.to_point_set(), i2).has_value());
}

TEST_CASE("ex identity golden values and monotonicity") {
    const Pattern i2 = Perm({1, 2}).to_pattern();
    for (int n = 2; n <= 4; ++n) {
        const auto r = ex_bruteforce(n, n, i2);
        CHECK(r.exhaustive);
        CHECK(r.value == 2 * n - 1);
    }
    CHECK(ex_bruteforce(2, 3, i2).value <= ex_bruteforce(3, 3, i2).value);
    CHECK(ex_bruteforce(3, 3, i2).value <= ex_bruteforce(3, 4, i2).value);
}

TEST_CASE("ex rotation consistency") {
    for (const auto& pat : {Perm({1, 2}).to_pattern(), Pattern::parse("*.*\n.*."),
                            Perm({2, 1, 3}).to_pattern()}) {
        const auto a = ex_bruteforce(2, 4, pat);
        const auto b = ex_bruteforce(4, 2, pat.rot90ccw());
        CHECK(a.value == b.value);
    }
}

TEST_CASE("ex respects a tiny budget") {
    const auto r = ex_bruteforce(4, 4, Perm({1, 2}).to_pattern(), 10);
    CHECK(!r.exhaustive);
    CHECK(r.value <= 7);
}

TEST_CASE("matrix containment agrees with the point-set oracle") {
    // Small random matrices against small patterns.
    std::uint64_t state = 12345;
    auto rnd = [&]() {
        state = state * 6364136223846793005ULL + 1442695040888963407ULL;
        return state >> 33;
    };
    const Pattern pats[] = {Perm({1, 2}).to_pattern(), Perm({2, 1}).to_pattern(),
                            Perm({2, 3, 1}).to_pattern(), Pattern::parse("*.*\n.*.")};
    for (int trial = 0; trial < 200; ++trial) {
        DenseMatrix m(2 + static_cast<int>(rnd() % 3), 2 + static_cast<int>(rnd() % 3));
        for (int r = 1; r <= m.rows; ++r)
            for (int c = 1; c <= m.cols; ++c) m.set(c, r, rnd() % 2 == 0);
        const auto& p = pats[rnd() % 4];
        const bool got = matrix_contains(m, p);
        const bool want = m.ones() == 0
                              ? false
                              : oracle::brute_contains(m.to_point_set(), p).has_value();
        CHECK(got == want);
    }
}

TEST_CASE("f brute force worked examples") {
    const auto f4 = f_bruteforce(4, Perm({1, 2}));
    CHECK(f4.value == 1);
    CHECK(f4.exhaustive);
    const auto f5 = f_bruteforce(5, Perm({1, 2}));
    CHECK(f5.value == 1);
    const auto f6 = f_bruteforce(6, Perm({1, 2, 3}));
    CHECK(f6.value == 2);
    // Witness rows carry at least 2k ones and avoid the pattern.
    CHECK(f6.witness.rows == 2);
    for (int r = 1; r <= f6.witness.rows; ++r) {
        int ones = 0;
        for (int c = 1; c <= f6.witness.cols; ++c) ones += f6.witness.get(c, r) ? 1 : 0;
        CHECK(ones >= 6);
    }
    CHECK(!matrix_contains(f6.witness, Perm({1, 2, 3}).to_pattern()));

    CHECK_THROWS_AS(f_bruteforce(3, Perm({1, 2})), std::domain_error);
}

TEST_CASE("f at the base width equals k - 1 for every small pattern") {
    for (const auto& pi : {Perm({1, 2}), Perm({2, 1})}) {
        const auto r = f_bruteforce(4, pi);
        CHECK(r.value == 1);
    }
    const std::vector<std::vector<int>> perms3 = {{1, 2, 3}, {1, 3, 2}, {2, 1, 3},
                                                  {2, 3, 1}, {3, 1, 2}, {3, 2, 1}};
    for (const auto& v : perms3) {
        const auto r = f_bruteforce(6, Perm(v));
        CHECK(r.value == 2);
    }
}

TEST_CASE("reduction inequality for width-2 patterns") {
    for (int c = 5; c <= 8; ++c) {
        CHECK(check_reduction_inequality(c, Perm({1, 2}), Perm({1, 2}), true));
        CHECK(check_reduction_inequality(c, Perm({1, 2}), Perm({2, 1}), true));
        CHECK(check_reduction_inequality(c, Perm({2, 1}), Perm({1, 2}), true));
        CHECK(check_reduction_inequality(c, Perm({2, 1}), Perm({2, 1}), true));
    }
    // Right-sided variant.
    CHECK(check_reduction_inequality(5, Perm({1, 2}), Perm({2, 1}), false));
    // Mismatched deletions violate the precondition.
    CHECK_THROWS_AS(check_reduction_inequality(7, Perm({1, 2, 3}), Perm({1, 3, 2}), true),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_reduction_inequality(6, Perm({1, 2, 3}), Perm({1, 3, 2}), true),
                    std::domain_error);
}
