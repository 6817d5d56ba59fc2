#include <doctest.h>

#include <stdexcept>

#include "gbst/decompose.hpp"
#include "gbst/extremal.hpp"
#include "gbst/generators.hpp"
#include "gbst/pattern.hpp"
#include "oracles.hpp"

using namespace gbst;

namespace {

TypedPointSet random_typed_set(int n, int rows, Rng& rng) {
    PointSetBuilder b(n);
    for (int k = 1; k <= n; ++k) {
        for (int t = -1; t <= rows; ++t) {
            if (rng.below(3) != 0) continue;
            PointKind kind = t <= 0 ? PointKind::TreeInit
                                    : (rng.below(3) == 0 ? PointKind::Access
                                                         : PointKind::Touched);
            b.add(k, t, kind);
        }
    }
    return b.build();
}

Pattern random_pattern(Rng& rng) {
    for (;;) {
        const int w = rng.between(1, 3);
        const int h = rng.between(1, 3);
        std::vector<PatternCell> cells;
        for (int c = 1; c <= w; ++c)
            for (int r = 1; r <= h; ++r)
                if (rng.below(2) == 0)
                    cells.push_back({c, r, static_cast<CellKind>(rng.below(3))});
        try {
            return Pattern(w, h, std::move(cells));
        } catch (const std::invalid_argument&) {
            continue;  // empty row or column; draw again
        }
    }
}

}  // namespace

TEST_CASE("pattern text format round-trips") {
    const char* texts[] = {
        "x.\n.x",      "x.x\n.x.",  "x.x\n.o.",  "x.x.x\n.x.x.",  ".x.\nx.x",
        "xx\nx.",      "..x\n.o.\nx..", "...x\n.x..\nx.x.", "*...\n..*.\n.*.*",
        "*.\n.*",      "*.*.\n.*.*", "*.*.*\n.*.*.",
    };
    for (const char* t : texts) {
        const auto p = Pattern::parse(t);
        CHECK(p.format() == t);
        CHECK(Pattern::parse(p.format()) == p);
    }
    // Large reference patterns still parse and round-trip.
    const char* big =
        ".*.......\n"
        "*.*......\n"
        ".......*.\n"
        "......*.*\n"
        "....*....\n"
        "...*.*...";
    auto q = Pattern::parse(big);
    CHECK(q.width() == 9);
    CHECK(q.height() == 6);
    CHECK(q.format() == big);

    CHECK_THROWS_AS(Pattern::parse("x.\n.."), std::invalid_argument);  // empty row
    CHECK_THROWS_AS(Pattern::parse("x.\nx."), std::invalid_argument);  // empty column
    CHECK_THROWS_AS(Pattern::parse("ab"), std::invalid_argument);
}

TEST_CASE("flip and rotation transforms") {
    const auto p = Pattern::parse("x.x\n.o.");
    CHECK(p.flipped().format() == "x.x\n.o.");
    const auto q = Pattern::parse("x..\n..x\n.x.");
    CHECK(q.flipped().format() == "..x\nx..\n.x.");
    CHECK(q.rot90ccw().rot90ccw().rot90ccw().rot90ccw() == q);

    const auto asc = Perm({1, 2}).to_pattern();
    CHECK(asc.format() == ".*\n*.");
}

TEST_CASE("contains_pattern small worked examples") {
    PointSetBuilder all2(2);
    all2.add(1, 1, PointKind::Touched);
    all2.add(1, 2, PointKind::Touched);
    all2.add(2, 1, PointKind::Touched);
    all2.add(2, 2, PointKind::Touched);
    const auto ps = all2.build();
    const auto i2 = Pattern::parse(".*\n*.");
    auto w = contains_pattern(ps, i2);
    REQUIRE(w.has_value());
    CHECK(w->cols == std::vector<int>{1, 2});
    CHECK(w->rows == std::vector<int>{1, 2});
    CHECK(witness_valid(ps, i2, *w));

    PointSetBuilder desc(2);
    desc.add(1, 2, PointKind::Touched);
    desc.add(2, 1, PointKind::Touched);
    CHECK(!contains_pattern(desc.build(), i2).has_value());

    PointSetBuilder one(1);
    one.add(1, 1, PointKind::Touched);
    CHECK(!contains_pattern(one.build(), Pattern::parse("o")).has_value());
}

TEST_CASE("contains_pattern agrees with full enumeration") {
    Rng rng(21);
    std::vector<Pattern> catalog;
    for (const auto& e : preorder_expectations()) catalog.push_back(e.pattern);
    for (const auto& e : postorder_expectations()) catalog.push_back(e.pattern);
    for (const auto& e : partition321_expectations()) catalog.push_back(e.pattern);
    for (const auto& e : chain_expectations(2)) catalog.push_back(e.pattern);
    catalog.push_back(phase_left_pattern());
    catalog.push_back(phase_right_pattern());
    catalog.push_back(deque_counterexample_pattern());
    catalog.push_back(preorder_counterexample_pattern());

    for (int trial = 0; trial < 120; ++trial) {
        const auto ps = random_typed_set(rng.between(1, 8), rng.between(1, 7), rng);
        const auto& pat = catalog[static_cast<std::size_t>(
            rng.below(static_cast<int>(catalog.size())))];
        const auto got = contains_pattern(ps, pat);
        const auto want = oracle::brute_contains(ps, pat);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(witness_valid(ps, pat, *got));
            CHECK(got->cols == want->cols);
            CHECK(got->rows == want->rows);
        }
    }
    for (int trial = 0; trial < 200; ++trial) {
        const auto ps = random_typed_set(rng.between(1, 7), rng.between(1, 6), rng);
        const auto pat = random_pattern(rng);
        const auto got = contains_pattern(ps, pat);
        const auto want = oracle::brute_contains(ps, pat);
        REQUIRE(got.has_value() == want.has_value());
        if (got) {
            CHECK(witness_valid(ps, pat, *got));
            CHECK(got->cols == want->cols);
            CHECK(got->rows == want->rows);
        }
    }
}

TEST_CASE("sequence containment and subsequence lengths") {
    const std::vector<int> inc{1, 2, 3}, dec{3, 2, 1}, ex{2, 4, 1, 3};
    CHECK(seq_contains(inc, std::vector<int>{1, 2}));
    CHECK(!seq_contains(dec, std::vector<int>{1, 2}));
    CHECK(seq_contains(std::vector<int>{2, 3, 1}, std::vector<int>{2, 3, 1}));

    CHECK(lds_length(dec) == 3);
    CHECK(lds_length(inc) == 1);
    CHECK(lds_length(ex) == 2);

    Rng rng(22);
    for (int trial = 0; trial < 60; ++trial) {
        const auto xs = rng.permutation(rng.between(1, 9));
        CHECK(lds_length(xs) == oracle::brute_lds(xs));
        // k-decreasing containment mirrors the subsequence length.
        for (int k = 1; k <= 4; ++k) {
            std::vector<int> down(static_cast<std::size_t>(k + 1));
            for (int i = 0; i <= k; ++i) down[static_cast<std::size_t>(i)] = k + 1 - i;
            CHECK(seq_contains(xs, down) == (lds_length(xs) >= k + 1));
        }
        CHECK(seq_contains(xs, std::vector<int>{1, 3, 2}) == contains_132(xs));
        CHECK(seq_contains(xs, std::vector<int>{2, 3, 1}) == contains_231(xs));
        CHECK(seq_contains(xs, std::vector<int>{2, 1, 3}) == contains_213(xs));
        CHECK(seq_contains(xs, std::vector<int>{3, 1, 2}) == contains_312(xs));
    }
}

TEST_CASE("monotone diagonals match subsequence statistics") {
    Rng rng(23);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.between(2, 9);
        const auto xs = rng.permutation(n);
        PointSetBuilder b(n);
        for (int i = 0; i < n; ++i)
            b.add(xs[static_cast<std::size_t>(i)], i + 1, PointKind::Access);
        const auto ps = b.build();
        for (int k = 2; k <= 4; ++k) {
            std::vector<int> up(static_cast<std::size_t>(k));
            for (int i = 0; i < k; ++i) up[static_cast<std::size_t>(i)] = i + 1;
            const bool has_up =
                contains_pattern(ps, Pattern::from_permutation(up)).has_value();
            CHECK(has_up == (lis_length(xs) >= k));
        }
    }
}
