#include <doctest.h>

#include <stdexcept>

#include <algorithm>

#include "gbst/engine.hpp"
#include "gbst/generators.hpp"
#include "oracles.hpp"

using namespace gbst;

namespace {

bool same_sets(const TypedPointSet& a, const TypedPointSet& b) {
    if (a.n_keys() != b.n_keys() || a.size() != b.size()) return false;
    auto pa = a.points();
    auto pb = b.points();
    return std::equal(pa.begin(), pa.end(), pb.begin(), pb.end());
}

}  // namespace

TEST_CASE("BSTree structure, traversals and mirror") {
    const auto t = BSTree::from_insertion(std::vector<int>{2, 1, 3});
    CHECK(t.valid());
    CHECK(t.root() == 2);
    CHECK(t.depth(2) == 0);
    CHECK(t.depth(1) == 1);
    CHECK(t.preorder() == std::vector<int>{2, 1, 3});
    CHECK(t.postorder() == std::vector<int>{1, 3, 2});

    const auto path = BSTree::path(4);
    CHECK(path.valid());
    CHECK(path.height() == 3);
    CHECK(path.preorder() == std::vector<int>{1, 2, 3, 4});

    const auto m = BSTree::from_insertion(std::vector<int>{1, 2, 3}).mirrored();
    CHECK(m.valid());
    CHECK(m.root() == 3);
    CHECK(m.left(3) == 2);
    CHECK(m.left(2) == 1);

    Rng rng(31);
    for (int trial = 0; trial < 30; ++trial) {
        const auto tree = gen_random_bst(rng.between(1, 24), rng);
        CHECK(tree.valid());
        CHECK(tree.mirrored().valid());
        CHECK(tree.mirrored().mirrored().preorder() == tree.preorder());
    }
}

TEST_CASE("initial tree encoding puts key a at row -depth(a)") {
    const auto single = encode_initial_tree(BSTree::from_insertion(std::vector<int>{1}));
    REQUIRE(single.size() == 1);
    CHECK(single[0] == TypedPoint{1, 0, PointKind::TreeInit});

    const auto root2 = encode_initial_tree(BSTree::from_insertion(std::vector<int>{2, 1, 3}));
    CHECK(std::count(root2.begin(), root2.end(), TypedPoint{2, 0, PointKind::TreeInit}) == 1);
    CHECK(std::count(root2.begin(), root2.end(), TypedPoint{1, -1, PointKind::TreeInit}) == 1);
    CHECK(std::count(root2.begin(), root2.end(), TypedPoint{3, -1, PointKind::TreeInit}) == 1);

    const auto chain = encode_initial_tree(BSTree::path(3));
    CHECK(std::count(chain.begin(), chain.end(), TypedPoint{1, 0, PointKind::TreeInit}) == 1);
    CHECK(std::count(chain.begin(), chain.end(), TypedPoint{2, -1, PointKind::TreeInit}) == 1);
    CHECK(std::count(chain.begin(), chain.end(), TypedPoint{3, -2, PointKind::TreeInit}) == 1);
}

TEST_CASE("search execution worked examples") {
    const auto lone = greedy_search_execute(UpdateSequence::access(std::vector<int>{1}));
    CHECK(lone.cost == 1);
    CHECK(lone.points.at(1, 1) == PointKind::Access);
    CHECK(lone.row_touches == std::vector<std::vector<int>>{{1}});

    const auto two = greedy_search_execute(UpdateSequence::access(std::vector<int>{1, 2}));
    CHECK(two.cost == 3);
    CHECK(two.points.at(1, 1) == PointKind::Access);
    CHECK(two.points.at(1, 2) == PointKind::Touched);
    CHECK(two.points.at(2, 2) == PointKind::Access);

    const auto tree = BSTree::from_insertion(std::vector<int>{2, 1, 3});
    const auto t =
        greedy_search_execute(UpdateSequence::access(std::vector<int>{2, 1, 3}), &tree);
    CHECK(t.cost == 5);
    CHECK(t.row_touches ==
          std::vector<std::vector<int>>{{2}, {1, 2}, {2, 3}});

    CHECK(cost(t) == t.cost);
    const auto empty = greedy_search_execute(UpdateSequence::access(std::vector<int>{}));
    CHECK(cost(empty) == 0);

    CHECK_THROWS_AS(greedy_search_execute(UpdateSequence::access(std::vector<int>{1, 1})),
                    std::invalid_argument);
}

TEST_CASE("search execution matches the naive rectangle simulator") {
    Rng rng(32);
    for (int trial = 0; trial < 150; ++trial) {
        const int n = rng.between(1, 28);
        const auto x = rng.permutation(n);
        std::optional<BSTree> tree;
        if (trial % 3 == 1) tree = gen_random_bst(n, rng);
        if (trial % 3 == 2) tree = BSTree::path(n);
        const auto got =
            greedy_search_execute(UpdateSequence::access(x), tree ? &*tree : nullptr);
        const auto want = oracle::naive_search(x, tree ? &*tree : nullptr);
        CHECK(got.cost == want.cost);
        CHECK(got.row_touches == want.rows);
        CHECK(same_sets(got.points, want.points));
        // every access appears
        for (int t = 1; t <= n; ++t)
            CHECK(got.points.at(x[static_cast<std::size_t>(t - 1)], t) == PointKind::Access);
    }
}

TEST_CASE("executions are deterministic") {
    Rng rng(33);
    const auto x = rng.permutation(24);
    auto tree = gen_random_bst(24, rng);
    const auto a = greedy_search_execute(UpdateSequence::access(x), &tree);
    const auto b = greedy_search_execute(UpdateSequence::access(x), &tree);
    CHECK(same_sets(a.points, b.points));
    CHECK(a.row_touches == b.row_touches);
}

TEST_CASE("deque execution worked examples") {
    // Lone active key deleted.
    auto one = UpdateSequence::deque(1, {1}, {{OpType::DeleteMin, 0}});
    const auto t1 = greedy_deque_execute(one);
    CHECK(t1.cost == 1);
    CHECK(t1.points.at(1, 1) == PointKind::Access);

    // Insertion into the empty set touches itself.
    auto ins = UpdateSequence::deque(1, {}, {{OpType::InsertMax, 1}});
    const auto t2 = greedy_deque_execute(ins);
    CHECK(t2.cost == 1);
    CHECK(t2.points.at(1, 1) == PointKind::Access);

    // Three active keys on the root-2 tree.
    auto ops = UpdateSequence::deque(
        3, {1, 2, 3},
        {{OpType::DeleteMin, 0}, {OpType::DeleteMax, 0}, {OpType::DeleteMin, 0}});
    const auto tree = BSTree::from_insertion(std::vector<int>{2, 1, 3});
    const auto t3 = greedy_deque_execute(ops, &tree);
    const auto want = oracle::naive_deque(ops, &tree);
    CHECK(t3.cost == want.cost);
    CHECK(t3.row_touches == want.rows);
    CHECK(same_sets(t3.points, want.points));

    auto bad = UpdateSequence::deque(1, {}, {{OpType::DeleteMin, 0}});
    CHECK_THROWS_AS(greedy_deque_execute(bad), std::invalid_argument);
    auto bad2 = UpdateSequence::deque(2, {1}, {{OpType::InsertMin, 2}});
    CHECK_THROWS_AS(greedy_deque_execute(bad2), std::invalid_argument);
}

TEST_CASE("deque execution matches the naive simulator and active windows") {
    Rng rng(34);
    for (int trial = 0; trial < 120; ++trial) {
        const int n0 = rng.between(0, 10);
        const int m = rng.between(1, 40);
        const auto ops = gen_concentrated_deque(n0, m, rng);
        std::optional<BSTree> tree;
        if (trial % 2 == 0 && !ops.initial_active.empty()) {
            std::vector<int> shuffled = ops.initial_active;
            for (std::size_t i = shuffled.size(); i-- > 1;)
                std::swap(shuffled[i], shuffled[static_cast<std::size_t>(
                                           rng.below(static_cast<int>(i) + 1))]);
            tree = BSTree::from_insertion(shuffled);
        }
        const auto got = greedy_deque_execute(ops, tree ? &*tree : nullptr);
        const auto want = oracle::naive_deque(ops, tree ? &*tree : nullptr);
        CHECK(got.cost == want.cost);
        CHECK(got.row_touches == want.rows);
        CHECK(same_sets(got.points, want.points));
    }
}

TEST_CASE("flip of the execution equals execution of the flipped input") {
    Rng rng(35);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.between(2, 40);
        const auto x = UpdateSequence::access(rng.permutation(n));
        std::optional<BSTree> tree;
        if (trial % 2 == 0) tree = gen_random_bst(n, rng);
        const auto a = greedy_search_execute(x, tree ? &*tree : nullptr);
        std::optional<BSTree> mirrored;
        if (tree) mirrored = tree->mirrored();
        const auto b =
            greedy_search_execute(x.flipped(), mirrored ? &*mirrored : nullptr);
        CHECK(same_sets(flip_trace(a).points, b.points));
    }
}
