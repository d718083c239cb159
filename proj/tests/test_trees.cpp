#include "doctest.h"
#include "support.hpp"

using namespace ramsey;
using S = IncreasingString;
using testutil::code;
using testutil::tree;

TEST_CASE("TreeGen validates prefix closure") {
    CHECK_NOTHROW(tree({{}, {0}, {0, 1}}));
    CHECK_THROWS_AS(tree({{}, {0, 1}}), Error);
    CHECK_THROWS_AS(tree({{}, {1}, {1, 0}}), Error);
    TreeGen T = TreeGen::prefixClosure({{0, 2, 3}, {1, 2}});
    CHECK(T.size() == 6);
    CHECK(T.maxDepth() == 3);
    CHECK(T.children({}) == std::vector<S>{{0}, {1}});
}

TEST_CASE("findFullPath") {
    const Universe U = Universe::bounded(4, 3);
    CHECK(findFullPath(prefixTree({0, 1, 2}), U) == std::optional<S>(S{0, 1, 2}));
    CHECK_FALSE(findFullPath(tree({{}, {1}}), U).has_value());
    CHECK(findFullPath(TreeGen::prefixClosure({{0, 2, 3}, {1, 2}}), U) == std::optional<S>(S{0, 2, 3}));
}

TEST_CASE("kbOrder") {
    TreeGen T({{}, {0}, {1}, {0, 1}});
    CHECK(kbOrder(T) == std::vector<S>{{0, 1}, {0}, {1}, {}});
    CHECK(kbOrder(tree({{}})) == std::vector<S>{{}});
    CHECK_THROWS_AS(kbOrder(TreeGen()), Error);

    auto order = kbOrder(prefixTree({0, 2, 5}));
    CHECK(order == std::vector<S>{{0, 2, 5}, {0, 2}, {0}, {}});
}

TEST_CASE("kbLess is a strict total order on random trees") {
    testutil::Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        const TreeGen T = testutil::randomTree(rng, Universe::bounded(6, 3));
        if (T.empty()) continue;
        std::vector<S> nodes(T.nodes().begin(), T.nodes().end());
        for (const auto& a : nodes) {
            CHECK_FALSE(kbLess(a, a));
            for (const auto& b : nodes) {
                if (a != b) CHECK(kbLess(a, b) != kbLess(b, a));
                for (const auto& c : nodes)
                    if (kbLess(a, b) && kbLess(b, c)) CHECK(kbLess(a, c));
            }
        }
        auto order = kbOrder(T);
        for (std::size_t k = 0; k + 1 < order.size(); ++k) CHECK(kbLess(order[k], order[k + 1]));
    }
}

TEST_CASE("boundedSubtree") {
    TreeGen T = TreeGen::prefixClosure({{0, 2, 3}, {1, 5}});
    TreeGen B = boundedSubtree(T, {1, 3, 4});
    CHECK(B.nodes() == std::set<S>{{}, {0}, {0, 2}, {0, 2, 3}, {1}});
    CHECK(boundedSubtree(T, {}).nodes() == std::set<S>{{}});
    CHECK(boundedSubtree(TreeGen(), {1, 2}).empty());
}

TEST_CASE("full paths of a bounded subtree are dominated full paths of the tree") {
    testutil::Rng rng(32);
    for (int i = 0; i < 200; ++i) {
        const Universe U = Universe::bounded(6, 3);
        const TreeGen T = testutil::randomTree(rng, U);
        const S f = testutil::randomString(rng, U.alphabet(), 3);
        if (auto p = findFullPath(boundedSubtree(T, f), U)) {
            CHECK(T.contains(*p));
            CHECK(dominates(*p, f));
        }
    }
}
