#include <set>

#include "doctest.h"
#include "support.hpp"

using namespace ramsey;
using S = IncreasingString;
using testutil::code;
using testutil::tree;

TEST_CASE("avoidSideTreeMember") {
    CHECK(avoidSideTreeMember({0, 2, 4}, code({{1, 3}})));
    CHECK_FALSE(avoidSideTreeMember({1, 3, 5}, code({{1, 3}})));
    CHECK(avoidSideTreeMember({}, code({{0}, {1, 2}})));
    CHECK_FALSE(avoidSideTreeMember({}, code({S{}})));
}

TEST_CASE("avoid-side tree is prefix closed and matches the oracle") {
    testutil::Rng rng(21);
    for (int i = 0; i < 100; ++i) {
        const Universe U = Universe::bounded(6, 3);
        const OpenCode P = testutil::randomCode(rng, U);
        const TreeGen T = avoidSideTree(P, U);
        for (const auto& s : T.nodes()) {
            if (!s.empty()) CHECK(T.contains(S(s.begin(), s.end() - 1)));
            for (const auto& g : P.generators()) CHECK_FALSE(testutil::naiveSubsequence(g, s));
        }
    }
}

TEST_CASE("element powers") {
    CHECK(elementPowerString(2, {0, 1, 3}) == S{2, 4, 16});
    CHECK(elementPowerString(3, {}).empty());
    CHECK(elementPowerString(2, {0}) == S{2});
    CHECK(elementPowerCode(2, code({{1, 3}})) == code({{4, 16}}));
    CHECK(elementPowerCode(2, OpenCode()).empty());
    CHECK(elementPowerCode(3, code({{0}, {1, 2}})) == code({{3}, {9, 27}}));
    CHECK(elementPowerUniverse(2, Universe::bounded(3, 2)).alphabet() == std::vector<Value>{2, 4, 8});
    CHECK_THROWS_AS(checkedPow(2, 70), Error);
}

TEST_CASE("embedding maps invert on their range") {
    auto pow3 = EmbeddingMap::powBase(3);
    CHECK(pow3.apply(0) == 3);
    CHECK(pow3.invert(27) == std::optional<Value>(2));
    CHECK_FALSE(pow3.inRange(10));
    CHECK_FALSE(pow3.inRange(1));
    auto id = EmbeddingMap::identity();
    CHECK(id.invert(5) == std::optional<Value>(5));
    CHECK_THROWS_AS(EmbeddingMap::powBase(1), Error);
}

TEST_CASE("string coder is a length-lex bijection") {
    StringCoder c(5);
    CHECK(c.code({}) == 0);
    CHECK(c.code({0}) == 1);
    CHECK(c.code({4}) == 5);
    CHECK(c.code({0, 1}) == 6);
    std::vector<S> all;
    for (std::size_t k = 0; k <= 5; ++k)
        forEachCombination(testutil::range(5), k, [&](const S& s) {
            all.push_back(s);
            return true;
        });
    std::sort(all.begin(), all.end(), lengthLexLess);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(c.code(all[i]) == i);
        CHECK(c.decode(i) == all[i]);
    }
    CHECK_THROWS_AS(c.decode(all.size()), Error);
    CHECK_THROWS_AS(c.code({7}), Error);
}

TEST_CASE("pairing") {
    for (Value a = 0; a < 20; ++a)
        for (Value b = 0; b < 20; ++b) CHECK(cantorUnpair(cantorPair(a, b)) == std::make_pair(a, b));
    CHECK(cantorPair(0, 1) < cantorPair(1, 2));
    PairedString x{{0, 1}, {2, 3}};
    CHECK(projectPaired(1, x) == S{0, 2});
    CHECK(projectPaired(2, x) == S{1, 3});
    CHECK_THROWS_AS(projectPaired(1, PairedString{{0, 1}, {0, 2}}), Error);
    CHECK(unpairString(pairCode(x)) == x);
    CHECK(boxString({0, 2}, {1, 3}) == pairCode(x));
}

TEST_CASE("boxProductCodes") {
    const Universe U = Universe::bounded(4, 2);
    CHECK(boxProductCodes(code({{0, 2}}), code({{1}}), U) ==
          code({pairCode({{0, 1}, {2, 2}}), pairCode({{0, 1}, {2, 3}})}));
    CHECK(boxProductCodes(OpenCode(), code({{1}}), U).empty());
    CHECK(boxProductCodes(code({{0, 1}}), code({{0, 1}}), U) == code({pairCode({{0, 0}, {1, 1}})}));
    try {
        boxProductCodes(code({{1}}), code({{0, 1}}), U);
        FAIL("expected LengthOneGenerator");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::LengthOneGenerator);
    }
}

TEST_CASE("solovayCode") {
    const auto id = EmbeddingMap::identity();
    {
        TreeGen T({{}, {1}});
        OpenCode W = solovayCode(T, id, Universe::bounded(4, 3));
        CHECK(memberPrefix({1, 2}, W));
    }
    {
        TreeGen T({{}, {0}, {0, 1}, {0, 1, 2}});
        OpenCode W = solovayCode(T, id, Universe::bounded(4, 3));
        CHECK_FALSE(memberPrefix({0, 1, 2}, W));
    }
    {
        TreeGen T = tree({{}});
        const Universe U = Universe::bounded(3, 3);
        OpenCode W = solovayCode(T, id, U);
        for (std::size_t k = 2; k <= 3; ++k)
            for (const auto& s : fullStrings(U.withHorizon(k))) CHECK(memberPrefix(s, W));
        CHECK_FALSE(memberPrefix({0}, W));
    }
}

TEST_CASE("solovayCode generators follow the domination rule") {
    testutil::Rng rng(22);
    const auto id = EmbeddingMap::identity();
    for (int i = 0; i < 100; ++i) {
        const Universe U = Universe::bounded(5, 3);
        const TreeGen T = testutil::randomTree(rng, U);
        const OpenCode W = solovayCode(T, id, U);
        for (std::size_t k = 2; k <= 3; ++k)
            for (const auto& s : fullStrings(U.withHorizon(k))) {
                bool clear = true;
                for (const auto& t : T.nodes())
                    if (dominates(t, s)) clear = false;
                bool clearPrefix = false;
                for (std::size_t j = 2; j <= k; ++j) {
                    bool c = true;
                    for (const auto& t : T.nodes())
                        if (dominates(t, S(s.begin(), s.begin() + j))) c = false;
                    clearPrefix = clearPrefix || c;
                }
                CHECK(memberPrefix(s, W) == clearPrefix);
                if (W.contains(s)) CHECK(clear);
            }
    }
}

TEST_CASE("describePathCode and decodePath") {
    const auto id = EmbeddingMap::identity();
    const StringCoder c(4);
    TreeGen T({{}, {0}, {0, 1}});
    auto dp = describePathCode(T, id, c);
    const Value e = c.code({}), a = c.code({0}), b = c.code({0, 1});
    CHECK(dp.code.pos.contains({e, a}));
    CHECK(dp.code.pos.contains({e, b}));
    CHECK(dp.code.pos.contains({a, b}));
    CHECK(dp.code.pos.size() == 3);
    CHECK(validateClopen(dp.code, Universe(dp.alphabet, 2)));

    CHECK(describePathCode(tree({{}}), id, c).code.pos.empty());

    const StringCoder big(5);
    CHECK(decodePath({big.code({0}), big.code({0, 1}), big.code({0, 1, 3})}, id, big) == S{0, 1, 3});
    CHECK(decodePath({big.code({}), big.code({2})}, id, big) == S{2});
    try {
        decodePath({big.code({0}), big.code({1})}, id, big);
        FAIL("expected NotAChain");
    } catch (const Error& err) {
        CHECK(err.code() == ErrorCode::NotAChain);
    }
}

TEST_CASE("clopenDoubleCode") {
    const Universe U = Universe::bounded(4, 3);
    ClopenCode D{code({{0}}), code({{1}, {2}, {3}})};
    ClopenCode E = clopenDoubleCode(D, U);
    CHECK(E.pos == code({{1, 2}, {1, 3}, {2, 3}}));
    CHECK(validateClopen(E, U));
    ClopenCode F = clopenDoubleCode(ClopenCode{OpenCode(), code({S{}})}, U);
    CHECK(F.pos == code({S{}}));
}

TEST_CASE("clopenDoubleCode preserves homogeneous solutions at U=(4,3)") {
    const Universe U = Universe::bounded(4, 3);
    testutil::Rng rng(23);
    for (int i = 0; i < 60; ++i) {
        ClopenCode D = testutil::randomClopen(rng, U, 1);
        ClopenCode E = clopenDoubleCode(D, U);
        for (const auto& h : fullStrings(U)) {
            const bool hsD = classify(h, D.pos, U) != Side::Neither;
            const bool hsE = classify(h, E.pos, U) != Side::Neither;
            CHECK(hsD == hsE);
        }
    }
}
