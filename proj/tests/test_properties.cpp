// Construction laws at sizes small enough for every ctest run. The acceptance
// binary runs the same checks at larger counts.

#include "doctest.h"
#include "laws.hpp"
#include "support.hpp"

using namespace ramsey;
using S = IncreasingString;

#define CHECK_LAW(expr)                  \
    do {                                 \
        const auto t_ = (expr);          \
        CHECK_MESSAGE(t_.ok(), t_.first); \
    } while (0)

TEST_CASE("avoid-side tree law") { CHECK_LAW(laws::avoidTreeLaw(Universe::bounded(6, 3), 15, 1)); }
TEST_CASE("element power law") { CHECK_LAW(laws::powLaw(20, 2)); }
TEST_CASE("box product law, exhaustive at M=4, L=2") { CHECK_LAW(laws::boxLawExhaustive(Universe::bounded(4, 2))); }
TEST_CASE("union law") { CHECK_LAW(laws::unionLaw(20, 3)); }
TEST_CASE("Solovay law") { CHECK_LAW(laws::solovayLaw(20, 4)); }
TEST_CASE("describe law") { CHECK_LAW(laws::describeLaw(20, 5)); }
TEST_CASE("KB order law") { CHECK_LAW(laws::kbLaw(40, 6)); }

TEST_CASE("classification is inherited by longer strings") {
    // If h lands (avoids) then so does every full-length subsequence of a longer string built on h.
    testutil::Rng rng(61);
    for (int i = 0; i < 200; ++i) {
        const std::size_t M = testutil::pick(rng, 3, 7), L = testutil::pick(rng, 1, M - 1);
        const Universe U = Universe::bounded(M, L), V = Universe::bounded(M, L + 1);
        const OpenCode P = testutil::randomCode(rng, U);
        for (const auto& g : fullStrings(V)) {
            const Side outer = classify(g, P, V);
            if (outer == Side::Neither) continue;
            for (const auto& h : testutil::allSubsequences(g))
                if (h.size() == L) CHECK(classify(h, P, U) == outer);
        }
    }
}

TEST_CASE("complement swaps the sides of a clopen code") {
    testutil::Rng rng(62);
    for (int i = 0; i < 100; ++i) {
        const Universe U = Universe::bounded(testutil::pick(rng, 3, 6), 2);
        const ClopenCode D = testutil::randomClopen(rng, U, testutil::pick(rng, 1, 2));
        const ClopenCode C = complementClopen(D);
        CHECK(complementClopen(C) == D);
        CHECK(validateClopen(C, U));
        for (const auto& h : fullStrings(U)) {
            for (const auto& s : testutil::allSubsequences(h)) {
                if (s.size() != D.pos.depth() && s.size() != D.neg.depth()) continue;
                CHECK(memberPrefix(s, C.pos) == memberPrefix(s, D.neg));
            }
        }
    }
}

TEST_CASE("avoiding is the same as being a full path of the avoid-side tree") {
    testutil::Rng rng(63);
    for (int i = 0; i < 150; ++i) {
        const Universe U = Universe::bounded(testutil::pick(rng, 2, 7), 2);
        const OpenCode P = testutil::randomCode(rng, U);
        const TreeGen T = avoidSideTree(P, U);
        for (const auto& h : fullStrings(U)) CHECK((classify(h, P, U) == Side::Avoids) == T.contains(h));
    }
}
