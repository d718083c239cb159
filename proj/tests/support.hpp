#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "ramsey/constructions.hpp"
#include "ramsey/core.hpp"
#include "ramsey/trees.hpp"

namespace testutil {

using namespace ramsey;
using Rng = std::mt19937_64;

inline OpenCode code(std::vector<IncreasingString> g) { return OpenCode(std::move(g)); }
inline TreeGen tree(std::vector<IncreasingString> nodes) { return TreeGen(std::move(nodes)); }

inline std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline IncreasingString randomString(Rng& rng, const std::vector<Value>& alphabet, std::size_t len) {
    std::vector<Value> a = alphabet;
    std::shuffle(a.begin(), a.end(), rng);
    a.resize(std::min(len, a.size()));
    std::sort(a.begin(), a.end());
    return a;
}

inline std::vector<Value> range(Value n) {
    std::vector<Value> v(n);
    for (Value i = 0; i < n; ++i) v[i] = i;
    return v;
}

// Generators of length 1..maxLen, occasionally the empty or full code.
inline OpenCode randomCode(Rng& rng, const Universe& U, std::size_t maxGens = 6) {
    const auto roll = pick(rng, 0, 24);
    if (roll == 0) return OpenCode();
    if (roll == 1) return OpenCode({IncreasingString{}});
    std::vector<IncreasingString> g;
    for (std::size_t i = 0, n = pick(rng, 1, maxGens); i < n; ++i)
        g.push_back(randomString(rng, U.alphabet(), pick(rng, 1, U.horizon())));
    return OpenCode(g);
}

template <class Keep>
OpenCode randomUniformCode(Rng& rng, const std::vector<Value>& alphabet, std::size_t d, double density, Keep keep) {
    std::bernoulli_distribution coin(density);
    std::vector<IncreasingString> g;
    forEachCombination(alphabet, d, [&](const IncreasingString& s) {
        if (keep(s) && coin(rng)) g.push_back(s);
        return true;
    });
    return OpenCode(g);
}

inline ClopenCode randomClopen(Rng& rng, const Universe& U, std::size_t d) {
    std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.1, 0.9)(rng));
    std::vector<IncreasingString> pos, neg;
    forEachCombination(U.alphabet(), d, [&](const IncreasingString& s) {
        (coin(rng) ? pos : neg).push_back(s);
        return true;
    });
    return ClopenCode{OpenCode(pos), OpenCode(neg)};
}

inline TreeGen randomTree(Rng& rng, const Universe& U, std::size_t maxLeaves = 8) {
    std::vector<IncreasingString> leaves;
    for (std::size_t i = 0, n = pick(rng, 0, maxLeaves); i < n; ++i)
        leaves.push_back(randomString(rng, U.alphabet(), pick(rng, 1, U.horizon())));
    return TreeGen::prefixClosure(leaves);
}

// Oracles below avoid the library's helpers on purpose.

inline std::vector<IncreasingString> allSubsequences(const IncreasingString& h) {
    std::vector<IncreasingString> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << h.size()); ++mask) {
        IncreasingString s;
        for (std::size_t i = 0; i < h.size(); ++i)
            if (mask >> i & 1) s.push_back(h[i]);
        out.push_back(s);
    }
    return out;
}

inline bool naiveSubsequence(const IncreasingString& f, const IncreasingString& g) {
    for (const auto& s : allSubsequences(g))
        if (s == f) return true;
    return false;
}

inline bool naivePrefixIn(const IncreasingString& s, const std::vector<IncreasingString>& gens) {
    for (const auto& g : gens)
        if (g.size() <= s.size() && std::equal(g.begin(), g.end(), s.begin())) return true;
    return false;
}

inline Side naiveClassify(const IncreasingString& h, const OpenCode& P) {
    const auto subs = allSubsequences(h);
    std::size_t d = 0;
    for (const auto& g : P.generators()) d = std::max(d, g.size());
    bool lands = !P.empty();
    bool avoids = true;
    for (const auto& s : subs) {
        if (s.size() == d && !naivePrefixIn(s, P.generators())) lands = false;
        for (const auto& g : P.generators())
            if (s == g) avoids = false;
    }
    if (lands) return Side::Lands;
    if (avoids) return Side::Avoids;
    return Side::Neither;
}

// Increasing strings of length L over the alphabet, by nested recursion.
inline void naiveFull(const std::vector<Value>& a, std::size_t L, std::size_t from, IncreasingString& cur,
                      std::vector<IncreasingString>& out) {
    if (cur.size() == L) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < a.size(); ++i) {
        cur.push_back(a[i]);
        naiveFull(a, L, i + 1, cur, out);
        cur.pop_back();
    }
}

inline std::vector<IncreasingString> naiveFull(const Universe& U) {
    std::vector<IncreasingString> out;
    IncreasingString cur;
    naiveFull(U.alphabet(), U.horizon(), 0, cur, out);
    return out;
}

}  // namespace testutil
