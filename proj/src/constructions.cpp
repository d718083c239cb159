#include "ramsey/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ramsey {

EmbeddingMap EmbeddingMap::powBase(Value n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "power base must be >= 2");
    return EmbeddingMap(Kind::PowBase, n);
}

EmbeddingMap EmbeddingMap::stringCodePow(Value n) {
    if (n < 2) throw Error(ErrorCode::InvalidArgument, "power base must be >= 2");
    return EmbeddingMap(Kind::StringCodePow, n);
}

Value checkedPow(Value n, Value e) {
    Value r = 1;
    for (Value i = 0; i < e; ++i) {
        if (r > UINT64_MAX / n) throw Error(ErrorCode::Overflow, std::to_string(n) + "^" + std::to_string(e));
        r *= n;
    }
    return r;
}

Value EmbeddingMap::apply(Value i) const {
    if (kind_ == Kind::Identity) return i;
    return checkedPow(base_, i + 1);
}

std::optional<Value> EmbeddingMap::invert(Value v) const {
    if (kind_ == Kind::Identity) return v;
    if (v < base_) return std::nullopt;
    Value e = 0;
    while (v % base_ == 0) {
        v /= base_;
        ++e;
    }
    if (v != 1) return std::nullopt;
    return e - 1;
}

std::vector<Value> EmbeddingMap::image(Value count) const {
    std::vector<Value> out;
    out.reserve(count);
    for (Value i = 0; i < count; ++i) out.push_back(apply(i));
    return out;
}

StringCoder::StringCoder(Value bound) : bound_(bound) {}

Value StringCoder::code(const IncreasingString& s) const {
    requireIncreasing(s);
    if (!s.empty() && s.back() >= bound_)
        throw Error(ErrorCode::InvalidArgument, "string entry above coding bound: " + toString(s));
    const Value k = s.size();
    Value c = 0;
    for (Value l = 0; l < k; ++l) c += binomial(bound_, l);
    Value prev = 0;
    for (Value i = 0; i < k; ++i) {
        for (Value y = (i ? prev + 1 : 0); y < s[i]; ++y) c += binomial(bound_ - 1 - y, k - 1 - i);
        prev = s[i];
    }
    return c;
}

IncreasingString StringCoder::decode(Value c) const {
    Value k = 0;
    while (true) {
        if (k > bound_) throw Error(ErrorCode::InvalidArgument, "code out of range");
        const Value n = binomial(bound_, k);
        if (c < n) break;
        c -= n;
        ++k;
    }
    IncreasingString s;
    Value y = 0;
    for (Value i = 0; i < k; ++i) {
        while (true) {
            const Value n = binomial(bound_ - 1 - y, k - 1 - i);
            if (c < n) break;
            c -= n;
            ++y;
        }
        s.push_back(y++);
    }
    return s;
}

bool avoidSideTreeMember(const IncreasingString& sigma, const OpenCode& P) {
    for (const auto& g : P.generators())
        if (isSubsequence(g, sigma)) return false;
    return true;
}

IncreasingString elementPowerString(Value n, const IncreasingString& f) {
    requireIncreasing(f);
    const auto phi = EmbeddingMap::powBase(n);
    IncreasingString out;
    out.reserve(f.size());
    for (Value v : f) out.push_back(phi.apply(v));
    return out;
}

OpenCode elementPowerCode(Value n, const OpenCode& P) {
    std::vector<IncreasingString> gens;
    for (const auto& g : P.generators()) gens.push_back(elementPowerString(n, g));
    return OpenCode(std::move(gens));
}

Universe elementPowerUniverse(Value n, const Universe& U) {
    return Universe(elementPowerString(n, U.alphabet()), U.horizon());
}

namespace {

// All strings of length n over the alphabet that extend sigma.
std::vector<IncreasingString> extensionsTo(const IncreasingString& sigma, std::size_t n,
                                           const std::vector<Value>& alphabet) {
    std::vector<IncreasingString> out;
    if (sigma.size() >= n) {
        out.push_back(sigma);
        return out;
    }
    std::vector<Value> above;
    for (Value a : alphabet)
        if (sigma.empty() || a > sigma.back()) above.push_back(a);
    forEachCombination(above, n - sigma.size(), [&](const IncreasingString& tail) {
        IncreasingString s = sigma;
        s.insert(s.end(), tail.begin(), tail.end());
        out.push_back(std::move(s));
        return true;
    });
    return out;
}

}  // namespace

OpenCode padToLength(const OpenCode& P, std::size_t n, const Universe& U) {
    std::vector<IncreasingString> gens;
    for (const auto& g : P.generators())
        for (auto& e : extensionsTo(g, n, U.alphabet())) gens.push_back(std::move(e));
    return OpenCode(std::move(gens));
}

Value cantorPair(Value a, Value b) {
    const Value s = a + b;
    if (s < a || s >= (Value{1} << 31)) throw Error(ErrorCode::Overflow, "cantor pair");
    return s * (s + 1) / 2 + b;
}

std::pair<Value, Value> cantorUnpair(Value v) {
    Value w = 0;
    // Largest w with w(w+1)/2 <= v.
    Value lo = 0, hi = 1;
    while (hi * (hi + 1) / 2 <= v) hi *= 2;
    while (lo < hi) {
        const Value mid = lo + (hi - lo + 1) / 2;
        if (mid * (mid + 1) / 2 <= v) lo = mid;
        else hi = mid - 1;
    }
    w = lo;
    const Value b = v - w * (w + 1) / 2;
    return {w - b, b};
}

IncreasingString pairCode(const PairedString& x) {
    IncreasingString out;
    out.reserve(x.size());
    for (const auto& [a, b] : x) out.push_back(cantorPair(a, b));
    requireIncreasing(out);
    return out;
}

PairedString unpairString(const IncreasingString& s) {
    PairedString out;
    out.reserve(s.size());
    for (Value v : s) out.push_back(cantorUnpair(v));
    return out;
}

IncreasingString projectPaired(int coordinate, const PairedString& x) {
    if (coordinate != 1 && coordinate != 2) throw Error(ErrorCode::InvalidArgument, "coordinate must be 1 or 2");
    IncreasingString out;
    out.reserve(x.size());
    for (const auto& p : x) out.push_back(coordinate == 1 ? p.first : p.second);
    if (!isIncreasing(out))
        throw Error(ErrorCode::NotIncreasing, "projection " + std::to_string(coordinate) + " gives " + toString(out));
    return out;
}

IncreasingString boxString(const IncreasingString& f, const IncreasingString& g) {
    if (f.size() != g.size()) throw Error(ErrorCode::InvalidArgument, "box of strings with different lengths");
    PairedString x;
    for (std::size_t i = 0; i < f.size(); ++i) x.emplace_back(f[i], g[i]);
    return pairCode(x);
}

OpenCode boxProductCodes(const OpenCode& P, const OpenCode& Q, const Universe& U) {
    for (const auto& s : P.generators())
        if (s.size() < 2)
            throw Error(ErrorCode::LengthOneGenerator, "left factor generator " + toString(s) + " is shorter than 2");
    std::vector<IncreasingString> gens;
    for (const auto& s : P.generators()) {
        for (const auto& t : Q.generators()) {
            const std::size_t N = std::max(s.size(), t.size());
            const auto rhos = extensionsTo(s, N, U.alphabet());
            const auto thetas = extensionsTo(t, N, U.alphabet());
            for (const auto& r : rhos)
                for (const auto& th : thetas) gens.push_back(boxString(r, th));
        }
    }
    return OpenCode(std::move(gens));
}

Universe boxUniverse(const Universe& U) {
    std::vector<Value> a;
    for (Value x : U.alphabet())
        for (Value y : U.alphabet()) a.push_back(cantorPair(x, y));
    std::sort(a.begin(), a.end());
    return Universe(std::move(a), U.horizon());
}

OpenCode solovayCode(const TreeGen& T, const EmbeddingMap& phi, const Universe& U) {
    std::map<std::size_t, std::vector<IncreasingString>> byLength;
    for (const auto& n : T.nodes()) byLength[n.size()].push_back(n);
    std::set<IncreasingString> gens;
    for (std::size_t k = 2; k <= U.horizon(); ++k) {
        const auto& level = byLength[k];
        forEachCombination(U.alphabet(), k, [&](const IncreasingString& s) {
            if (!phi.inRange(s[0]) || !phi.inRange(s[1])) return true;
            for (std::size_t j = 2; j < k; ++j)
                if (gens.count(IncreasingString(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(j)))) return true;
            for (const auto& t : level)
                if (dominates(t, s)) return true;
            gens.insert(s);
            return true;
        });
    }
    return OpenCode(std::vector<IncreasingString>(gens.begin(), gens.end()));
}

SolovayUniverse solovayUniverse(const Universe& treeU, const EmbeddingMap& phi) {
    const Value M = treeU.alphabet().back() + 1;
    const std::size_t L = treeU.horizon();
    const std::size_t stretched = L + static_cast<std::size_t>(M) - 1;
    const std::size_t K = stretched + std::max<std::size_t>(L, static_cast<std::size_t>(M) - 1);
    auto alphabet = phi.image(K);
    return SolovayUniverse{Universe(alphabet, L), Universe(alphabet, stretched)};
}

DescribedPaths describePathCode(const TreeGen& T, const EmbeddingMap& phi, const StringCoder& coder) {
    std::map<IncreasingString, Value> img;
    for (const auto& n : T.nodes()) img[n] = phi.apply(coder.code(n));
    std::vector<IncreasingString> pos;
    for (const auto& [a, va] : img)
        for (const auto& [b, vb] : img)
            if (isProperPrefix(a, b) && va < vb) pos.push_back({va, vb});
    std::vector<Value> alphabet;
    for (const auto& [n, v] : img) alphabet.push_back(v);
    std::sort(alphabet.begin(), alphabet.end());
    OpenCode posCode(std::move(pos));
    std::vector<IncreasingString> neg;
    forEachCombination(alphabet, 2, [&](const IncreasingString& s) {
        if (!memberPrefix(s, posCode)) neg.push_back(s);
        return true;
    });
    return DescribedPaths{ClopenCode{posCode, OpenCode(std::move(neg))}, std::move(alphabet)};
}

IncreasingString decodePath(const IncreasingString& h, const EmbeddingMap& phi, const StringCoder& coder) {
    IncreasingString last;
    for (std::size_t k = 0; k < h.size(); ++k) {
        const auto c = phi.invert(h[k]);
        if (!c) throw Error(ErrorCode::NotAChain, std::to_string(h[k]) + " is outside the embedding's range");
        IncreasingString s = coder.decode(*c);
        if (k > 0 && !isProperPrefix(last, s))
            throw Error(ErrorCode::NotAChain, toString(last) + " is not a proper prefix of " + toString(s));
        last = std::move(s);
    }
    return last;
}

ClopenCode clopenDoubleCode(const ClopenCode& D, const Universe& U) {
    std::vector<IncreasingString> pos;
    for (const OpenCode* side : {&D.pos, &D.neg})
        for (const auto& s : side->generators())
            for (const auto& t : side->generators()) {
                IncreasingString c = s;
                c.insert(c.end(), t.begin(), t.end());
                if (isIncreasing(c)) pos.push_back(std::move(c));
            }
    OpenCode posCode(std::move(pos));
    std::vector<IncreasingString> neg;
    forEachCombination(U.alphabet(), 2 * D.depth(), [&](const IncreasingString& s) {
        if (!memberPrefix(s, posCode)) neg.push_back(s);
        return true;
    });
    return ClopenCode{posCode, OpenCode(std::move(neg))};
}

}  // namespace ramsey
