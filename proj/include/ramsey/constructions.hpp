#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ramsey/core.hpp"
#include "ramsey/trees.hpp"

namespace ramsey {

// Injective maps N -> N with decidable range. StringCodePow is PowBase applied
// to string codes; the distinction only records intent.
class EmbeddingMap {
public:
    enum class Kind { Identity, PowBase, StringCodePow };

    static EmbeddingMap identity() { return EmbeddingMap(Kind::Identity, 0); }
    static EmbeddingMap powBase(Value n);
    static EmbeddingMap stringCodePow(Value n);

    Kind kind() const { return kind_; }
    Value base() const { return base_; }
    Value apply(Value i) const;
    std::optional<Value> invert(Value v) const;
    bool inRange(Value v) const { return invert(v).has_value(); }
    std::vector<Value> image(Value count) const;

    bool operator==(const EmbeddingMap&) const = default;

private:
    EmbeddingMap(Kind k, Value b) : kind_(k), base_(b) {}
    Kind kind_;
    Value base_;
};

// n^e with overflow check.
Value checkedPow(Value n, Value e);

// Length-lex rank over increasing strings with entries < bound.
class StringCoder {
public:
    explicit StringCoder(Value bound);
    Value bound() const { return bound_; }
    Value code(const IncreasingString& s) const;
    IncreasingString decode(Value c) const;

private:
    Value bound_;
};

bool avoidSideTreeMember(const IncreasingString& sigma, const OpenCode& P);

IncreasingString elementPowerString(Value n, const IncreasingString& f);
OpenCode elementPowerCode(Value n, const OpenCode& P);
// Image of U's alphabet under i -> n^(i+1), same horizon.
Universe elementPowerUniverse(Value n, const Universe& U);

// Replaces each generator shorter than n by all its extensions of length n
// over the alphabet. Cone-equivalent on strings of length >= n.
OpenCode padToLength(const OpenCode& P, std::size_t n, const Universe& U);

using PairedString = std::vector<std::pair<Value, Value>>;

Value cantorPair(Value a, Value b);
std::pair<Value, Value> cantorUnpair(Value v);
IncreasingString pairCode(const PairedString& x);
PairedString unpairString(const IncreasingString& s);
IncreasingString projectPaired(int coordinate, const PairedString& x);
// Pair coding of f and g, which must have equal length.
IncreasingString boxString(const IncreasingString& f, const IncreasingString& g);

OpenCode boxProductCodes(const OpenCode& P, const OpenCode& Q, const Universe& U);
// Alphabet of all pair codes over U, same horizon.
Universe boxUniverse(const Universe& U);

// Generators of length 2..U.horizon() over U's alphabet.
OpenCode solovayCode(const TreeGen& T, const EmbeddingMap& phi, const Universe& U);

// Universes for a Solovay instance built from a tree over treeU = (M, L).
// Generators are searched up to the tree horizon; solutions are evaluated at a
// stretched horizon so that every string's tail sits above the tree's entries.
struct SolovayUniverse {
    Universe generation;
    Universe evaluation;
};
SolovayUniverse solovayUniverse(const Universe& treeU, const EmbeddingMap& phi);

struct DescribedPaths {
    ClopenCode code;
    std::vector<Value> alphabet;  // images of the tree's nodes, increasing
};

DescribedPaths describePathCode(const TreeGen& T, const EmbeddingMap& phi, const StringCoder& coder);
IncreasingString decodePath(const IncreasingString& h, const EmbeddingMap& phi, const StringCoder& coder);

ClopenCode clopenDoubleCode(const ClopenCode& D, const Universe& U);

}  // namespace ramsey
