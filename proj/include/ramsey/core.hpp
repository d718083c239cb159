#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ramsey {

using Value = std::uint64_t;

// Strictly increasing finite string; the empty string is allowed.
using IncreasingString = std::vector<Value>;

enum class ErrorCode {
    HorizonTooSmall,
    LengthOneGenerator,
    NotIncreasing,
    NotAChain,
    EmptyTree,
    NotInDomain,
    DomainViolation,
    BackwardFailure,
    UniverseTooSmall,
    InvalidArgument,
    ParseError,
    Overflow,
};

const char* errorName(ErrorCode code);

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what);
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

bool isIncreasing(const IncreasingString& s);
void requireIncreasing(const IncreasingString& s);

// Shorter strings first, then lexicographic.
bool lengthLexLess(const IncreasingString& a, const IncreasingString& b);

bool isPrefix(const IncreasingString& prefix, const IncreasingString& s);
bool isProperPrefix(const IncreasingString& prefix, const IncreasingString& s);
bool isSubsequence(const IncreasingString& f, const IncreasingString& g);

// sigma ⊴ tau: equal length and pointwise <=.
bool dominates(const IncreasingString& sigma, const IncreasingString& tau);

std::string toString(const IncreasingString& s);

// Finite alphabet plus horizon. The plain (M, L) universe has alphabet {0..M-1};
// lifted universes carry the image of an embedding.
class Universe {
public:
    Universe() = default;
    Universe(std::vector<Value> alphabet, std::size_t horizon);
    static Universe bounded(std::size_t M, std::size_t L);

    const std::vector<Value>& alphabet() const { return alphabet_; }
    std::size_t size() const { return alphabet_.size(); }
    std::size_t horizon() const { return horizon_; }
    bool contains(Value v) const;
    bool containsAll(const IncreasingString& s) const;
    bool isPlain() const;
    Universe withHorizon(std::size_t L) const;

    bool operator==(const Universe&) const = default;

private:
    std::vector<Value> alphabet_;
    std::size_t horizon_ = 0;
};

// Calls f on each k-element increasing string over the alphabet in
// lexicographic order; f returns false to stop. Returns false if stopped.
bool forEachCombination(const std::vector<Value>& alphabet, std::size_t k,
                        const std::function<bool(const IncreasingString&)>& f);

// Same, over the subsequences of s of length k.
bool forEachSubsequence(const IncreasingString& s, std::size_t k,
                        const std::function<bool(const IncreasingString&)>& f);

std::vector<IncreasingString> fullStrings(const Universe& U);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Prefix-free antichain of generators, kept sorted length-lexicographically.
class OpenCode {
public:
    OpenCode() = default;
    explicit OpenCode(std::vector<IncreasingString> generators);

    const std::vector<IncreasingString>& generators() const { return gens_; }
    std::size_t size() const { return gens_.size(); }
    bool empty() const { return gens_.empty(); }
    std::size_t depth() const;
    bool contains(const IncreasingString& g) const;
    Value maxEntry() const;

    bool operator==(const OpenCode&) const = default;

private:
    std::vector<IncreasingString> gens_;
};

struct ClopenCode {
    OpenCode pos;
    OpenCode neg;

    std::size_t depth() const;
    bool operator==(const ClopenCode&) const = default;
};

enum class Side { Lands, Avoids, Neither };

const char* sideName(Side s);

bool memberPrefix(const IncreasingString& sigma, const OpenCode& P);

// Horizon is |h|.
Side classify(const IncreasingString& h, const OpenCode& P);
// Checks |h| = L and entries in the alphabet.
Side classify(const IncreasingString& h, const OpenCode& P, const Universe& U);

OpenCode unionCodes(const OpenCode& P, const OpenCode& Q);
ClopenCode complementClopen(const ClopenCode& D);
bool validateClopen(const ClopenCode& D, const Universe& U);

struct HSReport {
    IncreasingString solution;
    Side side = Side::Neither;

    bool operator==(const HSReport&) const = default;
};

}  // namespace ramsey
