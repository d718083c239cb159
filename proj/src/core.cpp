#include "ramsey/core.hpp"

#include <algorithm>
#include <sstream>

namespace ramsey {

const char* errorName(ErrorCode code) {
    switch (code) {
        case ErrorCode::HorizonTooSmall: return "HorizonTooSmall";
        case ErrorCode::LengthOneGenerator: return "LengthOneGenerator";
        case ErrorCode::NotIncreasing: return "NotIncreasing";
        case ErrorCode::NotAChain: return "NotAChain";
        case ErrorCode::EmptyTree: return "EmptyTree";
        case ErrorCode::NotInDomain: return "NotInDomain";
        case ErrorCode::DomainViolation: return "DomainViolation";
        case ErrorCode::BackwardFailure: return "BackwardFailure";
        case ErrorCode::UniverseTooSmall: return "UniverseTooSmall";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::Overflow: return "Overflow";
    }
    return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(errorName(code)) + ": " + what), code_(code) {}

bool isIncreasing(const IncreasingString& s) {
    for (std::size_t i = 1; i < s.size(); ++i)
        if (s[i - 1] >= s[i]) return false;
    return true;
}

void requireIncreasing(const IncreasingString& s) {
    if (!isIncreasing(s)) throw Error(ErrorCode::NotIncreasing, toString(s));
}

bool lengthLexLess(const IncreasingString& a, const IncreasingString& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

bool isPrefix(const IncreasingString& prefix, const IncreasingString& s) {
    return prefix.size() <= s.size() && std::equal(prefix.begin(), prefix.end(), s.begin());
}

bool isProperPrefix(const IncreasingString& prefix, const IncreasingString& s) {
    return prefix.size() < s.size() && isPrefix(prefix, s);
}

bool isSubsequence(const IncreasingString& f, const IncreasingString& g) {
    std::size_t j = 0;
    for (std::size_t i = 0; i < g.size() && j < f.size(); ++i)
        if (g[i] == f[j]) ++j;
    return j == f.size();
}

bool dominates(const IncreasingString& sigma, const IncreasingString& tau) {
    if (sigma.size() != tau.size()) return false;
    for (std::size_t i = 0; i < sigma.size(); ++i)
        if (sigma[i] > tau[i]) return false;
    return true;
}

std::string toString(const IncreasingString& s) {
    std::ostringstream os;
    os << '<';
    for (std::size_t i = 0; i < s.size(); ++i) os << (i ? "," : "") << s[i];
    os << '>';
    return os.str();
}

Universe::Universe(std::vector<Value> alphabet, std::size_t horizon)
    : alphabet_(std::move(alphabet)), horizon_(horizon) {
    if (!isIncreasing(alphabet_))
        throw Error(ErrorCode::InvalidArgument, "universe alphabet must be strictly increasing");
    if (horizon_ < 1 || horizon_ > alphabet_.size())
        throw Error(ErrorCode::InvalidArgument,
                    "universe needs 1 <= L <= |alphabet| (L=" + std::to_string(horizon_) +
                        ", |alphabet|=" + std::to_string(alphabet_.size()) + ")");
}

Universe Universe::bounded(std::size_t M, std::size_t L) {
    std::vector<Value> a(M);
    for (std::size_t i = 0; i < M; ++i) a[i] = i;
    return Universe(std::move(a), L);
}

bool Universe::contains(Value v) const {
    return std::binary_search(alphabet_.begin(), alphabet_.end(), v);
}

bool Universe::containsAll(const IncreasingString& s) const {
    return std::all_of(s.begin(), s.end(), [&](Value v) { return contains(v); });
}

bool Universe::isPlain() const {
    for (std::size_t i = 0; i < alphabet_.size(); ++i)
        if (alphabet_[i] != i) return false;
    return true;
}

Universe Universe::withHorizon(std::size_t L) const { return Universe(alphabet_, L); }

bool forEachCombination(const std::vector<Value>& alphabet, std::size_t k,
                        const std::function<bool(const IncreasingString&)>& f) {
    const std::size_t n = alphabet.size();
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    IncreasingString s(k);
    while (true) {
        for (std::size_t i = 0; i < k; ++i) s[i] = alphabet[idx[i]];
        if (!f(s)) return false;
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return true;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

bool forEachSubsequence(const IncreasingString& s, std::size_t k,
                        const std::function<bool(const IncreasingString&)>& f) {
    return forEachCombination(s, k, f);
}

std::vector<IncreasingString> fullStrings(const Universe& U) {
    std::vector<IncreasingString> out;
    forEachCombination(U.alphabet(), U.horizon(), [&](const IncreasingString& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        if (r > UINT64_MAX / (n - k + i)) throw Error(ErrorCode::Overflow, "binomial");
        r = r * (n - k + i) / i;
    }
    return r;
}

OpenCode::OpenCode(std::vector<IncreasingString> generators) {
    for (const auto& g : generators) requireIncreasing(g);
    std::sort(generators.begin(), generators.end(), lengthLexLess);
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    // Shorter strings come first, so any prefix of g is already decided.
    for (auto& g : generators) {
        bool extends = false;
        for (std::size_t k = 0; k < g.size() && !extends; ++k) {
            IncreasingString p(g.begin(), g.begin() + static_cast<std::ptrdiff_t>(k));
            extends = std::binary_search(gens_.begin(), gens_.end(), p, lengthLexLess);
        }
        if (!extends) gens_.push_back(std::move(g));
    }
}

std::size_t OpenCode::depth() const { return gens_.empty() ? 0 : gens_.back().size(); }

bool OpenCode::contains(const IncreasingString& g) const {
    return std::binary_search(gens_.begin(), gens_.end(), g, lengthLexLess);
}

Value OpenCode::maxEntry() const {
    Value m = 0;
    for (const auto& g : gens_)
        if (!g.empty()) m = std::max(m, g.back());
    return m;
}

std::size_t ClopenCode::depth() const { return std::max(pos.depth(), neg.depth()); }

const char* sideName(Side s) {
    switch (s) {
        case Side::Lands: return "lands";
        case Side::Avoids: return "avoids";
        case Side::Neither: return "neither";
    }
    return "neither";
}

bool memberPrefix(const IncreasingString& sigma, const OpenCode& P) {
    const std::size_t top = std::min(sigma.size(), P.depth());
    IncreasingString p;
    p.reserve(top);
    for (std::size_t k = 0;; ++k) {
        if (P.contains(p)) return true;
        if (k == top) return false;
        p.push_back(sigma[k]);
    }
}

Side classify(const IncreasingString& h, const OpenCode& P) {
    const std::size_t d = P.depth();
    if (d > h.size())
        throw Error(ErrorCode::HorizonTooSmall,
                    "code depth " + std::to_string(d) + " exceeds horizon " + std::to_string(h.size()));
    const bool lands = forEachSubsequence(h, d, [&](const IncreasingString& g) { return memberPrefix(g, P); });
    if (lands) return Side::Lands;
    for (const auto& g : P.generators())
        if (isSubsequence(g, h)) return Side::Neither;
    return Side::Avoids;
}

Side classify(const IncreasingString& h, const OpenCode& P, const Universe& U) {
    if (h.size() != U.horizon())
        throw Error(ErrorCode::InvalidArgument, "solution length must equal the horizon");
    if (!isIncreasing(h) || !U.containsAll(h))
        throw Error(ErrorCode::InvalidArgument, "solution must be increasing over the alphabet");
    return classify(h, P);
}

OpenCode unionCodes(const OpenCode& P, const OpenCode& Q) {
    std::vector<IncreasingString> all = P.generators();
    all.insert(all.end(), Q.generators().begin(), Q.generators().end());
    return OpenCode(std::move(all));
}

ClopenCode complementClopen(const ClopenCode& D) { return ClopenCode{D.neg, D.pos}; }

bool validateClopen(const ClopenCode& D, const Universe& U) {
    return forEachCombination(U.alphabet(), D.depth(), [&](const IncreasingString& s) {
        return memberPrefix(s, D.pos) != memberPrefix(s, D.neg);
    });
}

}  // namespace ramsey
