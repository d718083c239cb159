#include "ramsey/trees.hpp"

#include <algorithm>

#include "ramsey/constructions.hpp"

namespace ramsey {

TreeGen::TreeGen(std::vector<IncreasingString> nodes) {
    for (auto& n : nodes) {
        requireIncreasing(n);
        nodes_.insert(std::move(n));
    }
    for (const auto& n : nodes_) {
        if (n.empty()) continue;
        IncreasingString parent(n.begin(), n.end() - 1);
        if (!nodes_.count(parent))
            throw Error(ErrorCode::InvalidArgument, "tree is not prefix-closed at " + toString(n));
    }
}

TreeGen TreeGen::prefixClosure(const std::vector<IncreasingString>& strings) {
    std::vector<IncreasingString> all;
    for (const auto& s : strings) {
        requireIncreasing(s);
        for (std::size_t k = 0; k <= s.size(); ++k)
            all.emplace_back(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
    }
    return TreeGen(std::move(all));
}

std::size_t TreeGen::maxDepth() const {
    std::size_t d = 0;
    for (const auto& n : nodes_) d = std::max(d, n.size());
    return d;
}

Value TreeGen::maxEntry() const {
    Value m = 0;
    for (const auto& n : nodes_)
        if (!n.empty()) m = std::max(m, n.back());
    return m;
}

std::vector<IncreasingString> TreeGen::children(const IncreasingString& s) const {
    std::vector<IncreasingString> out;
    for (auto it = nodes_.upper_bound(s); it != nodes_.end() && isPrefix(s, *it); ++it)
        if (it->size() == s.size() + 1) out.push_back(*it);
    return out;
}

bool kbLess(const IncreasingString& sigma, const IncreasingString& tau) {
    if (sigma == tau) return false;
    if (isPrefix(tau, sigma)) return true;
    if (isPrefix(sigma, tau)) return false;
    return sigma < tau;
}

std::vector<IncreasingString> kbOrder(const TreeGen& T) {
    if (T.empty()) throw Error(ErrorCode::EmptyTree, "Kleene-Brouwer order of an empty tree");
    std::vector<IncreasingString> out(T.nodes().begin(), T.nodes().end());
    std::sort(out.begin(), out.end(), kbLess);
    return out;
}

std::optional<IncreasingString> findFullPath(const TreeGen& T, const Universe& U) {
    // std::set iterates lexicographically, so the first hit is the least.
    for (const auto& n : T.nodes())
        if (n.size() == U.horizon()) return n;
    return std::nullopt;
}

TreeGen boundedSubtree(const TreeGen& T, const IncreasingString& f) {
    std::vector<IncreasingString> keep;
    for (const auto& n : T.nodes()) {
        if (n.size() > f.size()) continue;
        bool ok = true;
        for (std::size_t i = 0; i < n.size() && ok; ++i) ok = n[i] <= f[i];
        if (ok) keep.push_back(n);
    }
    return TreeGen(std::move(keep));
}

TreeGen prefixTree(const IncreasingString& p) { return TreeGen::prefixClosure({p}); }

TreeGen avoidSideTree(const OpenCode& P, const Universe& U) {
    std::vector<IncreasingString> nodes;
    std::vector<IncreasingString> frontier;
    if (avoidSideTreeMember({}, P)) frontier.push_back({});
    while (!frontier.empty()) {
        std::vector<IncreasingString> next;
        for (const auto& s : frontier) {
            nodes.push_back(s);
            if (s.size() == U.horizon()) continue;
            for (Value a : U.alphabet()) {
                if (!s.empty() && a <= s.back()) continue;
                IncreasingString c = s;
                c.push_back(a);
                if (avoidSideTreeMember(c, P)) next.push_back(std::move(c));
            }
        }
        frontier = std::move(next);
    }
    return TreeGen(std::move(nodes));
}

}  // namespace ramsey
