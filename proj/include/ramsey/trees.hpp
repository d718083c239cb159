#pragma once

#include <optional>
#include <set>
#include <vector>

#include "ramsey/core.hpp"

namespace ramsey {

// Explicit finite prefix-closed node set.
class TreeGen {
public:
    TreeGen() = default;
    // Throws InvalidArgument unless the set is prefix-closed and increasing.
    explicit TreeGen(std::vector<IncreasingString> nodes);
    static TreeGen prefixClosure(const std::vector<IncreasingString>& strings);

    const std::set<IncreasingString>& nodes() const { return nodes_; }
    bool empty() const { return nodes_.empty(); }
    std::size_t size() const { return nodes_.size(); }
    bool contains(const IncreasingString& s) const { return nodes_.count(s) != 0; }
    std::size_t maxDepth() const;
    Value maxEntry() const;
    std::vector<IncreasingString> children(const IncreasingString& s) const;

    bool operator==(const TreeGen&) const = default;

private:
    std::set<IncreasingString> nodes_;
};

// Kleene-Brouwer: sigma before tau iff tau is a proper prefix of sigma, or
// neither extends the other and sigma is lexicographically smaller.
bool kbLess(const IncreasingString& sigma, const IncreasingString& tau);

// Nodes least first.
std::vector<IncreasingString> kbOrder(const TreeGen& T);

// Lexicographically least node of length L.
std::optional<IncreasingString> findFullPath(const TreeGen& T, const Universe& U);

TreeGen boundedSubtree(const TreeGen& T, const IncreasingString& f);

TreeGen prefixTree(const IncreasingString& p);

// Nodes of length <= U.horizon() over the alphabet with no generator of P as a subsequence.
TreeGen avoidSideTree(const OpenCode& P, const Universe& U);

}  // namespace ramsey
