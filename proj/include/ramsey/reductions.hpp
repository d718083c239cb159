#pragma once

#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ramsey/core.hpp"
#include "ramsey/solvers.hpp"
#include "ramsey/trees.hpp"

namespace ramsey {

struct CodePair {
    OpenCode first;
    OpenCode second;
    bool operator==(const CodePair&) const = default;
};

using SourceInstance = std::variant<OpenCode, ClopenCode, TreeGen, IncreasingString, CodePair>;

// Instances travel with the universe they are posed over.
struct CorpusItem {
    SourceInstance instance;
    Universe universe;
};

// Flag is used by strong total choice; strings hold paths or solutions.
struct SourceSolution {
    std::vector<IncreasingString> strings;
    std::optional<int> flag;
    bool operator==(const SourceSolution&) const = default;
};

struct TargetInstance {
    Instance code;
    Universe universe;
};

struct ReductionSpec {
    std::string id;
    std::string sourceKind;   // problem identifier of the source side
    std::string corpusFamily; // generateCorpus family producing source instances
    ProblemKind targetKind;
    std::function<TargetInstance(const SourceInstance&, const Universe&)> forward;
    std::function<SourceSolution(const SourceInstance&, const Universe&, const TargetInstance&, const HSReport&)> backward;
    // Empty string when the solution is valid, otherwise the reason.
    std::function<std::string(const SourceInstance&, const Universe&, const SourceSolution&)> check;
};

const std::vector<ReductionSpec>& reductionCatalog();
const ReductionSpec* findReduction(const std::string& id);
// R-DESCRIBE with the backward step replaced by the identity.
ReductionSpec corruptedDescribeSpec();

SourceSolution runReduction(const ReductionSpec& spec, const SourceInstance& instance, const Universe& U);

struct VerifyEntry {
    std::size_t index = 0;
    bool pass = false;
    std::string detail;
    SourceSolution solution;
};

struct VerifyReport {
    std::string specId;
    std::vector<VerifyEntry> entries;
    std::size_t passes() const;
    std::size_t failures() const;
};

VerifyReport verifyReduction(const ReductionSpec& spec, const std::vector<CorpusItem>& corpus,
                             unsigned jobs = 1);

const std::vector<std::string>& corpusFamilies();
std::vector<CorpusItem> generateCorpus(const std::string& family, const Universe& U, std::size_t count,
                                       std::uint64_t seed);

// Ground truth shared by checks and tests.
std::string checkSourceSolution(const std::string& sourceKind, const SourceInstance& instance, const Universe& U,
                                const SourceSolution& solution);

}  // namespace ramsey
