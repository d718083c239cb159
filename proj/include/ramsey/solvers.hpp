#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ramsey/core.hpp"
#include "ramsey/trees.hpp"

namespace ramsey {

enum class ProblemKind {
    SigmaRT,
    FindHS_Sigma,
    FindHS_Pi,
    wFindHS_Sigma,
    wFindHS_Pi,
    DeltaRT,
    FindHS_Delta,
    wFindHS_Delta,
};

const std::vector<ProblemKind>& allProblemKinds();
const char* kindName(ProblemKind k);
std::optional<ProblemKind> parseKind(const std::string& name);
bool isDeltaKind(ProblemKind k);

using Instance = std::variant<OpenCode, ClopenCode>;

// Exhaustive over all full-length strings; lexicographically least witness.
HSReport solveBrute(ProblemKind kind, const Instance& instance, const Universe& U);
// Depth-first search with pruning; same witness as solveBrute.
HSReport solvePruned(ProblemKind kind, const Instance& instance, const Universe& U);

struct AvigadNode {
    std::vector<Value> V;
    std::vector<Value> U;
    bool good = false;
};

struct AvigadResult {
    enum class Status { Lands, AvoidEvidence, NoSolution };
    Status status = Status::NoSolution;
    HSReport report;              // set when status == Lands
    IncreasingString evidence;    // depth-L avoid-side tree node when AvoidEvidence
    bool rootGood = false;
    bool guided = false;          // lander found inside the U-set intersections
    std::map<IncreasingString, AvigadNode> state;
};

AvigadResult avigadExtract(const OpenCode& P, const Universe& U);

}  // namespace ramsey
