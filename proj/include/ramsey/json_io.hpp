#pragma once

#include <optional>
#include <string>

#include "json.hpp"
#include "ramsey/core.hpp"
#include "ramsey/reductions.hpp"
#include "ramsey/solvers.hpp"
#include "ramsey/trees.hpp"

namespace ramsey {

using Json = nlohmann::ordered_json;

Json toJson(const IncreasingString& s);
Json toJson(const OpenCode& P);
Json toJson(const ClopenCode& D);
Json toJson(const TreeGen& T);
Json toJson(const SourceInstance& x);
Json toJson(const Instance& x);
Json toJson(const Universe& U);
Json toJson(const HSReport& r);
Json toJson(const SourceSolution& s);
Json toJson(const AvigadResult& r);

// All parsers throw ParseError on malformed input.
IncreasingString stringFromJson(const Json& j);
SourceInstance instanceFromJson(const Json& j);
Universe universeFromJson(const Json& j);
// Optional "universe" member embedded in an instance document.
std::optional<Universe> embeddedUniverse(const Json& j);

Json parseJsonText(const std::string& text);

}  // namespace ramsey
