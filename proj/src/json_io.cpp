#include "ramsey/json_io.hpp"

namespace ramsey {

namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorCode::ParseError, msg); }

std::vector<IncreasingString> stringList(const Json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array()) bad(std::string("missing array '") + key + "'");
    std::vector<IncreasingString> out;
    for (const auto& e : j[key]) out.push_back(stringFromJson(e));
    return out;
}

Json stringsJson(const std::vector<IncreasingString>& v) {
    Json arr = Json::array();
    for (const auto& s : v) arr.push_back(toJson(s));
    return arr;
}

}  // namespace

Json toJson(const IncreasingString& s) {
    Json arr = Json::array();
    for (Value v : s) arr.push_back(v);
    return arr;
}

Json toJson(const OpenCode& P) { return Json{{"kind", "open"}, {"generators", stringsJson(P.generators())}}; }

Json toJson(const ClopenCode& D) {
    return Json{{"kind", "clopen"},
                {"pos", stringsJson(D.pos.generators())},
                {"neg", stringsJson(D.neg.generators())}};
}

Json toJson(const TreeGen& T) {
    std::vector<IncreasingString> nodes(T.nodes().begin(), T.nodes().end());
    return Json{{"kind", "tree"}, {"nodes", stringsJson(nodes)}};
}

Json toJson(const SourceInstance& x) {
    return std::visit(
        [](const auto& v) -> Json {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, IncreasingString>)
                return Json{{"kind", "string"}, {"entries", toJson(v)}};
            else if constexpr (std::is_same_v<T, CodePair>)
                return Json{{"kind", "pair"}, {"first", toJson(v.first)}, {"second", toJson(v.second)}};
            else
                return toJson(v);
        },
        x);
}

Json toJson(const Instance& x) {
    return std::visit([](const auto& v) { return toJson(v); }, x);
}

Json toJson(const Universe& U) {
    if (U.isPlain()) return Json{{"M", U.size()}, {"L", U.horizon()}};
    return Json{{"alphabet", toJson(U.alphabet())}, {"L", U.horizon()}};
}

Json toJson(const HSReport& r) { return Json{{"solution", toJson(r.solution)}, {"side", sideName(r.side)}}; }

Json toJson(const SourceSolution& s) {
    Json j{{"strings", stringsJson(s.strings)}};
    if (s.flag) j["flag"] = *s.flag;
    return j;
}

Json toJson(const AvigadResult& r) {
    Json j;
    switch (r.status) {
        case AvigadResult::Status::Lands:
            j = toJson(r.report);
            j["guided"] = r.guided;
            break;
        case AvigadResult::Status::AvoidEvidence:
            j = Json{{"evidence", toJson(r.evidence)}, {"side", "avoids"}};
            break;
        case AvigadResult::Status::NoSolution: j = Json{{"error", "NoSolution"}}; break;
    }
    j["rootGood"] = r.rootGood;
    return j;
}

IncreasingString stringFromJson(const Json& j) {
    if (!j.is_array()) bad("expected an array of naturals");
    IncreasingString s;
    for (const auto& e : j) {
        if (!e.is_number_unsigned() && !(e.is_number_integer() && e.get<long long>() >= 0))
            bad("expected a natural number, got " + e.dump());
        s.push_back(e.get<Value>());
    }
    return s;
}

SourceInstance instanceFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) bad("instance needs a string 'kind'");
    const std::string kind = j["kind"];
    if (kind == "open") return OpenCode(stringList(j, "generators"));
    if (kind == "clopen") return ClopenCode{OpenCode(stringList(j, "pos")), OpenCode(stringList(j, "neg"))};
    if (kind == "tree") {
        try {
            return TreeGen(stringList(j, "nodes"));
        } catch (const Error& e) {
            bad(e.what());
        }
    }
    if (kind == "string") {
        if (!j.contains("entries")) bad("missing 'entries'");
        return stringFromJson(j["entries"]);
    }
    if (kind == "pair") {
        if (!j.contains("first") || !j.contains("second")) bad("pair needs 'first' and 'second'");
        auto a = instanceFromJson(j["first"]);
        auto b = instanceFromJson(j["second"]);
        if (!std::holds_alternative<OpenCode>(a) || !std::holds_alternative<OpenCode>(b))
            bad("pair members must be open codes");
        return CodePair{std::get<OpenCode>(a), std::get<OpenCode>(b)};
    }
    bad("unknown instance kind '" + kind + "'");
}

Universe universeFromJson(const Json& j) {
    if (!j.is_object() || !j.contains("L")) bad("universe needs 'L'");
    auto L = j["L"].get<std::size_t>();
    if (j.contains("alphabet")) return Universe(stringFromJson(j["alphabet"]), L);
    if (j.contains("M")) return Universe::bounded(j["M"].get<std::size_t>(), L);
    bad("universe needs 'M' or 'alphabet'");
}

std::optional<Universe> embeddedUniverse(const Json& j) {
    if (!j.is_object() || !j.contains("universe")) return std::nullopt;
    return universeFromJson(j["universe"]);
}

Json parseJsonText(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace ramsey
