#include "ramsey/lattice.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <tuple>

#include "ramsey/core.hpp"

namespace ramsey {

namespace {

constexpr std::array<std::pair<Relation, const char*>, 12> kRelations = {{
    {Relation::leW, "leW"},
    {Relation::ltW, "ltW"},
    {Relation::equivW, "equivW"},
    {Relation::leSW, "leSW"},
    {Relation::equivSW, "equivSW"},
    {Relation::notLeW, "notLeW"},
    {Relation::notLeSW, "notLeSW"},
    {Relation::leAW, "leAW"},
    {Relation::ltAW, "ltAW"},
    {Relation::equivAW, "equivAW"},
    {Relation::incompW, "incompW"},
    {Relation::notLeAW, "notLeAW"},
}};

const char* orderSuffix(Order o) {
    switch (o) {
        case Order::Strong: return "SW";
        case Order::Plain: return "W";
        case Order::Arith: return "aW";
    }
    return "?";
}

bool isStrict(Relation r) {
    return r == Relation::ltW || r == Relation::ltAW || r == Relation::incompW || r == Relation::notLeW ||
           r == Relation::notLeSW || r == Relation::notLeAW;
}

std::string trim(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

bool validName(const std::string& s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

[[noreturn]] void parseFail(std::size_t line, const std::string& msg) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": " + msg);
}

}  // namespace

const char* relationName(Relation r) {
    for (const auto& [rel, name] : kRelations)
        if (rel == r) return name;
    return "?";
}

std::optional<Relation> parseRelation(const std::string& token) {
    for (const auto& [rel, name] : kRelations)
        if (token == name) return rel;
    return std::nullopt;
}

std::set<std::string> FactSet::nodes() const {
    std::set<std::string> out;
    for (const auto& f : facts) {
        out.insert(f.lhs);
        out.insert(f.rhs);
    }
    for (const auto& a : annotations) out.insert(a.name);
    return out;
}

FactSet parseFacts(std::istream& in) {
    FactSet out;
    std::string raw;
    std::size_t lineNo = 0;
    while (std::getline(in, raw)) {
        ++lineNo;
        std::string line = trim(raw);
        if (line.empty() || line[0] == '#') continue;
        std::string citation;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            citation = trim(line.substr(hash + 1));
            line = trim(line.substr(0, hash));
        }
        std::istringstream words(line);
        std::vector<std::string> tok;
        for (std::string w; words >> w;) tok.push_back(w);

        if (tok[0] == "node") {
            if (tok.size() < 2 || !validName(tok[1])) parseFail(lineNo, "node needs a name");
            std::string note;
            for (std::size_t i = 2; i < tok.size(); ++i) note += (i > 2 ? " " : "") + tok[i];
            out.annotations.push_back({tok[1], note, citation});
            continue;
        }
        if (tok.size() != 3) parseFail(lineNo, "expected `LHS REL RHS # citation`");
        auto rel = parseRelation(tok[1]);
        if (!rel) parseFail(lineNo, "unknown relation '" + tok[1] + "'");
        if (!validName(tok[0]) || !validName(tok[2])) parseFail(lineNo, "bad node name");
        if (tok[0] == tok[2] && isStrict(*rel)) parseFail(lineNo, "strict relation needs distinct nodes");
        out.facts.push_back({tok[0], *rel, tok[2], citation, lineNo});
    }
    return out;
}

FactSet ingestFacts(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
    return parseFacts(in);
}

void writeFacts(std::ostream& out, const FactSet& facts) {
    for (const auto& a : facts.annotations) {
        out << "node " << a.name;
        if (!a.annotation.empty()) out << ' ' << a.annotation;
        if (!a.citation.empty()) out << " # " << a.citation;
        out << '\n';
    }
    for (const auto& f : facts.facts) {
        out << f.lhs << ' ' << relationName(f.relation) << ' ' << f.rhs;
        if (!f.citation.empty()) out << " # " << f.citation;
        out << '\n';
    }
}

std::string atomText(const Atom& atom) {
    return atom.a + (atom.negative ? " notLe" : " le") + orderSuffix(atom.order) + " " + atom.b;
}

struct ClosureBuilder {
    Closure& c;
    bool changed = false;

    bool add(const Atom& atom, Derivation why) {
        if (c.atoms_.count(atom)) return false;
        c.atoms_.emplace(atom, std::move(why));
        changed = true;
        return true;
    }

    void seed(const FactSet& fs) {
        c.nodes_ = fs.nodes();
        for (std::size_t i = 0; i < fs.facts.size(); ++i) {
            const auto& f = fs.facts[i];
            auto base = [&](bool neg, Order o, const std::string& a, const std::string& b) {
                add(Atom{neg, o, a, b}, Derivation{relationName(f.relation), {}, i});
            };
            switch (f.relation) {
                case Relation::leW: base(false, Order::Plain, f.lhs, f.rhs); break;
                case Relation::ltW:
                    base(false, Order::Plain, f.lhs, f.rhs);
                    base(true, Order::Plain, f.rhs, f.lhs);
                    break;
                case Relation::equivW:
                    base(false, Order::Plain, f.lhs, f.rhs);
                    base(false, Order::Plain, f.rhs, f.lhs);
                    break;
                case Relation::leSW: base(false, Order::Strong, f.lhs, f.rhs); break;
                case Relation::equivSW:
                    base(false, Order::Strong, f.lhs, f.rhs);
                    base(false, Order::Strong, f.rhs, f.lhs);
                    break;
                case Relation::notLeW: base(true, Order::Plain, f.lhs, f.rhs); break;
                case Relation::notLeSW: base(true, Order::Strong, f.lhs, f.rhs); break;
                case Relation::notLeAW: base(true, Order::Arith, f.lhs, f.rhs); break;
                case Relation::leAW: base(false, Order::Arith, f.lhs, f.rhs); break;
                case Relation::ltAW:
                    base(false, Order::Arith, f.lhs, f.rhs);
                    base(true, Order::Arith, f.rhs, f.lhs);
                    break;
                case Relation::equivAW:
                    base(false, Order::Arith, f.lhs, f.rhs);
                    base(false, Order::Arith, f.rhs, f.lhs);
                    break;
                case Relation::incompW:
                    base(true, Order::Plain, f.lhs, f.rhs);
                    base(true, Order::Plain, f.rhs, f.lhs);
                    break;
            }
        }
        for (const auto& n : c.nodes_) add(Atom{false, Order::Strong, n, n}, Derivation{"reflexivity", {}, {}});
    }

    // One saturation round over a snapshot; atoms added this round are used next round,
    // so the first derivation recorded for an atom is a shortest one.
    void round() {
        changed = false;
        std::vector<Atom> snap;
        snap.reserve(c.atoms_.size());
        for (const auto& [a, _] : c.atoms_) snap.push_back(a);

        std::map<std::pair<int, std::string>, std::vector<std::string>> up, down;
        for (const auto& a : snap) {
            if (a.negative) continue;
            up[{int(a.order), a.a}].push_back(a.b);
            down[{int(a.order), a.b}].push_back(a.a);
        }

        for (const auto& a : snap) {
            int o = int(a.order);
            if (!a.negative) {
                if (a.order != Order::Arith)
                    add(Atom{false, Order(o + 1), a.a, a.b}, Derivation{"weaken", {a}, {}});
                for (const auto& x : up[{o, a.b}])
                    add(Atom{false, a.order, a.a, x}, Derivation{"transitivity", {a, Atom{false, a.order, a.b, x}}, {}});
            } else {
                if (a.order != Order::Strong)
                    add(Atom{true, Order(o - 1), a.a, a.b}, Derivation{"strengthen", {a}, {}});
                // a <= x and a !<= b give x !<= b; y <= b and a !<= b give a !<= y.
                for (const auto& x : up[{o, a.a}])
                    add(Atom{true, a.order, x, a.b}, Derivation{"lower bound", {Atom{false, a.order, a.a, x}, a}, {}});
                for (const auto& y : down[{o, a.b}])
                    add(Atom{true, a.order, a.a, y}, Derivation{"upper bound", {Atom{false, a.order, y, a.b}, a}, {}});
            }
        }
    }
};

bool Closure::le(Order o, const std::string& a, const std::string& b) const {
    return atoms_.count(Atom{false, o, a, b}) != 0;
}

bool Closure::notLe(Order o, const std::string& a, const std::string& b) const {
    return atoms_.count(Atom{true, o, a, b}) != 0;
}

bool Closure::holds(Relation r, const std::string& a, const std::string& b) const {
    switch (r) {
        case Relation::leW: return le(Order::Plain, a, b);
        case Relation::ltW: return le(Order::Plain, a, b) && notLe(Order::Plain, b, a);
        case Relation::equivW: return le(Order::Plain, a, b) && le(Order::Plain, b, a);
        case Relation::leSW: return le(Order::Strong, a, b);
        case Relation::equivSW: return le(Order::Strong, a, b) && le(Order::Strong, b, a);
        case Relation::notLeW: return notLe(Order::Plain, a, b);
        case Relation::notLeSW: return notLe(Order::Strong, a, b);
        case Relation::notLeAW: return notLe(Order::Arith, a, b);
        case Relation::leAW: return le(Order::Arith, a, b);
        case Relation::ltAW: return le(Order::Arith, a, b) && notLe(Order::Arith, b, a);
        case Relation::equivAW: return le(Order::Arith, a, b) && le(Order::Arith, b, a);
        case Relation::incompW: return notLe(Order::Plain, a, b) && notLe(Order::Plain, b, a);
    }
    return false;
}

std::vector<std::size_t> Closure::support(const Atom& atom) const {
    std::vector<std::size_t> out;
    std::set<Atom> seen;
    std::vector<Atom> stack{atom};
    while (!stack.empty()) {
        Atom cur = stack.back();
        stack.pop_back();
        if (!seen.insert(cur).second) continue;
        auto it = atoms_.find(cur);
        if (it == atoms_.end()) continue;
        if (it->second.fact) out.push_back(*it->second.fact);
        for (auto p = it->second.premises.rbegin(); p != it->second.premises.rend(); ++p) stack.push_back(*p);
    }
    std::vector<std::size_t> uniq;
    for (auto i : out)
        if (std::find(uniq.begin(), uniq.end(), i) == uniq.end()) uniq.push_back(i);
    return uniq;
}

FactSet Closure::asFacts() const {
    static constexpr Relation pos[] = {Relation::leSW, Relation::leW, Relation::leAW};
    static constexpr Relation neg[] = {Relation::notLeSW, Relation::notLeW, Relation::notLeAW};
    FactSet out;
    for (const auto& n : nodes_) out.annotations.push_back({n, "", ""});
    for (const auto& [atom, _] : atoms_) {
        if (atom.a == atom.b) continue;
        Relation r = atom.negative ? neg[int(atom.order)] : pos[int(atom.order)];
        out.facts.push_back({atom.a, r, atom.b, "closure", 0});
    }
    return out;
}

bool Closure::operator==(const Closure& o) const {
    if (nodes_ != o.nodes_ || atoms_.size() != o.atoms_.size()) return false;
    return std::equal(atoms_.begin(), atoms_.end(), o.atoms_.begin(),
                      [](const auto& x, const auto& y) { return x.first == y.first; });
}

CheckResult closeAndCheck(const FactSet& facts) {
    CheckResult res;
    ClosureBuilder b{res.closure};
    b.seed(facts);
    do b.round();
    while (b.changed);

    for (const auto& [atom, _] : res.closure.atoms()) {
        if (!atom.negative) continue;
        Atom pos{false, atom.order, atom.a, atom.b};
        if (!res.closure.atoms().count(pos)) continue;
        Contradiction c{pos, atom, {}};
        std::vector<std::size_t> used = res.closure.support(pos);
        for (auto i : res.closure.support(atom))
            if (std::find(used.begin(), used.end(), i) == used.end()) used.push_back(i);
        for (auto i : used) {
            const auto& f = facts.facts[i];
            std::string line = f.lhs + " " + relationName(f.relation) + " " + f.rhs;
            if (f.line) line += "  (line " + std::to_string(f.line) + ")";
            if (!f.citation.empty()) line += "  [" + f.citation + "]";
            c.chain.push_back(line);
        }
        res.contradictions.push_back(std::move(c));
    }
    return res;
}

std::vector<std::vector<std::string>> arithmeticClusters(const Closure& closure) {
    std::vector<std::vector<std::string>> out;
    std::set<std::string> placed;
    for (const auto& n : closure.nodes()) {
        if (placed.count(n)) continue;
        std::vector<std::string> cls;
        for (const auto& m : closure.nodes())
            if (closure.le(Order::Arith, n, m) && closure.le(Order::Arith, m, n)) cls.push_back(m);
        for (const auto& m : cls) placed.insert(m);
        if (cls.size() >= 2) out.push_back(std::move(cls));
    }
    return out;
}

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

}  // namespace

std::string exportDot(const FactSet& facts) {
    std::ostringstream out;
    out << "digraph degrees {\n";
    auto nodes = facts.nodes();
    if (nodes.empty()) {
        out << "}\n";
        return out.str();
    }
    out << "  rankdir=BT;\n";
    out << "  node [shape=box, fontname=\"Helvetica\"];\n";

    Closure closure = closeAndCheck(facts).closure;
    auto clusters = arithmeticClusters(closure);
    std::set<std::string> clustered;
    for (std::size_t i = 0; i < clusters.size(); ++i) {
        out << "  subgraph cluster_" << i << " {\n";
        out << "    style=rounded;\n";
        for (const auto& n : clusters[i]) {
            out << "    " << quoted(n) << ";\n";
            clustered.insert(n);
        }
        out << "  }\n";
    }
    for (const auto& n : nodes)
        if (!clustered.count(n)) out << "  " << quoted(n) << ";\n";

    // Raw facts only; the diagram shows what was recorded, not what was inferred.
    std::set<std::tuple<std::string, std::string, std::string>> edges;
    for (const auto& f : facts.facts) {
        switch (f.relation) {
            case Relation::leW:
            case Relation::leSW: edges.insert({f.lhs, f.rhs, "style=dashed"}); break;
            case Relation::equivW:
            case Relation::equivSW: {
                auto [a, b] = std::minmax(f.lhs, f.rhs);
                edges.insert({a, b, "style=dashed, dir=both"});
                break;
            }
            case Relation::ltW: edges.insert({f.lhs, f.rhs, "style=solid"}); break;
            case Relation::ltAW: edges.insert({f.lhs, f.rhs, "style=dotted"}); break;
            default: break;
        }
    }
    for (const auto& [a, b, attr] : edges) out << "  " << quoted(a) << " -> " << quoted(b) << " [" << attr << "];\n";
    out << "}\n";
    return out.str();
}

}  // namespace ramsey
