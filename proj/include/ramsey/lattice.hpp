#pragma once

#include <array>
#include <cstddef>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

enum class Relation {
    leW,
    ltW,
    equivW,
    leSW,
    equivSW,
    notLeW,
    notLeSW,
    leAW,
    ltAW,
    equivAW,
    incompW,
    notLeAW,  // only produced when a closure is written back out
};

const char* relationName(Relation r);
std::optional<Relation> parseRelation(const std::string& token);

struct RelFact {
    std::string lhs;
    Relation relation = Relation::leW;
    std::string rhs;
    std::string citation;
    std::size_t line = 0;

    bool operator==(const RelFact& o) const {
        return lhs == o.lhs && relation == o.relation && rhs == o.rhs && citation == o.citation;
    }
};

struct NodeAnnotation {
    std::string name;
    std::string annotation;
    std::string citation;
};

struct FactSet {
    std::vector<RelFact> facts;
    std::vector<NodeAnnotation> annotations;

    std::set<std::string> nodes() const;
    std::size_t size() const { return facts.size(); }
};

// One fact per line: `LHS REL RHS # citation`, or `node NAME [annotation] # citation`.
// Lines starting with '#' and blank lines are skipped.
FactSet parseFacts(std::istream& in);
FactSet ingestFacts(const std::string& path);
void writeFacts(std::ostream& out, const FactSet& facts);

// The three preorders, strongest first.
enum class Order { Strong = 0, Plain = 1, Arith = 2 };

struct Atom {
    bool negative = false;  // a is not reducible to b
    Order order = Order::Plain;
    std::string a;
    std::string b;

    auto operator<=>(const Atom&) const = default;
};

std::string atomText(const Atom& atom);

struct Derivation {
    std::string rule;
    std::vector<Atom> premises;
    std::optional<std::size_t> fact;  // index into FactSet::facts for base atoms
};

class Closure {
public:
    bool le(Order o, const std::string& a, const std::string& b) const;
    bool notLe(Order o, const std::string& a, const std::string& b) const;
    // All eleven relations, evaluated on the closure.
    bool holds(Relation r, const std::string& a, const std::string& b) const;

    const std::map<Atom, Derivation>& atoms() const { return atoms_; }
    const std::set<std::string>& nodes() const { return nodes_; }
    // Base facts supporting an atom, depth first.
    std::vector<std::size_t> support(const Atom& atom) const;
    // Closure written back as a fact set; closing it again gives the same closure.
    FactSet asFacts() const;

    bool operator==(const Closure& o) const;

private:
    friend struct ClosureBuilder;
    std::set<std::string> nodes_;
    std::map<Atom, Derivation> atoms_;
};

struct Contradiction {
    Atom positive;
    Atom negative;
    std::vector<std::string> chain;  // one line per supporting fact, with citation
};

struct CheckResult {
    Closure closure;
    std::vector<Contradiction> contradictions;
};

CheckResult closeAndCheck(const FactSet& facts);

// Arithmetic equivalence classes with at least two members, each sorted.
std::vector<std::vector<std::string>> arithmeticClusters(const Closure& closure);

std::string exportDot(const FactSet& facts);

}  // namespace ramsey
