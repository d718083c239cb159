#include "ramsey/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ramsey/constructions.hpp"
#include "ramsey/json_io.hpp"
#include "ramsey/lattice.hpp"
#include "ramsey/reductions.hpp"
#include "ramsey/solvers.hpp"
#include "ramsey/trees.hpp"

namespace ramsey {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    std::string universe;
    std::uint64_t seed = 0;
    std::string engine = "pruned";
    std::string output;
    std::string kind;
    std::string instance;
    std::string spec;
    std::string facts = std::string(RAMSEY_DATA_DIR) + "/seed.facts";
    std::string construction;
    std::string latticeAction;
    std::size_t count = 100;
    unsigned jobs = 1;
    Value power = 2;
};

unsigned defaultJobs() {
    if (const char* env = std::getenv("RAMSEY_JOBS")) {
        char* end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
    }
    return 1;
}

Universe parseUniverseFlag(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos) throw UsageError("--universe expects M,L");
    try {
        std::size_t M = std::stoul(text.substr(0, comma));
        std::size_t L = std::stoul(text.substr(comma + 1));
        return Universe::bounded(M, L);
    } catch (const Error& e) {
        throw UsageError(std::string("--universe: ") + e.what());
    } catch (const std::exception&) {
        throw UsageError("--universe expects M,L");
    }
}

struct LoadedInstance {
    SourceInstance instance;
    std::optional<Universe> universe;
};

LoadedInstance loadInstance(const std::string& path) {
    if (path.empty()) throw UsageError("--instance is required");
    std::ifstream in(path);
    if (!in) throw UsageError("cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    Json j = parseJsonText(buf.str());
    return {instanceFromJson(j), embeddedUniverse(j)};
}

// Instances embedding bounds override the flag.
Universe pickUniverse(const RunConfig& cfg, const std::optional<Universe>& embedded) {
    if (embedded) return *embedded;
    if (cfg.universe.empty()) throw UsageError("--universe is required");
    return parseUniverseFlag(cfg.universe);
}

template <class T>
const T& need(const SourceInstance& x, const char* what) {
    if (const T* p = std::get_if<T>(&x)) return *p;
    throw Error(ErrorCode::InvalidArgument, std::string("instance must be ") + what);
}

Json construct(const RunConfig& cfg) {
    auto loaded = loadInstance(cfg.instance);
    const Universe U = pickUniverse(cfg, loaded.universe);
    const auto& x = loaded.instance;
    const std::string& name = cfg.construction;

    if (name == "avoid-tree") return toJson(avoidSideTree(need<OpenCode>(x, "an open code"), U));
    if (name == "pow") {
        Json j = toJson(elementPowerCode(cfg.power, need<OpenCode>(x, "an open code")));
        j["universe"] = toJson(elementPowerUniverse(cfg.power, U));
        return j;
    }
    if (name == "box") {
        const auto& p = need<CodePair>(x, "a pair");
        Json j = toJson(boxProductCodes(p.first, p.second, U));
        j["universe"] = toJson(boxUniverse(U));
        return j;
    }
    if (name == "union") {
        const auto& p = need<CodePair>(x, "a pair");
        return toJson(unionCodes(p.first, p.second));
    }
    if (name == "complement") {
        const auto& D = need<ClopenCode>(x, "a clopen code");
        if (!validateClopen(D, U)) throw Error(ErrorCode::DomainViolation, "pos and neg do not partition the universe");
        return toJson(complementClopen(D));
    }
    if (name == "solovay") {
        const auto su = solovayUniverse(U, EmbeddingMap::identity());
        Json j = toJson(solovayCode(need<TreeGen>(x, "a tree"), EmbeddingMap::identity(), su.generation));
        j["universe"] = toJson(su.evaluation);
        return j;
    }
    if (name == "describe") {
        auto dp = describePathCode(need<TreeGen>(x, "a tree"), EmbeddingMap::identity(),
                                   StringCoder(U.alphabet().back() + 1));
        Json j = toJson(dp.code);
        j["universe"] = Json{{"alphabet", toJson(dp.alphabet)}, {"L", U.horizon() + 1}};
        return j;
    }
    if (name == "double") return toJson(clopenDoubleCode(need<ClopenCode>(x, "a clopen code"), U));
    throw UsageError("unknown construction '" + name +
                     "' (avoid-tree, pow, box, union, complement, solovay, describe, double)");
}

Json solve(const RunConfig& cfg) {
    auto kind = parseKind(cfg.kind);
    if (!kind) throw UsageError("unknown --kind '" + cfg.kind + "'");
    auto loaded = loadInstance(cfg.instance);
    const Universe U = pickUniverse(cfg, loaded.universe);
    Instance inst;
    if (auto* p = std::get_if<OpenCode>(&loaded.instance)) inst = *p;
    else if (auto* d = std::get_if<ClopenCode>(&loaded.instance)) inst = *d;
    else throw Error(ErrorCode::InvalidArgument, "solve needs an open or clopen code");

    if (cfg.engine == "brute") return toJson(solveBrute(*kind, inst, U));
    if (cfg.engine == "pruned") return toJson(solvePruned(*kind, inst, U));
    if (cfg.engine == "avigad") {
        if (*kind != ProblemKind::wFindHS_Sigma && *kind != ProblemKind::SigmaRT)
            throw UsageError("--engine avigad handles SigmaRT and wFindHS_Sigma");
        const auto* P = std::get_if<OpenCode>(&inst);
        if (!P) throw Error(ErrorCode::InvalidArgument, "avigad engine needs an open code");
        auto r = avigadExtract(*P, U);
        if (*kind == ProblemKind::wFindHS_Sigma && r.status != AvigadResult::Status::Lands)
            throw Error(ErrorCode::NotInDomain, "no landing solution at this horizon");
        return toJson(r);
    }
    throw UsageError("unknown --engine '" + cfg.engine + "' (brute, pruned, avigad)");
}

const ReductionSpec& lookupSpec(const std::string& id, ReductionSpec& scratch) {
    if (id == "R-DESCRIBE-CORRUPT") {
        scratch = corruptedDescribeSpec();
        return scratch;
    }
    if (const auto* s = findReduction(id)) return *s;
    std::string known;
    for (const auto& s : reductionCatalog()) known += " " + s.id;
    throw UsageError("unknown --spec '" + id + "' (known:" + known + ")");
}

Json reduce(const RunConfig& cfg) {
    ReductionSpec scratch;
    const auto& spec = lookupSpec(cfg.spec, scratch);
    auto loaded = loadInstance(cfg.instance);
    const Universe U = pickUniverse(cfg, loaded.universe);
    TargetInstance target = spec.forward(loaded.instance, U);
    HSReport r = solveBrute(spec.targetKind, target.code, target.universe);
    SourceSolution sol = spec.backward(loaded.instance, U, target, r);
    std::string verdict = spec.check(loaded.instance, U, sol);
    Json j;
    j["spec"] = spec.id;
    j["target"] = toJson(target.code);
    j["target"]["universe"] = toJson(target.universe);
    j["targetSolution"] = toJson(r);
    j["solution"] = toJson(sol);
    j["check"] = verdict.empty() ? "ok" : verdict;
    return j;
}

int verify(const RunConfig& cfg, std::ostream& out) {
    const Universe U = cfg.universe.empty() ? Universe::bounded(6, 3) : parseUniverseFlag(cfg.universe);
    std::vector<const ReductionSpec*> specs;
    ReductionSpec scratch;
    if (cfg.spec.empty() || cfg.spec == "all") {
        for (const auto& s : reductionCatalog()) specs.push_back(&s);
    } else {
        specs.push_back(&lookupSpec(cfg.spec, scratch));
    }
    bool allPass = true;
    for (const auto* spec : specs) {
        auto corpus = generateCorpus(spec->corpusFamily, U, cfg.count, cfg.seed);
        auto report = verifyReduction(*spec, corpus, cfg.jobs);
        for (const auto& e : report.entries) {
            if (e.pass) continue;
            out << Json{{"spec", spec->id}, {"index", e.index}, {"detail", e.detail}}.dump() << '\n';
        }
        out << Json{{"spec", spec->id},
                    {"universe", toJson(U)},
                    {"seed", cfg.seed},
                    {"count", report.entries.size()},
                    {"passes", report.passes()},
                    {"failures", report.failures()}}
                   .dump()
            << '\n';
        allPass = allPass && report.failures() == 0;
    }
    return allPass ? kExitOk : kExitDomain;
}

int lattice(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    FactSet facts = ingestFacts(cfg.facts);
    if (cfg.latticeAction == "dot") {
        out << exportDot(facts);
        return kExitOk;
    }
    if (cfg.latticeAction != "check") throw UsageError("lattice action must be check or dot");
    auto res = closeAndCheck(facts);
    out << facts.size() << " facts, " << res.closure.nodes().size() << " nodes, " << res.closure.atoms().size()
        << " derived atoms\n";
    out << res.contradictions.size() << " contradictions\n";
    for (const auto& c : res.contradictions) {
        out << "contradiction: " << atomText(c.positive) << " vs " << atomText(c.negative) << '\n';
        for (const auto& line : c.chain) out << "  " << line << '\n';
    }
    if (!res.contradictions.empty()) err << "lattice facts are inconsistent\n";
    return res.contradictions.empty() ? kExitOk : kExitDomain;
}

}  // namespace

int runCli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    cfg.jobs = defaultJobs();

    CLI::App app{"Finite-horizon open and clopen Ramsey toolkit", "ramsey"};
    app.require_subcommand(1);
    app.fallthrough();

    app.add_option("--universe", cfg.universe, "Universe as M,L");
    app.add_option("--seed", cfg.seed, "Corpus seed");
    app.add_option("--output", cfg.output, "Write results to this file");
    app.add_option("--jobs", cfg.jobs, "Worker threads (default RAMSEY_JOBS or 1)")->check(CLI::PositiveNumber);

    auto* cConstruct = app.add_subcommand("construct", "Apply a code construction");
    cConstruct->add_option("name", cfg.construction, "Construction name")->required();
    cConstruct->add_option("--instance", cfg.instance, "Instance JSON file")->required();
    cConstruct->add_option("--n", cfg.power, "Base for pow")->check(CLI::Range(2, 16));

    auto* cSolve = app.add_subcommand("solve", "Find a homogeneous solution");
    cSolve->add_option("--kind", cfg.kind, "Problem kind")->required();
    cSolve->add_option("--instance", cfg.instance, "Instance JSON file")->required();
    cSolve->add_option("--engine", cfg.engine, "brute, pruned or avigad");

    auto* cReduce = app.add_subcommand("reduce", "Run one reduction on one instance");
    cReduce->add_option("--spec", cfg.spec, "Reduction id")->required();
    cReduce->add_option("--instance", cfg.instance, "Instance JSON file")->required();

    auto* cVerify = app.add_subcommand("verify", "Check a reduction on a seeded corpus");
    cVerify->add_option("--spec", cfg.spec, "Reduction id or all");
    cVerify->add_option("--count", cfg.count, "Corpus size")->check(CLI::PositiveNumber);

    auto* cLattice = app.add_subcommand("lattice", "Degree lattice database");
    cLattice->add_option("action", cfg.latticeAction, "check or dot")->required();
    cLattice->add_option("--facts", cfg.facts, "Fact file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n' << app.help();
        return kExitUsage;
    }

    std::ostringstream buffer;
    std::ostream& sink = cfg.output.empty() ? out : buffer;
    int code = kExitOk;
    try {
        if (*cConstruct) sink << construct(cfg).dump() << '\n';
        else if (*cSolve) sink << solve(cfg).dump() << '\n';
        else if (*cReduce) sink << reduce(cfg).dump() << '\n';
        else if (*cVerify) code = verify(cfg, sink);
        else if (*cLattice) code = lattice(cfg, sink, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const Error& e) {
        if (*cSolve) sink << Json{{"error", errorName(e.code())}}.dump() << '\n';
        err << errorName(e.code()) << ": " << e.what() << '\n';
        code = kExitDomain;
    }
    if (!cfg.output.empty()) {
        std::ofstream file(cfg.output);
        if (!file) {
            err << "cannot write " << cfg.output << '\n';
            return kExitDomain;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace ramsey
