#include "ramsey/reductions.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <thread>

#include "ramsey/constructions.hpp"

namespace ramsey {

namespace {

template <class T>
const T& as(const SourceInstance& s, const char* what) {
    const T* p = std::get_if<T>(&s);
    if (!p) throw Error(ErrorCode::InvalidArgument, std::string("source instance must be ") + what);
    return *p;
}

Value treeBound(const Universe& U) { return U.alphabet().back() + 1; }

bool hasDeepNode(const TreeGen& T, const Universe& U) { return findFullPath(T, U).has_value(); }

std::string checkPath(const TreeGen& T, const Universe& U, const IncreasingString& p) {
    if (p.size() != U.horizon()) return "path " + toString(p) + " has the wrong length";
    if (!T.contains(p)) return "path " + toString(p) + " is not a tree node";
    return "";
}

std::string checkSide(const IncreasingString& h, const OpenCode& P, const Universe& U, Side want) {
    if (h.size() != U.horizon() || !isIncreasing(h) || !U.containsAll(h))
        return "solution " + toString(h) + " is not a full-length string over the alphabet";
    const Side s = classify(h, P);
    if (s != want) return "solution " + toString(h) + " " + sideName(s) + ", expected " + sideName(want);
    return "";
}

IncreasingString take(const IncreasingString& s, std::size_t n) {
    return IncreasingString(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(std::min(n, s.size())));
}

TargetInstance describeForward(const TreeGen& T, const Universe& U, bool clopen) {
    const auto dp = describePathCode(T, EmbeddingMap::identity(), StringCoder(treeBound(U)));
    if (dp.alphabet.size() < U.horizon() + 1)
        throw Error(ErrorCode::UniverseTooSmall, "tree has fewer than L+1 nodes");
    Universe target(dp.alphabet, U.horizon() + 1);
    if (clopen) return {dp.code, target};
    return {dp.code.pos, target};
}

IncreasingString describeBackward(const IncreasingString& h, const Universe& U) {
    IncreasingString y;
    try {
        y = decodePath(h, EmbeddingMap::identity(), StringCoder(treeBound(U)));
    } catch (const Error& e) {
        throw Error(ErrorCode::BackwardFailure, e.what());
    }
    if (y.size() < U.horizon()) throw Error(ErrorCode::BackwardFailure, "decoded chain is too short: " + toString(y));
    return take(y, U.horizon());
}

// Highest tree entry for which powers of 3 from 9 on dominate every node.
constexpr Value kStcMaxBound = 10;

TargetInstance stcForward(const TreeGen& T, const Universe& U) {
    const Value M = treeBound(U);
    if (M > kStcMaxBound) throw Error(ErrorCode::InvalidArgument, "R-STC needs alphabet bound <= 10");
    const std::size_t L = U.horizon();
    if (L < 2) throw Error(ErrorCode::UniverseTooSmall, "R-STC needs L >= 2");
    const auto dp = describePathCode(T, EmbeddingMap::stringCodePow(2), StringCoder(M));
    const auto pow3 = EmbeddingMap::powBase(3);
    const auto a3 = pow3.image(3 * L);
    const OpenCode p2 = solovayCode(T, pow3, Universe(a3, L));
    const std::size_t D = std::max<std::size_t>(2, p2.depth());
    std::set<Value> all(dp.alphabet.begin(), dp.alphabet.end());
    all.insert(a3.begin(), a3.end());
    return {unionCodes(dp.code.pos, p2), Universe(std::vector<Value>(all.begin(), all.end()), L + D - 1)};
}

SourceSolution stcBackward(const IncreasingString& h, const Universe& U) {
    const auto pow2 = EmbeddingMap::stringCodePow(2);
    if (h.empty() || !pow2.inRange(h[0])) return SourceSolution{{}, 0};
    IncreasingString y;
    try {
        y = decodePath(take(h, U.horizon() + 1), pow2, StringCoder(treeBound(U)));
    } catch (const Error& e) {
        throw Error(ErrorCode::BackwardFailure, e.what());
    }
    if (y.size() < U.horizon()) throw Error(ErrorCode::BackwardFailure, "decoded chain is too short: " + toString(y));
    return SourceSolution{{take(y, U.horizon())}, 1};
}

std::vector<ReductionSpec> buildCatalog() {
    std::vector<ReductionSpec> c;

    c.push_back(ReductionSpec{
        "R-DESCRIBE", "ClosedChoice", "ClosedChoice", ProblemKind::FindHS_Delta,
        [](const SourceInstance& s, const Universe& U) { return describeForward(as<TreeGen>(s, "a tree"), U, true); },
        [](const SourceInstance&, const Universe& U, const TargetInstance&, const HSReport& r) {
            return SourceSolution{{describeBackward(r.solution, U)}, std::nullopt};
        },
        [](const SourceInstance& s, const Universe& U, const SourceSolution& sol) {
            return checkSourceSolution("ClosedChoice", s, U, sol);
        }});

    c.push_back(ReductionSpec{
        "R-STC", "StrongTotalChoice", "StrongTotalChoice", ProblemKind::FindHS_Sigma,
        [](const SourceInstance& s, const Universe& U) { return stcForward(as<TreeGen>(s, "a tree"), U); },
        [](const SourceInstance&, const Universe& U, const TargetInstance&, const HSReport& r) {
            return stcBackward(r.solution, U);
        },
        [](const SourceInstance& s, const Universe& U, const SourceSolution& sol) {
            return checkSourceSolution("StrongTotalChoice", s, U, sol);
        }});

    c.push_back(ReductionSpec{
        "R-ECONS", "DeltaRT", "PointColoring", ProblemKind::wFindHS_Delta,
        [](const SourceInstance& s, const Universe& U) {
            return TargetInstance{clopenDoubleCode(as<ClopenCode>(s, "a clopen code"), U), U};
        },
        [](const SourceInstance&, const Universe&, const TargetInstance&, const HSReport& r) {
            return SourceSolution{{r.solution}, std::nullopt};
        },
        [](const SourceInstance& s, const Universe& U, const SourceSolution& sol) {
            return checkSourceSolution("DeltaRT", s, U, sol);
        }});

    c.push_back(ReductionSpec{
        "R-ID", "Identity", "Identity", ProblemKind::FindHS_Sigma,
        [](const SourceInstance& s, const Universe& U) {
            const auto& p = as<IncreasingString>(s, "a string");
            return describeForward(prefixTree(p), U, false);
        },
        [](const SourceInstance&, const Universe& U, const TargetInstance&, const HSReport& r) {
            return SourceSolution{{describeBackward(r.solution, U)}, std::nullopt};
        },
        [](const SourceInstance& s, const Universe& U, const SourceSolution& sol) {
            return checkSourceSolution("Identity", s, U, sol);
        }});

    c.push_back(ReductionSpec{
        "R-BOX", "FindHS_Sigma*FindHS_Sigma", "UniformPair", ProblemKind::FindHS_Sigma,
        [](const SourceInstance& s, const Universe& U) {
            const auto& p = as<CodePair>(s, "a code pair");
            return TargetInstance{boxProductCodes(p.first, p.second, U), boxUniverse(U)};
        },
        [](const SourceInstance&, const Universe&, const TargetInstance&, const HSReport& r) {
            try {
                const auto x = unpairString(r.solution);
                return SourceSolution{{projectPaired(1, x), projectPaired(2, x)}, std::nullopt};
            } catch (const Error& e) {
                throw Error(ErrorCode::BackwardFailure, e.what());
            }
        },
        [](const SourceInstance& s, const Universe& U, const SourceSolution& sol) {
            return checkSourceSolution("FindHS_Sigma*FindHS_Sigma", s, U, sol);
        }});

    c.push_back(ReductionSpec{
        "R-UNION", "wFindHS_Pi*wFindHS_Pi", "SolovayPair", ProblemKind::wFindHS_Pi,
        [](const SourceInstance& s, const Universe& U) {
            const auto& p = as<CodePair>(s, "a code pair");
            return TargetInstance{unionCodes(p.first, p.second), U};
        },
        [](const SourceInstance&, const Universe&, const TargetInstance&, const HSReport& r) {
            return SourceSolution{{r.solution, r.solution}, std::nullopt};
        },
        [](const SourceInstance& s, const Universe& U, const SourceSolution& sol) {
            return checkSourceSolution("wFindHS_Pi*wFindHS_Pi", s, U, sol);
        }});

    c.push_back(ReductionSpec{
        "R-SOLOVAY-TC", "TotalChoice", "TotalChoice", ProblemKind::SigmaRT,
        [](const SourceInstance& s, const Universe& U) {
            const auto& T = as<TreeGen>(s, "a tree");
            if (U.horizon() < 2) throw Error(ErrorCode::UniverseTooSmall, "R-SOLOVAY-TC needs L >= 2");
            const auto su = solovayUniverse(U, EmbeddingMap::identity());
            return TargetInstance{solovayCode(T, EmbeddingMap::identity(), su.generation), su.evaluation};
        },
        [](const SourceInstance& s, const Universe& U, const TargetInstance&, const HSReport& r) {
            const auto& T = as<TreeGen>(s, "a tree");
            const auto path = findFullPath(boundedSubtree(T, r.solution), U);
            SourceSolution out;
            if (path) out.strings.push_back(*path);
            return out;
        },
        [](const SourceInstance& s, const Universe& U, const SourceSolution& sol) {
            return checkSourceSolution("TotalChoice", s, U, sol);
        }});

    return c;
}

}  // namespace

const std::vector<ReductionSpec>& reductionCatalog() {
    static const std::vector<ReductionSpec> catalog = buildCatalog();
    return catalog;
}

const ReductionSpec* findReduction(const std::string& id) {
    for (const auto& s : reductionCatalog())
        if (s.id == id) return &s;
    return nullptr;
}

ReductionSpec corruptedDescribeSpec() {
    ReductionSpec s = *findReduction("R-DESCRIBE");
    s.id = "R-DESCRIBE-CORRUPT";
    s.backward = [](const SourceInstance&, const Universe&, const TargetInstance&, const HSReport& r) {
        return SourceSolution{{r.solution}, std::nullopt};
    };
    return s;
}

std::string checkSourceSolution(const std::string& kind, const SourceInstance& s, const Universe& U,
                                const SourceSolution& sol) {
    auto need = [&](std::size_t n) {
        if (sol.strings.size() != n)
            throw Error(ErrorCode::InvalidArgument, kind + " solution needs " + std::to_string(n) + " strings");
    };
    try {
        if (kind == "ClosedChoice") {
            need(1);
            return checkPath(as<TreeGen>(s, "a tree"), U, sol.strings[0]);
        }
        if (kind == "TotalChoice") {
            const auto& T = as<TreeGen>(s, "a tree");
            if (!hasDeepNode(T, U)) return "";
            if (sol.strings.empty()) return "tree has a full-length node but none was returned";
            return checkPath(T, U, sol.strings[0]);
        }
        if (kind == "StrongTotalChoice") {
            const auto& T = as<TreeGen>(s, "a tree");
            const bool deep = hasDeepNode(T, U);
            if (!sol.flag) return "missing flag";
            if (*sol.flag != (deep ? 1 : 0)) return "flag " + std::to_string(*sol.flag) + " is wrong";
            if (!deep) return "";
            need(1);
            return checkPath(T, U, sol.strings[0]);
        }
        if (kind == "Identity") {
            need(1);
            const auto& p = as<IncreasingString>(s, "a string");
            return sol.strings[0] == p ? "" : "expected " + toString(p) + ", got " + toString(sol.strings[0]);
        }
        if (kind == "FindHS_Sigma*FindHS_Sigma") {
            need(2);
            const auto& p = as<CodePair>(s, "a code pair");
            auto a = checkSide(sol.strings[0], p.first, U, Side::Lands);
            return a.empty() ? checkSide(sol.strings[1], p.second, U, Side::Lands) : a;
        }
        if (kind == "wFindHS_Pi*wFindHS_Pi") {
            need(2);
            const auto& p = as<CodePair>(s, "a code pair");
            auto a = checkSide(sol.strings[0], p.first, U, Side::Avoids);
            return a.empty() ? checkSide(sol.strings[1], p.second, U, Side::Avoids) : a;
        }
        if (auto k = parseKind(kind)) {
            need(1);
            const OpenCode& P = isDeltaKind(*k) ? as<ClopenCode>(s, "a clopen code").pos : as<OpenCode>(s, "an open code");
            const auto& h = sol.strings[0];
            switch (*k) {
                case ProblemKind::SigmaRT:
                case ProblemKind::DeltaRT: {
                    auto r = checkSide(h, P, U, Side::Lands);
                    return r.empty() ? r : checkSide(h, P, U, Side::Avoids).empty() ? "" : "solution " + toString(h) + " is not homogeneous";
                }
                case ProblemKind::FindHS_Sigma:
                case ProblemKind::wFindHS_Sigma:
                case ProblemKind::FindHS_Delta:
                case ProblemKind::wFindHS_Delta: return checkSide(h, P, U, Side::Lands);
                case ProblemKind::FindHS_Pi:
                case ProblemKind::wFindHS_Pi: return checkSide(h, P, U, Side::Avoids);
            }
        }
        return "unknown source kind " + kind;
    } catch (const Error& e) {
        return e.what();
    }
}

SourceSolution runReduction(const ReductionSpec& spec, const SourceInstance& instance, const Universe& U) {
    const TargetInstance t = spec.forward(instance, U);
    const HSReport r = solveBrute(spec.targetKind, t.code, t.universe);
    return spec.backward(instance, U, t, r);
}

std::size_t VerifyReport::passes() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.pass; }));
}

std::size_t VerifyReport::failures() const { return entries.size() - passes(); }

VerifyReport verifyReduction(const ReductionSpec& spec, const std::vector<CorpusItem>& corpus, unsigned jobs) {
    VerifyReport report;
    report.specId = spec.id;
    report.entries.resize(corpus.size());
    auto work = [&](std::size_t i) {
        VerifyEntry& e = report.entries[i];
        e.index = i;
        try {
            e.solution = runReduction(spec, corpus[i].instance, corpus[i].universe);
            e.detail = spec.check(corpus[i].instance, corpus[i].universe, e.solution);
            e.pass = e.detail.empty();
        } catch (const Error& err) {
            e.pass = false;
            e.detail = err.what();
        }
    };
    jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(corpus.size())));
    if (jobs == 1) {
        for (std::size_t i = 0; i < corpus.size(); ++i) work(i);
        return report;
    }
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j)
        pool.emplace_back([&, j] {
            for (std::size_t i = j; i < corpus.size(); i += jobs) work(i);
        });
    for (auto& t : pool) t.join();
    return report;
}

namespace {

using Rng = std::mt19937_64;

std::size_t pick(Rng& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

IncreasingString randomString(Rng& rng, const std::vector<Value>& alphabet, std::size_t len) {
    std::vector<Value> a = alphabet;
    std::shuffle(a.begin(), a.end(), rng);
    a.resize(std::min(len, a.size()));
    std::sort(a.begin(), a.end());
    return a;
}

OpenCode randomOpenCode(Rng& rng, const Universe& U) {
    const std::size_t roll = pick(rng, 0, 19);
    if (roll == 0) return OpenCode();
    if (roll == 1) return OpenCode({IncreasingString{}});
    std::vector<IncreasingString> g;
    const std::size_t n = pick(rng, 1, 6);
    for (std::size_t i = 0; i < n; ++i) g.push_back(randomString(rng, U.alphabet(), pick(rng, 1, U.horizon())));
    return OpenCode(std::move(g));
}

// Random subset of all d-strings, each kept with probability `density`.
OpenCode randomUniformCode(Rng& rng, const std::vector<Value>& alphabet, std::size_t d, double density,
                           const std::function<bool(const IncreasingString&)>& allowed = nullptr) {
    std::bernoulli_distribution keep(density);
    std::vector<IncreasingString> g;
    forEachCombination(alphabet, d, [&](const IncreasingString& s) {
        if ((!allowed || allowed(s)) && keep(rng)) g.push_back(s);
        return true;
    });
    return OpenCode(std::move(g));
}

ClopenCode randomClopen(Rng& rng, const Universe& U, std::size_t d) {
    const std::size_t roll = pick(rng, 0, 19);
    if (roll == 0) return ClopenCode{OpenCode(), OpenCode({IncreasingString{}})};
    if (roll == 1) return ClopenCode{OpenCode({IncreasingString{}}), OpenCode()};
    std::bernoulli_distribution coin(std::uniform_real_distribution<double>(0.2, 0.8)(rng));
    std::vector<IncreasingString> pos, neg;
    forEachCombination(U.alphabet(), d, [&](const IncreasingString& s) {
        (coin(rng) ? pos : neg).push_back(s);
        return true;
    });
    return ClopenCode{OpenCode(std::move(pos)), OpenCode(std::move(neg))};
}

TreeGen randomTree(Rng& rng, const Universe& U) {
    std::vector<IncreasingString> leaves;
    const std::size_t n = pick(rng, 0, 5);
    for (std::size_t i = 0; i < n; ++i) leaves.push_back(randomString(rng, U.alphabet(), pick(rng, 1, U.horizon())));
    return TreeGen::prefixClosure(leaves);
}

bool solvable(ProblemKind k, const Instance& inst, const Universe& U) {
    try {
        solveBrute(k, inst, U);
        return true;
    } catch (const Error&) {
        return false;
    }
}

std::optional<CorpusItem> drawOne(const std::string& family, Rng& rng, const Universe& U) {
    if (auto k = parseKind(family)) {
        if (isDeltaKind(*k)) {
            ClopenCode D = randomClopen(rng, U, pick(rng, 1, std::min<std::size_t>(2, U.horizon())));
            if (!solvable(*k, D, U)) return std::nullopt;
            return CorpusItem{D, U};
        }
        OpenCode P = randomOpenCode(rng, U);
        if (!solvable(*k, P, U)) return std::nullopt;
        return CorpusItem{P, U};
    }
    if (family == "ClosedChoice") {
        TreeGen T = randomTree(rng, U);
        if (!hasDeepNode(T, U)) return std::nullopt;
        return CorpusItem{T, U};
    }
    if (family == "TotalChoice" || family == "StrongTotalChoice") {
        if (U.horizon() < 2) return std::nullopt;
        return CorpusItem{randomTree(rng, U), U};
    }
    if (family == "Identity") return CorpusItem{randomString(rng, U.alphabet(), U.horizon()), U};
    if (family == "PointColoring") {
        if (U.horizon() < 3) return std::nullopt;
        ClopenCode D = randomClopen(rng, U, 1);
        if (!solvable(ProblemKind::DeltaRT, D, U)) return std::nullopt;
        return CorpusItem{D, U};
    }
    if (family == "UniformPair") {
        if (U.horizon() < 2) return std::nullopt;
        const std::size_t d = pick(rng, 2, U.horizon());
        const double density = std::uniform_real_distribution<double>(0.4, 0.95)(rng);
        CodePair p{randomUniformCode(rng, U.alphabet(), d, density), randomUniformCode(rng, U.alphabet(), d, density)};
        if (!solvable(ProblemKind::FindHS_Sigma, p.first, U) || !solvable(ProblemKind::FindHS_Sigma, p.second, U))
            return std::nullopt;
        return CorpusItem{p, U};
    }
    if (family == "SolovayPair") {
        if (U.horizon() < 2 || treeBound(U) > kStcMaxBound) return std::nullopt;
        TreeGen t1 = randomTree(rng, U), t2 = randomTree(rng, U);
        if (!hasDeepNode(t1, U) || !hasDeepNode(t2, U)) return std::nullopt;
        const auto pow3 = EmbeddingMap::powBase(3), pow5 = EmbeddingMap::powBase(5);
        const std::size_t L = U.horizon();
        const auto a3 = pow3.image(3 * L), a5 = pow5.image(3 * L);
        CodePair p{solovayCode(t1, pow3, Universe(a3, L)), solovayCode(t2, pow5, Universe(a5, L))};
        std::set<Value> all(a3.begin(), a3.end());
        all.insert(a5.begin(), a5.end());
        const std::size_t D = std::max<std::size_t>({2, p.first.depth(), p.second.depth()});
        Universe lifted(std::vector<Value>(all.begin(), all.end()), L + D - 1);
        if (!solvable(ProblemKind::wFindHS_Pi, p.first, lifted) || !solvable(ProblemKind::wFindHS_Pi, p.second, lifted))
            return std::nullopt;
        return CorpusItem{p, lifted};
    }
    throw Error(ErrorCode::InvalidArgument, "unknown corpus family " + family);
}

}  // namespace

const std::vector<std::string>& corpusFamilies() {
    static const std::vector<std::string> f = [] {
        std::vector<std::string> v;
        for (auto k : allProblemKinds()) v.push_back(kindName(k));
        for (const char* s : {"ClosedChoice", "TotalChoice", "StrongTotalChoice", "Identity", "PointColoring",
                              "UniformPair", "SolovayPair"})
            v.push_back(s);
        return v;
    }();
    return f;
}

std::vector<CorpusItem> generateCorpus(const std::string& family, const Universe& U, std::size_t count,
                                       std::uint64_t seed) {
    if (count == 0) throw Error(ErrorCode::InvalidArgument, "corpus count must be >= 1");
    Rng rng(seed);
    std::vector<CorpusItem> out;
    const std::size_t budget = 200 * count + 1000;
    for (std::size_t tries = 0; tries < budget && out.size() < count; ++tries)
        if (auto item = drawOne(family, rng, U)) out.push_back(std::move(*item));
    if (out.size() < count)
        throw Error(ErrorCode::UniverseTooSmall, "only " + std::to_string(out.size()) + " valid " + family +
                                                     " instances found within the attempt budget");
    return out;
}

}  // namespace ramsey
