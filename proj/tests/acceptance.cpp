// One PASS/FAIL line per acceptance criterion. Sizes, seeds and time limits
// are pinned here; the exit status is nonzero if any line fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

#include "laws.hpp"
#include "ramsey/lattice.hpp"
#include "ramsey/reductions.hpp"

namespace {

using namespace ramsey;
using Clock = std::chrono::steady_clock;

constexpr double kAvoidTreeLimit = 30.0;
constexpr double kPowLimit = 60.0;
constexpr double kCatalogLimit = 120.0;

struct Outcome {
    bool pass = false;
    std::string detail;
};

int failed = 0;

void report(int id, const char* name, const std::function<Outcome()>& run) {
    const auto start = Clock::now();
    Outcome o;
    try {
        o = run();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    if (!o.pass) ++failed;
    std::printf("%s [%2d] %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", id, name, o.detail.c_str(), secs);
    std::fflush(stdout);
}

std::string tallyText(const laws::Tally& t) {
    std::string s = std::to_string(t.cases) + " cases, " + std::to_string(t.failures) + " failures";
    if (t.failures) s += "; first: " + t.first;
    return s;
}

Outcome timed(const laws::Tally& t, double secs, double limit) {
    std::ostringstream os;
    os << tallyText(t) << ", " << secs << " s of " << limit << " s allowed";
    return {t.ok() && secs < limit, os.str()};
}

double since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string readFile(const std::string& path) {
    std::ifstream in(path);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

int main() {
    report(1, "avoid-side tree law, U=(7,4), 1000 codes", [] {
        const auto start = Clock::now();
        auto t = laws::avoidTreeLaw(Universe::bounded(7, 4), 1000, 101);
        return timed(t, since(start), kAvoidTreeLimit);
    });

    report(2, "pow preservation, 500 codes, n in {2,3}, M<=5, L<=3", [] {
        const auto start = Clock::now();
        auto t = laws::powLaw(500, 202);
        return timed(t, since(start), kPowLimit);
    });

    report(3, "box-product law, exhaustive at M=4, L=2", [] {
        auto t = laws::boxLawExhaustive(Universe::bounded(4, 2));
        return Outcome{t.ok() && t.cases == 22 * 22, tallyText(t)};
    });

    report(4, "disjoint-union law, evens/odds, 300 instances", [] {
        auto t = laws::unionLaw(300, 404);
        return Outcome{t.ok() && t.cases == 300, tallyText(t)};
    });

    report(5, "Solovay dichotomy, 300 trees, M<=6, L<=3", [] {
        auto t = laws::solovayLaw(300, 505);
        return Outcome{t.ok() && t.cases == 300, tallyText(t)};
    });

    report(6, "describePath surjection, 300 trees", [] {
        auto t = laws::describeLaw(300, 606);
        return Outcome{t.ok() && t.cases == 300, tallyText(t)};
    });

    report(7, "KB criterion, 300 trees", [] {
        auto t = laws::kbLaw(300, 707);
        return Outcome{t.ok() && t.cases == 300, tallyText(t)};
    });

    report(8, "reduction catalog, 7 specs x 500 at (6,3), plus negative control", [] {
        const auto start = Clock::now();
        const Universe U = Universe::bounded(6, 3);
        const unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
        std::string detail;
        bool ok = reductionCatalog().size() == 7;
        for (const auto& spec : reductionCatalog()) {
            auto corpus = generateCorpus(spec.corpusFamily, U, 500, 808);
            auto rep = verifyReduction(spec, corpus, jobs);
            ok = ok && rep.entries.size() == 500 && rep.failures() == 0;
            detail += spec.id + " " + std::to_string(rep.passes()) + "/" + std::to_string(rep.entries.size()) + "; ";
        }
        const auto bad = corruptedDescribeSpec();
        auto rep = verifyReduction(bad, generateCorpus(bad.corpusFamily, U, 100, 808), jobs);
        ok = ok && rep.failures() > 0;
        detail += "corrupted spec " + std::to_string(rep.failures()) + " failures of 100";
        const double secs = since(start);
        std::ostringstream os;
        os << detail << ", " << secs << " s of " << kCatalogLimit << " s allowed";
        return Outcome{ok && secs < kCatalogLimit, os.str()};
    });

    report(9, "pruned equals brute, 2000 instances over 8 kinds", [] {
        auto t = laws::prunedMatchesBrute(2000, 909);
        return Outcome{t.ok() && t.cases == 2000, tallyText(t)};
    });

    report(10, "Avigad cross-check, 200 domain + 200 avoid instances, M<=8, L<=4", [] {
        auto t = laws::avigadCrossCheck(200, 1010);
        const bool ok = t.domain.ok() && t.avoid.ok() && t.domain.cases == 200 && t.avoid.cases == 200;
        return Outcome{ok, "domain: " + tallyText(t.domain) + "; avoid: " + tallyText(t.avoid)};
    });

    report(11, "lattice integrity", [] {
        const std::string dir = RAMSEY_DATA_DIR;
        FactSet seed = ingestFacts(dir + "/seed.facts");
        auto checked = closeAndCheck(seed);
        const bool golden = exportDot(seed) == readFile(dir + "/figure1.dot");
        FactSet injected = seed;
        injected.facts.push_back({"C", Relation::leW, "wFindHS_Sigma", "injected", 0});
        const auto fired = closeAndCheck(injected).contradictions.size();
        std::string detail = std::to_string(seed.size()) + " facts, " +
                             std::to_string(checked.contradictions.size()) + " contradictions, golden DOT " +
                             (golden ? "matches" : "differs") + ", injected fact gives " + std::to_string(fired) +
                             " contradictions";
        return Outcome{seed.size() >= 25 && checked.contradictions.empty() && golden && fired > 0, detail};
    });

    std::printf("%d of 11 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
