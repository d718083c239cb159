#include "ramsey/solvers.hpp"

#include <algorithm>
#include <set>

#include "ramsey/constructions.hpp"

namespace ramsey {

const std::vector<ProblemKind>& allProblemKinds() {
    static const std::vector<ProblemKind> kinds = {
        ProblemKind::SigmaRT,      ProblemKind::FindHS_Sigma,  ProblemKind::FindHS_Pi,
        ProblemKind::wFindHS_Sigma, ProblemKind::wFindHS_Pi,   ProblemKind::DeltaRT,
        ProblemKind::FindHS_Delta, ProblemKind::wFindHS_Delta,
    };
    return kinds;
}

const char* kindName(ProblemKind k) {
    switch (k) {
        case ProblemKind::SigmaRT: return "SigmaRT";
        case ProblemKind::FindHS_Sigma: return "FindHS_Sigma";
        case ProblemKind::FindHS_Pi: return "FindHS_Pi";
        case ProblemKind::wFindHS_Sigma: return "wFindHS_Sigma";
        case ProblemKind::wFindHS_Pi: return "wFindHS_Pi";
        case ProblemKind::DeltaRT: return "DeltaRT";
        case ProblemKind::FindHS_Delta: return "FindHS_Delta";
        case ProblemKind::wFindHS_Delta: return "wFindHS_Delta";
    }
    return "?";
}

std::optional<ProblemKind> parseKind(const std::string& name) {
    for (auto k : allProblemKinds())
        if (name == kindName(k)) return k;
    return std::nullopt;
}

bool isDeltaKind(ProblemKind k) {
    return k == ProblemKind::DeltaRT || k == ProblemKind::FindHS_Delta || k == ProblemKind::wFindHS_Delta;
}

namespace {

enum class Want { Homogeneous, Land, Avoid, WeakLand, WeakAvoid };

Want wantOf(ProblemKind k) {
    switch (k) {
        case ProblemKind::SigmaRT:
        case ProblemKind::DeltaRT: return Want::Homogeneous;
        case ProblemKind::FindHS_Sigma:
        case ProblemKind::FindHS_Delta: return Want::Land;
        case ProblemKind::FindHS_Pi: return Want::Avoid;
        case ProblemKind::wFindHS_Sigma:
        case ProblemKind::wFindHS_Delta: return Want::WeakLand;
        case ProblemKind::wFindHS_Pi: return Want::WeakAvoid;
    }
    return Want::Homogeneous;
}

// The open code whose landing/avoiding the kind asks about.
const OpenCode& prepare(ProblemKind kind, const Instance& instance, const Universe& U) {
    if (isDeltaKind(kind)) {
        const auto* D = std::get_if<ClopenCode>(&instance);
        if (!D) throw Error(ErrorCode::InvalidArgument, std::string(kindName(kind)) + " takes a clopen instance");
        if (D->depth() > U.horizon()) throw Error(ErrorCode::HorizonTooSmall, "clopen depth exceeds horizon");
        for (const auto* side : {&D->pos, &D->neg})
            for (const auto& g : side->generators())
                if (!U.containsAll(g))
                    throw Error(ErrorCode::InvalidArgument, "generator " + toString(g) + " outside the alphabet");
        if (!validateClopen(*D, U)) throw Error(ErrorCode::InvalidArgument, "clopen code does not partition the universe");
        return D->pos;
    }
    const auto* P = std::get_if<OpenCode>(&instance);
    if (!P) throw Error(ErrorCode::InvalidArgument, std::string(kindName(kind)) + " takes an open instance");
    if (P->depth() > U.horizon()) throw Error(ErrorCode::HorizonTooSmall, "code depth exceeds horizon");
    for (const auto& g : P->generators())
        if (!U.containsAll(g)) throw Error(ErrorCode::InvalidArgument, "generator " + toString(g) + " outside the alphabet");
    return *P;
}

HSReport decide(ProblemKind kind, const std::optional<IncreasingString>& land,
                const std::optional<IncreasingString>& avoid) {
    const std::string k = kindName(kind);
    switch (wantOf(kind)) {
        case Want::Homogeneous:
            if (land && (!avoid || *land < *avoid)) return {*land, Side::Lands};
            if (avoid) return {*avoid, Side::Avoids};
            throw Error(ErrorCode::NotInDomain, k + ": no homogeneous string at this horizon");
        case Want::Land:
            if (land) return {*land, Side::Lands};
            throw Error(ErrorCode::NotInDomain, k + ": no landing string");
        case Want::Avoid:
            if (avoid) return {*avoid, Side::Avoids};
            throw Error(ErrorCode::NotInDomain, k + ": no avoiding string");
        case Want::WeakLand:
            if (avoid) throw Error(ErrorCode::DomainViolation, k + ": " + toString(*avoid) + " avoids");
            if (land) return {*land, Side::Lands};
            throw Error(ErrorCode::NotInDomain, k + ": no landing string");
        case Want::WeakAvoid:
            if (land) throw Error(ErrorCode::DomainViolation, k + ": " + toString(*land) + " lands");
            if (avoid) return {*avoid, Side::Avoids};
            throw Error(ErrorCode::NotInDomain, k + ": no avoiding string");
    }
    throw Error(ErrorCode::InvalidArgument, "unknown kind");
}

class PrunedSearch {
public:
    PrunedSearch(const OpenCode& P, const Universe& U) : P_(P), U_(U), d_(P.depth()) {}

    std::optional<IncreasingString> firstLander() {
        if (d_ == 0 && !memberPrefix({}, P_)) return std::nullopt;
        IncreasingString s;
        return dfs(s, 0, true) ? std::optional<IncreasingString>(s) : std::nullopt;
    }

    std::optional<IncreasingString> firstAvoider() {
        if (!avoidSideTreeMember({}, P_)) return std::nullopt;
        IncreasingString s;
        return dfs(s, 0, false) ? std::optional<IncreasingString>(s) : std::nullopt;
    }

private:
    // Every d-subsequence of s ending in its last entry has a generator prefix.
    bool landOk(const IncreasingString& s) const {
        if (d_ == 0 || s.size() < d_) return true;
        IncreasingString head(s.begin(), s.end() - 1);
        const Value last = s.back();
        return forEachSubsequence(head, d_ - 1, [&](const IncreasingString& g) {
            IncreasingString t = g;
            t.push_back(last);
            return memberPrefix(t, P_);
        });
    }

    bool dfs(IncreasingString& s, std::size_t from, bool land) {
        const auto& a = U_.alphabet();
        const std::size_t L = U_.horizon();
        if (s.size() == L) return true;
        for (std::size_t i = from; i + (L - s.size()) <= a.size(); ++i) {
            s.push_back(a[i]);
            const bool ok = land ? landOk(s) : avoidSideTreeMember(s, P_);
            if (ok && dfs(s, i + 1, land)) return true;
            s.pop_back();
        }
        return false;
    }

    const OpenCode& P_;
    const Universe& U_;
    std::size_t d_;
};

}  // namespace

HSReport solveBrute(ProblemKind kind, const Instance& instance, const Universe& U) {
    const OpenCode& P = prepare(kind, instance, U);
    const Want want = wantOf(kind);
    std::optional<IncreasingString> land, avoid;
    forEachCombination(U.alphabet(), U.horizon(), [&](const IncreasingString& h) {
        const Side s = classify(h, P);
        if (s == Side::Lands && !land) land = h;
        if (s == Side::Avoids && !avoid) avoid = h;
        switch (want) {
            case Want::Homogeneous: return !(land || avoid);
            case Want::Land: return !land;
            case Want::Avoid: return !avoid;
            case Want::WeakLand:
            case Want::WeakAvoid: return !(land && avoid);
        }
        return true;
    });
    return decide(kind, land, avoid);
}

HSReport solvePruned(ProblemKind kind, const Instance& instance, const Universe& U) {
    const OpenCode& P = prepare(kind, instance, U);
    PrunedSearch search(P, U);
    const Want want = wantOf(kind);
    std::optional<IncreasingString> land, avoid;
    if (want != Want::Avoid) land = search.firstLander();
    if (want != Want::Land) avoid = search.firstAvoider();
    return decide(kind, land, avoid);
}

namespace {

class Avigad {
public:
    Avigad(const OpenCode& P, const Universe& U, AvigadResult& out)
        : P_(P), U_(U), out_(out), T_(avoidSideTree(P, U)) {}

    void run() {
        if (auto deep = findFullPath(T_, U_)) {
            out_.status = AvigadResult::Status::AvoidEvidence;
            out_.evidence = *deep;
            return;
        }
        label();
        out_.rootGood = good({});
        IncreasingString h;
        bool guided = true;
        if (extract(h, true, guided)) {
            out_.status = AvigadResult::Status::Lands;
            out_.report = HSReport{h, Side::Lands};
            out_.guided = guided;
        } else {
            out_.status = AvigadResult::Status::NoSolution;
        }
    }

private:
    bool good(const IncreasingString& s) const {
        if (T_.contains(s)) return out_.state.at(s).good;
        for (std::size_t k = 0; k <= s.size(); ++k) {
            IncreasingString p(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k));
            if (!T_.contains(p)) return memberPrefix(p, P_);
        }
        return false;
    }

    static std::vector<Value> intersect(const std::vector<Value>& a, const std::vector<Value>& b) {
        std::vector<Value> r;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(r));
        return r;
    }

    // u_0 = min U_{t_0}; u_{i+1} = least element above u_i of the intersection
    // of U_{t_0..t_i} (the last set repeats once the children run out).
    std::vector<Value> diagonal(const std::vector<IncreasingString>& cofinal) const {
        std::vector<Value> V;
        std::vector<Value> inter = U_.alphabet();
        std::size_t i = 0;
        while (true) {
            if (i < cofinal.size()) inter = intersect(inter, out_.state.at(cofinal[i]).U);
            auto it = V.empty() ? inter.begin() : std::upper_bound(inter.begin(), inter.end(), V.back());
            if (it == inter.end()) break;
            V.push_back(*it);
            ++i;
        }
        return V;
    }

    void label() {
        if (T_.empty()) return;
        const auto order = kbOrder(T_);
        const std::size_t threshold = U_.horizon();
        const IncreasingString* prev = nullptr;
        for (const auto& s : order) {
            AvigadNode node;
            auto kids = T_.children(s);
            std::sort(kids.begin(), kids.end(), kbLess);
            if (!prev) node.V = U_.alphabet();
            else if (!kids.empty()) node.V = diagonal(kids);
            else node.V = out_.state.at(*prev).U;
            std::vector<Value> v1, v0;
            for (Value m : node.V) {
                if (!s.empty() && m <= s.back()) continue;
                IncreasingString c = s;
                c.push_back(m);
                (good(c) ? v1 : v0).push_back(m);
            }
            node.good = v1.size() >= threshold;
            node.U = node.good ? v1 : v0;
            out_.state[s] = std::move(node);
            prev = &s;
        }
    }

    std::vector<Value> preferred(const IncreasingString& h) const {
        std::vector<Value> inter = U_.alphabet();
        for (std::size_t k = 0; k <= h.size(); ++k)
            forEachSubsequence(h, k, [&](const IncreasingString& t) {
                if (T_.contains(t)) inter = intersect(inter, out_.state.at(t).U);
                return true;
            });
        return inter;
    }

    bool extract(IncreasingString& h, bool onPath, bool& guided) {
        if (h.size() == U_.horizon()) {
            if (classify(h, P_) != Side::Lands) return false;
            guided = onPath;
            return true;
        }
        const auto pref = preferred(h);
        std::vector<std::pair<Value, bool>> order;
        for (Value m : pref)
            if (h.empty() || m > h.back()) order.emplace_back(m, true);
        for (Value m : U_.alphabet())
            if ((h.empty() || m > h.back()) && !std::binary_search(pref.begin(), pref.end(), m))
                order.emplace_back(m, false);
        for (const auto& [m, inPref] : order) {
            h.push_back(m);
            if (extract(h, onPath && inPref, guided)) return true;
            h.pop_back();
        }
        return false;
    }

    const OpenCode& P_;
    const Universe& U_;
    AvigadResult& out_;
    TreeGen T_;
};

}  // namespace

AvigadResult avigadExtract(const OpenCode& P, const Universe& U) {
    if (P.depth() > U.horizon()) throw Error(ErrorCode::HorizonTooSmall, "code depth exceeds horizon");
    AvigadResult out;
    Avigad(P, U, out).run();
    return out;
}

}  // namespace ramsey
