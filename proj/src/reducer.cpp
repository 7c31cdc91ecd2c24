#include "secant/reducer.hpp"

#include <algorithm>
#include <mutex>
#include <tuple>

namespace secant {

const char* to_string(RuleKind r) {
    switch (r) {
        case RuleKind::DiffHorace: return "diff_horace";
        case RuleKind::SegreSplit: return "segre_split";
        case RuleKind::MonotoneDegree: return "monotone_degree";
        case RuleKind::MonotoneDim: return "monotone_dim";
        case RuleKind::MonotoneSuper: return "monotone_super";
        case RuleKind::RemarkIV: return "remark_iv";
        case RuleKind::RemarkV: return "remark_v";
        case RuleKind::RankLeaf: return "rank_leaf";
        case RuleKind::KnownLeaf: return "known_leaf";
        case RuleKind::None: return "none";
    }
    return "?";
}

std::optional<RuleKind> rule_from_string(const std::string& s) {
    for (auto r : {RuleKind::DiffHorace, RuleKind::SegreSplit, RuleKind::MonotoneDegree, RuleKind::MonotoneDim,
                   RuleKind::MonotoneSuper, RuleKind::RemarkIV, RuleKind::RemarkV, RuleKind::RankLeaf,
                   RuleKind::KnownLeaf, RuleKind::None})
        if (s == to_string(r)) return r;
    return std::nullopt;
}

const char* to_string(ProofStatus s) {
    switch (s) {
        case ProofStatus::Closed: return "closed";
        case ProofStatus::Open: return "open";
        case ProofStatus::Failed: return "failed";
    }
    return "?";
}

const char* to_string(ReductionError::Kind k) {
    using K = ReductionError::Kind;
    switch (k) {
        case K::DegreeTooSmall: return "DegreeTooSmall";
        case K::EpsilonExceedsSPrime: return "EpsilonExceedsSPrime";
        case K::SuperabundanceFail: return "SuperabundanceFail";
        case K::NegativeDividend: return "NegativeDividend";
        case K::AbundancyMismatch: return "AbundancyMismatch";
        case K::BadPartition: return "BadPartition";
        case K::NotApplicable: return "NotApplicable";
    }
    return "?";
}

namespace {

using K = ReductionError::Kind;

Params big(const BigInt& x) {
    if (x >= BigInt(INT64_MIN) && x <= BigInt(INT64_MAX)) return Params(x.convert_to<std::int64_t>());
    return Params(x.str());
}

// Formats with a P^0 factor are legal here; they contribute C(a,a) = 1.
BigInt raw_ambient(const Format& f) {
    BigInt N = 1;
    for (int i = 0; i < f.k(); ++i) N *= binom(f.n[i] + f.a[i], f.a[i]);
    return N;
}

Abundancy raw_abundancy(const Statement& st) {
    BigInt N = raw_ambient(st.fmt);
    BigInt d = scheme_degree(st);
    if (d == N) return Abundancy::Equi;
    return d < N ? Abundancy::Sub : Abundancy::Super;
}

Statement make(Format f, std::int64_t s, std::int64_t t = 0, std::int64_t v = 0) {
    Statement st;
    st.fmt = std::move(f);
    st.s = s;
    st.t = t;
    st.v = v;
    st.spelled_s = t != 0 || v != 0;
    return st;
}

bool first_occurrence(const Format& f, int i) {
    for (int j = 0; j < i; ++j)
        if (f.n[j] == f.n[i] && f.a[j] == f.a[i]) return false;
    return true;
}

}  // namespace

Statement rotate_to_front(const Statement& st, int factor) {
    if (factor < 0 || factor >= st.fmt.k()) throw ReductionError(K::NotApplicable, "factor index out of range");
    Statement r = st;
    if (factor == 0) return r;
    if (st.v > 0) throw ReductionError(K::NotApplicable, "factor 1 is pinned by fiber points");
    std::rotate(r.fmt.n.begin(), r.fmt.n.begin() + factor, r.fmt.n.begin() + factor + 1);
    std::rotate(r.fmt.a.begin(), r.fmt.a.begin() + factor, r.fmt.a.begin() + factor + 1);
    return r;
}

DiffHoraceResult apply_diff_horace(const Statement& st, int factor) {
    if (!st.is_t()) throw ReductionError(K::NotApplicable, "differential Horace needs a T-statement");
    Statement r = rotate_to_front(st, factor);
    const Format& f = r.fmt;
    if (f.a[0] < 3) throw ReductionError(K::DegreeTooSmall, "a_1 < 3");
    if (f.n[0] < 1) throw ReductionError(K::NotApplicable, "n_1 < 1");
    DiffHoraceResult out;
    out.factor = factor;
    try {
        out.hp = horace_params(r);
    } catch (const NegativeDividend& e) {
        throw ReductionError(K::NegativeDividend, e.what());
    }
    if (out.hp.sPrime < out.hp.epsilon)
        throw ReductionError(K::EpsilonExceedsSPrime, "s' = " + std::to_string(out.hp.sPrime) +
                                                          " < eps = " + std::to_string(out.hp.epsilon));
    std::int64_t rest = r.s - out.hp.sPrime - out.hp.epsilon;
    Format f2 = f;
    f2.a[0] -= 2;
    out.lhs = BigInt(rest) * (1 + f.sum_n());
    out.rhs = raw_ambient(f2);
    if (out.lhs < out.rhs)
        throw ReductionError(K::SuperabundanceFail, out.lhs.str() + " < " + out.rhs.str());
    Format f0 = f, f1 = f;
    f0.n[0] -= 1;
    f1.a[0] -= 1;
    out.children = {make(f0, out.hp.sPrime), make(f1, r.s - out.hp.sPrime), make(f2, rest)};
    return out;
}

SplitResult apply_split(const Statement& st, int n1p, std::int64_t sPrime, std::int64_t tPrime, int factor) {
    Statement r = rotate_to_front(st, factor);
    const Format& f = r.fmt;
    if (f.a[0] != 1) throw ReductionError(K::NotApplicable, "Segre split needs a_1 = 1");
    int n1pp = f.n[0] - n1p - 1;
    if (n1p < 0 || n1pp < 0 || sPrime < 0 || sPrime > r.s || tPrime < 0 || tPrime > r.t)
        throw ReductionError(K::BadPartition, "bad partition of n_1, s or t");
    std::int64_t s2 = r.s - sPrime, t2 = r.t - tPrime;
    Format fa = f, fb = f;
    fa.n[0] = n1p;
    fb.n[0] = n1pp;
    SplitResult out;
    out.factor = factor;
    out.children = {make(fa, sPrime, tPrime, r.v + s2), make(fb, s2, t2, r.v + sPrime)};
    out.children[0].spelled_s = out.children[1].spelled_s = true;
    out.first = raw_abundancy(out.children[0]);
    out.second = raw_abundancy(out.children[1]);
    bool ok = (is_sub(out.first) && is_sub(out.second)) || (is_super(out.first) && is_super(out.second));
    if (!ok)
        throw ReductionError(K::AbundancyMismatch, std::string("children are ") + to_string(out.first) + " and " +
                                                       to_string(out.second));
    return out;
}

std::vector<MonotoneStep> apply_monotone(const Statement& st) {
    std::vector<MonotoneStep> out;
    const Format& f = st.fmt;
    if (st.v > 0 && f.k() >= 1 && f.n[0] == 0) {
        out.push_back({canonicalize(st), RuleKind::RemarkIV, Params::object()});
        return out;
    }
    if (f.k() == 0) return out;
    Abundancy ab = abundancy(st);

    if (st.v == 0 && st.t > 0 && is_sub(ab)) {
        Params p;
        p["t"] = st.t;
        out.push_back({canonicalize(make(f, st.s)), RuleKind::RemarkV, p});
    }

    if (is_super(ab)) {
        BigInt N = ambient_dim(f);
        BigInt full = scheme_degree(st);
        auto count_step = [&](const char* field, std::int64_t cur, std::int64_t unit) {
            if (cur == 0 || unit == 0) return;
            // fewest points keeping deg >= N
            BigInt surplus = full - N;
            std::int64_t drop = std::min<std::int64_t>(cur, to_int64(surplus / unit));
            if (drop <= 0) return;
            Statement c = st;
            std::int64_t to = cur - drop;
            if (field[0] == 't') c.t = to;
            if (field[0] == 'v') c.v = to;
            if (field[0] == 's') c.s = to;
            Params p;
            p["kind"] = "count";
            p["field"] = field;
            p["from"] = cur;
            p["to"] = to;
            out.push_back({canonicalize(c), RuleKind::MonotoneSuper, p});
        };
        count_step("t", st.t, 1);
        if (st.v > 0) count_step("v", st.v, f.n[0] + 1);
        count_step("s", st.s, 1 + f.sum_n());
    }

    if (!st.is_t()) return out;

    struct Cand {
        BigInt N;
        int order;
        MonotoneStep step;
    };
    std::vector<Cand> deg, dim;
    int order = 0;
    if (is_sub(ab)) {
        for (int l = 0; l < f.k(); ++l) {
            if (!first_occurrence(f, l)) continue;
            for (int a2 = 1; a2 < f.a[l]; ++a2) {
                Statement c = st;
                c.fmt.a[l] = a2;
                if (!is_sub(abundancy(c))) continue;
                Params p;
                p["factor"] = l + 1;
                p["from"] = f.a[l];
                p["to"] = a2;
                Statement cc = canonicalize(c);
                deg.push_back({ambient_dim(cc.fmt), order++, {cc, RuleKind::MonotoneDegree, p}});
            }
            for (int n2 = 0; n2 < f.n[l]; ++n2) {
                Statement c = st;
                c.fmt.n[l] = n2;
                Statement cc = canonicalize(c);
                if (cc.fmt.k() == 0) continue;
                if (!is_sub(abundancy(cc))) continue;
                BigInt bound = binom(n2 + f.a[l] - 1, f.a[l] - 1);
                for (int i = 0; i < f.k(); ++i)
                    if (i != l) bound *= binom(f.n[i] + f.a[i], f.a[i]);
                if (BigInt(st.s) > bound) continue;
                Params p;
                p["factor"] = l + 1;
                p["from"] = f.n[l];
                p["to"] = n2;
                p["bound"] = big(bound);
                dim.push_back({ambient_dim(cc.fmt), order++, {cc, RuleKind::MonotoneDim, p}});
            }
        }
    }
    auto by_size = [](const Cand& x, const Cand& y) { return std::tie(x.N, x.order) < std::tie(y.N, y.order); };
    std::sort(deg.begin(), deg.end(), by_size);
    std::sort(dim.begin(), dim.end(), by_size);
    for (auto& c : deg) out.push_back(std::move(c.step));
    for (auto& c : dim) out.push_back(std::move(c.step));

    if (is_super(ab)) {
        BigInt d = scheme_degree(st);
        for (int l = 0; l < f.k(); ++l) {
            if (!first_occurrence(f, l)) continue;
            for (int b = f.a[l] + 1;; ++b) {
                Statement c = st;
                c.fmt.a[l] = b;
                if (ambient_dim(c.fmt) > d) break;
                Params p;
                p["kind"] = "degree";
                p["factor"] = l + 1;
                p["from"] = f.a[l];
                p["to"] = b;
                out.push_back({canonicalize(c), RuleKind::MonotoneSuper, p});
            }
        }
    }
    return out;
}

std::uint64_t statement_hash(const Statement& st) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : to_string(canonicalize(st))) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::uint64_t leaf_seed(std::uint64_t seed, const Statement& st) { return seed ^ statement_hash(st); }

Prover::Prover(ProveConfig cfg, KnowledgeOptions kopt) : cfg_(cfg), kb_(std::move(kopt)) {
    if (cfg_.maxDepth < 1) throw std::invalid_argument("maxDepth must be >= 1");
    if (cfg_.trials < 1) throw std::invalid_argument("trials must be >= 1");
}

NodePtr Prover::prove(const Statement& st) { return search(canonicalize(st), cfg_.maxDepth); }

namespace {

NodePtr leaf(const Statement& st, RuleKind rule, ProofStatus status, Params params, std::string reason = {}) {
    auto n = std::make_shared<ProofNode>();
    n->stmt = st;
    n->rule = rule;
    n->status = status;
    n->params = std::move(params);
    n->reason = std::move(reason);
    return n;
}

}  // namespace

NodePtr Prover::search(const Statement& st, int depth) {
    const std::string key = to_string(st);
    {
        std::shared_lock lk(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            const MemoEntry& e = it->second;
            if (e.definitive) return e.definitive;
            if (auto c = e.closed.find(depth); c != e.closed.end()) return c->second;
            if (depth <= e.open_depth) return leaf(st, RuleKind::None, ProofStatus::Open, Params::object(), e.open_reason);
        }
    }
    bool definitive = false;
    NodePtr r = search_uncached(st, depth, definitive);
    std::unique_lock lk(mu_);
    MemoEntry& e = memo_[key];
    if (r->status == ProofStatus::Closed) {
        e.closed.emplace(depth, r);
    } else if (definitive) {
        e.definitive = r;
    } else if (depth > e.open_depth) {
        e.open_depth = depth;
        e.open_reason = r->reason;
    }
    return r;
}

NodePtr Prover::child_node(const Statement& raw, int depth) {
    if (raw.v > 0 && raw.fmt.k() >= 1 && raw.fmt.n[0] == 0) {
        if (depth <= 0) return leaf(raw, RuleKind::None, ProofStatus::Open, Params::object(), "depth exhausted");
        NodePtr c = search(canonicalize(raw), depth - 1);
        auto n = std::make_shared<ProofNode>();
        n->stmt = raw;
        n->rule = RuleKind::RemarkIV;
        n->status = c->status;
        n->children = {c};
        return n;
    }
    return search(canonicalize(raw), depth);
}

NodePtr Prover::try_children(const Statement& parent, RuleKind rule, Params params,
                             const std::vector<Statement>& raw_children, int depth, bool& any_open) {
    std::vector<NodePtr> kids;
    for (const auto& c : raw_children) {
        NodePtr n = child_node(c, depth - 1);
        if (n->status != ProofStatus::Closed) {
            if (n->status == ProofStatus::Open) any_open = true;
            return nullptr;
        }
        kids.push_back(std::move(n));
    }
    auto n = std::make_shared<ProofNode>();
    n->stmt = parent;
    n->rule = rule;
    n->params = std::move(params);
    n->children = std::move(kids);
    n->status = ProofStatus::Closed;
    return n;
}

NodePtr Prover::search_uncached(const Statement& st, int depth, bool& definitive) {
    if (depth <= 0) return leaf(st, RuleKind::None, ProofStatus::Open, Params::object(), "depth exhausted");

    Fact fact = kb_.lookup(st);
    if (fact.status != FactStatus::Unknown) {
        Params p;
        p["source"] = fact.source;
        if (!fact.detail.empty()) p["detail"] = fact.detail;
        if (fact.status == FactStatus::KnownTrue) return leaf(st, RuleKind::KnownLeaf, ProofStatus::Closed, p);
        definitive = true;
        return leaf(st, RuleKind::KnownLeaf, ProofStatus::Failed, p, "known defective (" + fact.source + ")");
    }

    bool any_open = false;
    const Format& f = st.fmt;

    if (st.is_t()) {
        for (int l = 0; l < f.k(); ++l) {
            if (f.a[l] < 3 || !first_occurrence(f, l)) continue;
            DiffHoraceResult dh;
            try {
                dh = apply_diff_horace(st, l);
            } catch (const ReductionError&) {
                continue;
            }
            Params p;
            p["factor"] = l + 1;
            p["sPrime"] = dh.hp.sPrime;
            p["eps"] = dh.hp.epsilon;
            p["nR"] = big(dh.hp.nR);
            p["lhs"] = big(dh.lhs);
            p["rhs"] = big(dh.rhs);
            p["equality"] = dh.lhs == dh.rhs;
            std::vector<Statement> kids(dh.children.begin(), dh.children.end());
            if (auto n = try_children(st, RuleKind::DiffHorace, p, kids, depth, any_open)) return n;
        }
    }

    for (auto& step : apply_monotone(st))
        if (auto n = try_children(st, step.rule, step.params, {step.child}, depth, any_open)) return n;

    // Segre split over a scored grid.
    struct SplitCand {
        BigInt score;
        int factor, n1p;
        std::int64_t sp, tp;
        std::array<Statement, 2> kids;
    };
    std::vector<SplitCand> cands;
    for (int l = 0; l < f.k(); ++l) {
        if (f.a[l] != 1 || !first_occurrence(f, l)) continue;
        if (st.v > 0 && l != 0) continue;
        for (int n1p = 0; n1p < f.n[l]; ++n1p)
            for (std::int64_t sp = 0; sp <= st.s; ++sp)
                for (std::int64_t tp = 0; tp <= st.t; ++tp) {
                    SplitResult sr;
                    try {
                        sr = apply_split(st, n1p, sp, tp, l);
                    } catch (const ReductionError&) {
                        continue;
                    }
                    BigInt score = 0;
                    for (const auto& c : sr.children) {
                        BigInt diff = scheme_degree(c) - raw_ambient(c.fmt);
                        score += diff < 0 ? BigInt(-diff) : diff;
                    }
                    cands.push_back({score, l, n1p, sp, tp, sr.children});
                }
    }
    std::sort(cands.begin(), cands.end(), [](const SplitCand& x, const SplitCand& y) {
        return std::make_tuple(x.score, x.factor, x.n1p, -x.sp, -x.tp) <
               std::make_tuple(y.score, y.factor, y.n1p, -y.sp, -y.tp);
    });
    if (static_cast<int>(cands.size()) > cfg_.splitCap) cands.resize(cfg_.splitCap);
    for (const auto& c : cands) {
        Params p;
        p["factor"] = c.factor + 1;
        p["n1p"] = c.n1p;
        p["sPrime"] = c.sp;
        p["tPrime"] = c.tp;
        if (auto n = try_children(st, RuleKind::SegreSplit, p, {c.kids[0], c.kids[1]}, depth, any_open)) return n;
    }

    if (cfg_.allowRankLeaves && ambient_dim(f) <= cfg_.rankCap) {
        VerifyOptions vo;
        vo.prime = cfg_.prime;
        vo.trials = cfg_.trials;
        vo.seed = leaf_seed(cfg_.seed, st);
        Verdict v = verify(st, vo);
        Params p;
        p["prime"] = v.prime;
        p["seed"] = v.seed;
        p["expected"] = big(v.expected);
        p["observed"] = v.observed;
        p["digest"] = v.digest;
        if (v.kind == VerdictKind::CertifiedTrue) return leaf(st, RuleKind::RankLeaf, ProofStatus::Closed, p);
        definitive = true;
        return leaf(st, RuleKind::RankLeaf, ProofStatus::Failed, p,
                    "rank deficit " + std::to_string(v.deficit));
    }

    if (any_open) return leaf(st, RuleKind::None, ProofStatus::Open, Params::object(), "depth exhausted");
    definitive = true;
    return leaf(st, RuleKind::None, ProofStatus::Failed, Params::object(), "no rule applies");
}

NodePtr prove(const Statement& st, const ProveConfig& cfg, const KnowledgeOptions& kopt) {
    Prover p(cfg, kopt);
    return p.prove(st);
}

}  // namespace secant
