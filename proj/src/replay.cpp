#include "secant/replay.hpp"

#include <sstream>
#include <stdexcept>

#include "secant/checker.hpp"
#include "secant/hilbert.hpp"
#include "secant/knowledge.hpp"
#include "secant/reducer.hpp"
#include "secant/schemes.hpp"

namespace secant {

namespace {

class Script {
public:
    explicit Script(ReplayResult& r) : r_(r) {}

    void eq(const std::string& what, const BigInt& got, const BigInt& want) {
        std::ostringstream os;
        os << what << " = " << got;
        if (got != want) os << " (expected " << want << ")";
        record(os.str(), got == want);
    }

    void holds(const std::string& what, bool ok) { record(what + (ok ? "" : " does not hold"), ok); }

    void same(const std::string& what, const Statement& got, const Statement& want) {
        bool ok = canonicalize(got) == canonicalize(want);
        std::string line = what + ": " + to_string(got);
        if (!ok) line += " (expected " + to_string(want) + ")";
        record(line, ok);
    }

    void note(const std::string& line) { r_.transcript.push_back("  " + line); }

private:
    ReplayResult& r_;

    void record(const std::string& line, bool ok) {
        r_.transcript.push_back((ok ? "ok    " : "FAIL  ") + line);
        if (!ok && r_.ok) {
            r_.ok = false;
            r_.failure = line;
        }
    }
};

Statement S(std::vector<int> n, std::vector<int> a, std::int64_t s, std::int64_t t = 0, std::int64_t v = 0) {
    Statement st;
    st.fmt.n = std::move(n);
    st.fmt.a = std::move(a);
    st.s = s;
    st.t = t;
    st.v = v;
    st.spelled_s = t != 0 || v != 0;
    return st;
}

Scheme doubles(Format fmt, int free, int on_h) {
    Scheme z;
    z.fmt = std::move(fmt);
    for (int i = 0; i < free; ++i) z.components.push_back({ComponentKind::Double, {}, {}});
    for (int i = 0; i < on_h; ++i) z.components.push_back({ComponentKind::Double, {}, {{0, 1}}});
    return z;
}

Scheme with_format(Scheme z, const Format& fmt) {
    z.fmt = fmt;
    return z;
}

Scheme first_components(const Scheme& z, std::size_t count) {
    Scheme out;
    out.fmt = z.fmt;
    out.components.assign(z.components.begin(), z.components.begin() + count);
    return out;
}

BigInt rank_of(const Statement& st, const PrimeField& F, std::uint64_t seed) {
    return hilbert_value(sample(scheme_for(canonicalize(st)), F, seed), F);
}

void horace_easy(Script& sc, const ReplayOptions& opt) {
    PrimeField F(opt.prime);
    Format f33{{1, 1}, {3, 3}};
    Scheme z = sample(doubles(f33, 3, 2), F, opt.seed);
    sc.note("Z = 5 double points on P1 x P1, two of them on H = P0 x P1");

    Scheme zres = residual(z);
    Scheme three = first_components(zres, 3);
    BigInt h3 = hilbert_value(three, F);
    sc.eq("h({p1^2,p2^2,p3^2}, (2,3))", h3, 9);
    sc.eq("h(Z~, (2,3))", hilbert_value(zres, F), 11);
    BigInt h3low = hilbert_value(with_format(three, Format{{1, 1}, {1, 3}}), F);
    sc.eq("h({p1^2,p2^2,p3^2}, (1,3))", h3low, 8);
    sc.eq("h(res) + C(1+3,3)", chandler_bound(h3low, zres.fmt), 12);
    sc.holds("Chandler inequality 9 + 2 <= 12", chandler_holds(h3, 2, h3low, zres.fmt));

    Scheme ztr = trace(z);
    sc.eq("h(Z cap H, (3,3)) on P0 x P1", hilbert_value(ztr, F), 4);
    sc.eq("expected value of T(1;3;2)", expected_value(S({1}, {3}, 2)), 4);
    sc.eq("h(Z, (3,3))", hilbert_value(z, F), 15);
    sc.eq("expected value of T(1,1;3,3;5)", expected_value(S({1, 1}, {3, 3}, 5)), 15);
}

void counter(Script& sc, const ReplayOptions&) {
    Statement st = S({2, 2}, {4, 4}, 45);
    sc.holds("T(2,2;4,4;45) is equiabundant", abundancy(st) == Abundancy::Equi);
    BigInt nh = binom(1 + 4, 4) * binom(2 + 4, 4);
    sc.eq("C(1+4,4) C(2+4,4)", nh, 75);
    sc.eq("75 mod (1+2+1)", nh % 4, 3);
    bool found = false;
    for (std::int64_t sp = 0; sp <= st.s; ++sp)
        if (abundancy(S({1, 2}, {4, 4}, sp)) == Abundancy::Equi) found = true;
    sc.holds("no s' makes (1,2;4,4;s') equiabundant", !found);
    HoraceParams hp = horace_params(st);
    sc.eq("differential Horace s'", hp.sPrime, 18);
    sc.eq("differential Horace eps", hp.epsilon, 3);
}

void segre1(Script& sc, const ReplayOptions& opt) {
    Statement st = S({2, 2}, {1, 4}, 9);
    sc.holds("(2,2;1,4;9) is subabundant", is_sub(abundancy(st)));
    SplitResult a = apply_split(st, 1, 6, 0);
    sc.same("split child 1", a.children[0], S({1, 2}, {1, 4}, 6, 0, 3));
    sc.same("split child 2", a.children[1], S({0, 2}, {1, 4}, 3, 0, 6));
    sc.holds("both children equiabundant",
             a.first == Abundancy::Equi && a.second == Abundancy::Equi);
    SplitResult b = apply_split(a.children[0], 0, 3, 0);
    sc.same("S(1,2;1,4;6;0;3) child 1", b.children[0], S({0, 2}, {1, 4}, 3, 0, 6));
    sc.same("S(1,2;1,4;6;0;3) child 2", b.children[1], S({0, 2}, {1, 4}, 3, 0, 6));
    Statement folded = canonicalize(S({0, 2}, {1, 4}, 3, 0, 6));
    sc.same("fold fiber points", folded, S({2}, {4}, 3, 6, 0));
    sc.holds("S(2;4;3;6;0) is subabundant", is_sub(abundancy(folded)));
    bool ah = false;
    for (const Fact& f : KnowledgeBase().lookup_all(S({2}, {4}, 3)))
        ah = ah || (f.status == FactStatus::KnownTrue && f.source == "AH");
    sc.holds("T(2;4;3) is known true by AH", ah);

    PrimeField F(opt.prime);
    sc.eq("rank for S(2;4;3;6;0)", rank_of(folded, F, opt.seed), 15);
    sc.eq("rank for T(2,2;1,4;9)", rank_of(st, F, opt.seed), 45);

    ProveConfig cfg;
    cfg.seed = opt.seed;
    cfg.prime = opt.prime;
    cfg.allowRankLeaves = false;
    NodePtr tree = prove(st, cfg);
    sc.holds("T(2,2;1,4;9) closes without rank leaves", tree->status == ProofStatus::Closed);
    if (tree->status == ProofStatus::Closed) {
        CheckResult cr = check_tree(to_json(*tree));
        sc.holds("proof tree passes the checker", cr.ok);
    }
}

void segre2(Script& sc, const ReplayOptions& opt) {
    PrimeField F(opt.prime);
    Format f22{{2, 2}, {2, 2}};
    Scheme z = sample(doubles(f22, 2, 3), F, opt.seed);
    sc.note("Z = 5 double points on P2 x P2, three of them on H = P1 x P2");
    sc.eq("h(Z cap H, (2,2)) for T(1,2;2,2;3)", hilbert_value(trace(z), F), 12);
    sc.eq("h(Z~, (1,2)) for S(2,2;1,2;2;3;0)", hilbert_value(residual(z), F), 13);

    Statement res = S({2, 2}, {1, 2}, 2, 3, 0);
    SplitResult a = apply_split(res, 1, 1, 3);
    sc.same("split child 1", a.children[0], S({1, 2}, {1, 2}, 1, 3, 1));
    sc.same("split child 2", a.children[1], S({0, 2}, {1, 2}, 1, 0, 1));
    sc.same("fold fiber points", canonicalize(a.children[1]), S({2}, {2}, 1, 1, 0));
    SplitResult b = apply_split(a.children[0], 0, 1, 1);
    sc.same("S(1,2;1,2;1;3;1) child 1", b.children[0], S({0, 2}, {1, 2}, 1, 1, 1));
    sc.same("S(1,2;1,2;1;3;1) child 2", b.children[1], S({0, 2}, {1, 2}, 0, 2, 2));
    sc.same("fold child 1", canonicalize(b.children[0]), S({2}, {2}, 1, 2, 0));
    sc.same("fold child 2", canonicalize(b.children[1]), S({2}, {2}, 0, 4, 0));

    for (const Statement& leaf : {S({2}, {2}, 1, 1, 0), S({2}, {2}, 1, 2, 0), S({2}, {2}, 0, 4, 0),
                                  S({1, 2}, {1, 2}, 1, 3, 1)})
        sc.eq("rank for " + to_string(leaf), rank_of(leaf, F, opt.seed), expected_value(canonicalize(leaf)));
    sc.eq("h(Z, (2,2))", hilbert_value(z, F), 25);
    sc.eq("expected value of T(2,2;2,2;5)", expected_value(S({2, 2}, {2, 2}, 5)), 25);
}

void nn1(Script& sc, const ReplayOptions& opt) {
    const int n = opt.n;
    if (n < 2) throw std::invalid_argument("nn1 needs n >= 2");
    PrimeField F(opt.prime);
    Statement st = S({n, n, 1}, {1, 1, 2}, n + 2);
    std::int64_t dim = 2ll * n * n + 6ll * n + 2;
    sc.eq("3n+3 + n(2n+3) - 1", BigInt(3 * n + 3 + n * (2 * n + 3) - 1), dim);
    sc.eq("expected value", expected_value(st), dim + 2);

    SplitResult a = apply_split(st, n - 1, n + 1, 0);
    sc.same("split child 1", a.children[0], S({n - 1, n, 1}, {1, 1, 2}, n + 1, 0, 1));
    sc.same("split child 2", canonicalize(a.children[1]), S({n, 1}, {1, 2}, 1, n + 1, 0));
    sc.holds("(n,1;1,2;1;n+1;0) is subabundant", is_sub(abundancy(S({n, 1}, {1, 2}, 1, n + 1))));
    sc.holds("(n,1;1,2;2;n-1;0) is equiabundant", abundancy(S({n, 1}, {1, 2}, 2, n - 1)) == Abundancy::Equi);
    sc.eq("rank for S(n,1;1,2;1;n+1;0)", rank_of(S({n, 1}, {1, 2}, 1, n + 1), F, opt.seed), 2 * n + 3);
    sc.eq("rank for S(n,1;1,2;2;n;0)", rank_of(S({n, 1}, {1, 2}, 2, n), F, opt.seed), 3 * n + 3);

    for (std::uint64_t k = 0; k < 5; ++k) {
        BigInt r = rank_of(st, F, opt.seed + k);
        sc.eq("dim sigma_" + std::to_string(n + 2) + " (seed " + std::to_string(opt.seed + k) + ")", r - 1, dim);
    }
}

void diff_horace(Script& sc, const ReplayOptions& opt) {
    Statement st = S({2, 2}, {4, 4}, 45);
    DiffHoraceResult dh = apply_diff_horace(st);
    sc.eq("s'", dh.hp.sPrime, 18);
    sc.eq("eps", dh.hp.epsilon, 3);
    sc.eq("(45-18-3)(2+2+1)", dh.lhs, 120);
    sc.eq("N(2,2;2,4)", dh.rhs, 90);
    sc.same("child 1", dh.children[0], S({1, 2}, {4, 4}, 18));
    sc.same("child 2", dh.children[1], S({2, 2}, {3, 4}, 27));
    sc.same("child 3", dh.children[2], S({2, 2}, {2, 4}, 24));
    VerifyOptions vo;
    vo.prime = opt.prime;
    vo.seed = opt.seed;
    for (const Statement& c : {dh.children[0], dh.children[1], dh.children[2], st})
        sc.holds(to_string(c) + " rank-certified", verify(canonicalize(c), vo).kind == VerdictKind::CertifiedTrue);
}

}  // namespace

const std::vector<std::string>& replay_ids() {
    static const std::vector<std::string> ids{"horace-easy", "counter", "segre1", "segre2", "nn1", "diff-horace"};
    return ids;
}

ReplayResult replay(const std::string& id, const ReplayOptions& opt) {
    ReplayResult r;
    r.id = id;
    Script sc(r);
    if (id == "horace-easy") horace_easy(sc, opt);
    else if (id == "counter") counter(sc, opt);
    else if (id == "segre1") segre1(sc, opt);
    else if (id == "segre2") segre2(sc, opt);
    else if (id == "nn1") nn1(sc, opt);
    else if (id == "diff-horace") diff_horace(sc, opt);
    else throw std::invalid_argument("unknown replay id '" + id + "'");
    return r;
}

}  // namespace secant
