// Command-line front end. Exit codes: 0 certified true / pass, 1 usage or
// input error, 2 probably defective / failed / discrepancy, 3 inconclusive.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "secant/checker.hpp"
#include "secant/combinatorics.hpp"
#include "secant/hilbert.hpp"
#include "secant/knowledge.hpp"
#include "secant/reducer.hpp"
#include "secant/replay.hpp"
#include "secant/schemes.hpp"

using namespace secant;
using ojson = nlohmann::ordered_json;

namespace {

enum Exit { kOk = 0, kInput = 1, kDefective = 2, kInconclusive = 3 };

struct RunConfig {
    std::uint64_t prime = PrimeField::kMersenne31;
    std::uint64_t seed = 42;
    int trials = 3;
    int maxDepth = 8;
    std::uint64_t rankCap = 3000;
    std::string format;
    std::string out;
};

class InputError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

void validate(const RunConfig& rc) {
    if (!is_prime(rc.prime) || rc.prime >= (1ull << 32)) throw InputError("--prime must be a prime below 2^32");
    if (rc.trials < 1) throw InputError("--trials must be >= 1");
    if (rc.maxDepth < 1) throw InputError("--max-depth must be >= 1");
}

Statement read_statement(const std::string& text) {
    Statement raw;
    try {
        raw = parse_statement(text);
    } catch (const ParseError& e) {
        throw InputError(std::string("parse error: ") + e.what());
    }
    for (int a : raw.fmt.a)
        if (a < 1) throw InputError("invalid statement: every a_i must be >= 1");
    Statement st;
    try {
        st = canonicalize(raw);
    } catch (const std::exception& e) {
        throw InputError(std::string("invalid statement: ") + e.what());
    }
    if (st.fmt.k() == 0) throw InputError("invalid statement: some n_i must be >= 1");
    return st;
}

ProveConfig prove_config(const RunConfig& rc) {
    ProveConfig c;
    c.prime = rc.prime;
    c.seed = rc.seed;
    c.trials = rc.trials;
    c.maxDepth = rc.maxDepth;
    c.rankCap = rc.rankCap;
    return c;
}

ojson big_json(const BigInt& v) {
    if (v <= BigInt(INT64_MAX)) return ojson(v.convert_to<std::int64_t>());
    return ojson(v.str());
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InputError("cannot open " + path + " for writing");
        }
    }
    std::ostream& os() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path);
    if (!in) throw InputError("cannot read " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int cmd_expected(const std::string& text, const RunConfig& rc) {
    Statement st = read_statement(text);
    BigInt N = ambient_dim(st.fmt), d = scheme_degree(st), e = expected_value(st);
    Output out(rc.out);
    if (rc.format == "json") {
        ojson j;
        j["statement"] = to_string(st);
        j["N"] = big_json(N);
        j["degree"] = big_json(d);
        j["expected"] = big_json(e);
        if (st.is_t()) j["secant_dim"] = big_json(e - 1);
        j["abundancy"] = to_string(abundancy(st));
        out.os() << j.dump() << '\n';
    } else {
        out.os() << "statement  " << to_string(st) << '\n'
                 << "N          " << N << '\n'
                 << "deg Z      " << d << '\n'
                 << "expected   " << e << '\n';
        if (st.is_t()) out.os() << "secant dim " << e - 1 << '\n';
        out.os() << "abundancy  " << to_string(abundancy(st)) << '\n';
    }
    return kOk;
}

int exit_for(VerdictKind k) {
    switch (k) {
        case VerdictKind::CertifiedTrue: return kOk;
        case VerdictKind::ProbablyDefective: return kDefective;
        case VerdictKind::Inconclusive: return kInconclusive;
    }
    return kInconclusive;
}

int cmd_verify(const std::string& text, const std::string& method, const RunConfig& rc) {
    Statement st = read_statement(text);
    VerifyOptions vo;
    vo.prime = rc.prime;
    vo.seed = rc.seed;
    vo.trials = rc.trials;

    ojson j;
    j["statement"] = to_string(st);
    j["expected"] = big_json(expected_value(st));
    NodePtr tree;
    VerdictKind kind = VerdictKind::Inconclusive;
    std::optional<Verdict> rank;

    if (method == "rank") {
        rank = verify(st, vo);
        kind = rank->kind;
    } else {
        ProveConfig pc = prove_config(rc);
        pc.allowRankLeaves = method == "auto";
        tree = prove(st, pc);
        if (tree->status == ProofStatus::Closed) {
            kind = VerdictKind::CertifiedTrue;
        } else if (method == "auto") {
            rank = verify(st, vo);
            kind = rank->kind;
        } else {
            kind = tree->status == ProofStatus::Failed ? VerdictKind::ProbablyDefective : VerdictKind::Inconclusive;
        }
    }

    if (rank) j["observed"] = rank->observed;
    else if (kind == VerdictKind::CertifiedTrue) j["observed"] = j["expected"];
    else j["observed"] = nullptr;
    j["verdict"] = to_string(kind);
    j["prime"] = rc.prime;
    j["seed"] = rank ? rank->seed : rc.seed;
    j["method"] = method;
    if (rank && rank->kind == VerdictKind::ProbablyDefective) j["deficit"] = rank->deficit;
    if (rank && !rank->note.empty()) j["note"] = rank->note;
    if (tree) {
        j["proof_status"] = to_string(tree->status);
        if (!tree->reason.empty()) j["reason"] = tree->reason;
    }

    Output out(rc.out);
    if (rc.format == "dot") {
        if (!tree) throw InputError("--format dot needs --method reduce or auto");
        out.os() << to_dot(*tree);
    } else if (rc.format == "table") {
        out.os() << to_string(st) << ": " << to_string(kind) << '\n';
        if (tree) out.os() << to_table(*tree);
    } else {
        if (tree) j["proof"] = to_json(*tree);
        out.os() << j.dump() << '\n';
    }
    return exit_for(kind);
}

struct SweepArgs {
    std::int64_t s = 2;
    SweepBounds b;
    bool diff = false;
    bool conjecture = false;
};

int cmd_sweep(const SweepArgs& a, const RunConfig& rc) {
    if (a.s < 1) throw InputError("--s must be >= 1");
    if (a.b.kMax < 1 || a.b.nMax < 1 || a.b.aMax < 1) throw InputError("sweep bounds must be >= 1");
    KnowledgeOptions ko;
    ko.assume_conjecture = a.conjecture;
    auto rows = classify_sweep(a.s, a.b, prove_config(rc), ko);

    std::size_t discrepancies = 0, compared = 0, inconclusive = 0;
    Output out(rc.out);
    ojson arr = ojson::array();
    for (const auto& r : rows) {
        bool mismatch = false;
        if (a.diff && r.classification) {
            ++compared;
            mismatch = r.certificate != "inconclusive" && *r.classification != r.defective;
            if (mismatch) ++discrepancies;
        }
        if (r.certificate == "inconclusive") ++inconclusive;
        if (rc.format == "json") {
            ojson j;
            j["statement"] = to_string(r.stmt);
            j["defective"] = r.defective;
            j["certificate"] = r.certificate;
            j["source"] = r.source;
            if (r.certificate == "rank") {
                j["expected"] = big_json(r.verdict.expected);
                j["observed"] = r.verdict.observed;
            }
            if (a.diff) j["classification"] = r.classification ? ojson(*r.classification) : ojson(nullptr);
            if (mismatch) j["discrepancy"] = true;
            arr.push_back(j);
        } else {
            out.os() << to_string(r.stmt) << '\t' << (r.certificate == "inconclusive" ? "?" : r.defective ? "defective" : "true")
                     << '\t' << r.certificate << '\t' << r.source;
            if (mismatch) out.os() << "\tDISCREPANCY";
            out.os() << '\n';
        }
    }
    std::size_t defective = 0;
    for (const auto& r : rows) defective += r.defective;
    if (rc.format == "json") {
        ojson j;
        j["s"] = a.s;
        j["bounds"] = {{"kMax", a.b.kMax}, {"nMax", a.b.nMax}, {"aMax", a.b.aMax}};
        j["rows"] = arr;
        j["defective"] = defective;
        j["inconclusive"] = inconclusive;
        if (a.diff) {
            j["compared"] = compared;
            j["discrepancies"] = discrepancies;
        }
        out.os() << j.dump() << '\n';
    }
    std::cerr << rows.size() << " statements, " << defective << " defective, " << inconclusive << " inconclusive\n";
    if (a.diff) {
        if (compared == 0) std::cerr << "no classification available for s = " << a.s << "; nothing compared\n";
        else std::cerr << compared << " compared, " << discrepancies << " discrepancies\n";
        if (discrepancies > 0) return kDefective;
    }
    return inconclusive > 0 ? kInconclusive : kOk;
}

int cmd_replay(const std::string& id, int n, const RunConfig& rc) {
    ReplayOptions ro;
    ro.n = n;
    ro.prime = rc.prime;
    ro.seed = rc.seed;
    std::vector<std::string> ids;
    if (id == "all") ids = replay_ids();
    else ids = {id};
    Output out(rc.out);
    bool ok = true;
    for (const auto& one : ids) {
        ReplayResult r;
        try {
            r = replay(one, ro);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
        out.os() << "replay " << one << '\n';
        for (const auto& line : r.transcript) out.os() << "  " << line << '\n';
        out.os() << (r.ok ? "PASS " : "FAIL ") << one << '\n';
        if (!r.ok) {
            std::cerr << one << ": first mismatch: " << r.failure << '\n';
            ok = false;
        }
    }
    return ok ? kOk : kDefective;
}

int cmd_catalog(const RunConfig& rc) {
    Output out(rc.out);
    auto entries = defective_catalog();
    if (rc.format == "json") {
        ojson arr = ojson::array();
        for (const auto& e : entries)
            arr.push_back({{"family", e.descriptor}, {"source", e.source}, {"conjectural", e.conjectural}});
        out.os() << arr.dump(2) << '\n';
    } else {
        for (const auto& e : entries)
            out.os() << e.descriptor << '\t' << e.source << (e.conjectural ? "\t(conjectural)" : "") << '\n';
    }
    return kOk;
}

int cmd_hilbert(const std::string& path, const RunConfig& rc) {
    Scheme z;
    try {
        z = scheme_from_json(nlohmann::json::parse(read_input(path)));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad scheme JSON: ") + e.what());
    } catch (const InvalidStatement& e) {
        throw InputError(e.what());
    }
    PrimeField F(rc.prime);
    Scheme sampled = z.sampled() ? z : sample(z, F, rc.seed);
    std::size_t h = hilbert_value(sampled, F);
    Output out(rc.out);
    if (rc.format == "json") {
        ojson j;
        j["h"] = h;
        j["degree"] = degree(z);
        j["prime"] = rc.prime;
        j["seed"] = rc.seed;
        j["digest"] = points_digest(sampled);
        out.os() << j.dump() << '\n';
    } else {
        out.os() << h << '\n';
    }
    return kOk;
}

int cmd_check(const std::string& path, bool recompute, bool conjecture, const RunConfig& rc) {
    ojson tree;
    try {
        tree = ojson::parse(read_input(path));
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("bad proof JSON: ") + e.what());
    }
    if (tree.contains("proof")) tree = tree["proof"];
    CheckOptions co;
    co.recompute_rank = recompute;
    co.knowledge.assume_conjecture = conjecture;
    CheckResult r = check_tree(tree, co);
    Output out(rc.out);
    if (r.ok) out.os() << "accepted (" << r.nodes << " nodes)\n";
    else out.os() << "rejected at " << r.where << ": " << r.error << '\n';
    return r.ok ? kOk : kDefective;
}

void add_common(CLI::App* app, RunConfig& rc, bool with_search) {
    app->add_option("--prime", rc.prime, "Prime modulus");
    app->add_option("--seed", rc.seed, "Random seed");
    app->add_option("--format", rc.format, "Output format")->check(CLI::IsMember({"json", "table", "dot"}));
    app->add_option("--out", rc.out, "Write output to this file");
    if (with_search) {
        app->add_option("--trials", rc.trials, "Rank trials per statement");
        app->add_option("--max-depth", rc.maxDepth, "Proof search depth");
        app->add_option("--rank-cap", rc.rankCap, "Largest N for rank leaves");
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Secant varieties of Segre-Veronese varieties: expected dimensions, rank certificates, proofs"};
    app.require_subcommand(1);
    RunConfig rc;

    std::string stmt, method = "auto", replay_id, path;
    int family_n = 2;
    bool recompute = false, check_conjecture = false;
    SweepArgs sw;

    auto* expected = app.add_subcommand("expected", "Print N, deg Z, expected value and abundancy");
    expected->add_option("statement", stmt)->required();
    add_common(expected, rc, false);

    auto* ver = app.add_subcommand("verify", "Decide a statement by rank, by proof search, or both");
    ver->add_option("statement", stmt)->required();
    ver->add_option("--method", method)->check(CLI::IsMember({"rank", "reduce", "auto"}));
    add_common(ver, rc, true);

    auto* sweep = app.add_subcommand("sweep", "Classify every statement in a window");
    sweep->add_option("--s", sw.s)->required();
    sweep->add_option("--k-max", sw.b.kMax);
    sweep->add_option("--n-max", sw.b.nMax);
    sweep->add_option("--a-max", sw.b.aMax);
    sweep->add_flag("--diff-paper", sw.diff, "Compare against the s <= 4 classification");
    sweep->add_flag("--assume-conjecture", sw.conjecture, "Treat the k = 2 conjecture as known");
    add_common(sweep, rc, true);

    auto* rep = app.add_subcommand("replay", "Rerun a scripted worked example");
    rep->add_option("id", replay_id)->required();
    rep->add_option("--n", family_n, "Parameter of the nn1 family");
    add_common(rep, rc, false);

    auto* cat = app.add_subcommand("catalog", "Dump the defective catalog");
    add_common(cat, rc, false);

    auto* hil = app.add_subcommand("hilbert", "Hilbert function of a scheme given as JSON (- for stdin)");
    hil->add_option("scheme", path)->required();
    add_common(hil, rc, false);

    auto* chk = app.add_subcommand("check", "Re-verify a serialized proof tree (- for stdin)");
    chk->add_option("proof", path)->required();
    chk->add_flag("--recompute-rank", recompute, "Recompute ranks at rank leaves");
    chk->add_flag("--assume-conjecture", check_conjecture);
    add_common(chk, rc, false);

    CLI11_PARSE(app, argc, argv);

    try {
        validate(rc);
        if (*expected) return cmd_expected(stmt, rc);
        if (*ver) return cmd_verify(stmt, method, rc);
        if (*sweep) return cmd_sweep(sw, rc);
        if (*rep) return cmd_replay(replay_id, family_n, rc);
        if (*cat) return cmd_catalog(rc);
        if (*hil) return cmd_hilbert(path, rc);
        if (*chk) return cmd_check(path, recompute, check_conjecture, rc);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    }
    return kInput;
}
