#include <algorithm>
#include <utility>

#include "secant/reducer.hpp"

namespace secant {

std::vector<Format> enumerate_formats(const SweepBounds& b) {
    std::vector<std::pair<int, int>> kinds;
    for (int n = 1; n <= b.nMax; ++n)
        for (int a = 1; a <= b.aMax; ++a) kinds.emplace_back(n, a);

    std::vector<Format> out;
    std::vector<int> pick;
    // Non-decreasing index sequences enumerate the multisets of factors.
    auto rec = [&](auto&& self, int from) -> void {
        if (!pick.empty()) {
            Format f;
            for (int i : pick) {
                f.n.push_back(kinds[i].first);
                f.a.push_back(kinds[i].second);
            }
            out.push_back(std::move(f));
        }
        if (static_cast<int>(pick.size()) == b.kMax) return;
        for (int i = from; i < static_cast<int>(kinds.size()); ++i) {
            pick.push_back(i);
            self(self, i);
            pick.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const Format& x, const Format& y) {
        if (x.k() != y.k()) return x.k() < y.k();
        return std::tie(x.n, x.a) < std::tie(y.n, y.a);
    });
    return out;
}

std::vector<SweepRow> classify_sweep(std::int64_t s, const SweepBounds& b, const ProveConfig& cfg,
                                     const KnowledgeOptions& kopt) {
    std::vector<Format> formats = enumerate_formats(b);
    std::vector<SweepRow> rows(formats.size());

    // The classification being compared against must not be used to decide.
    KnowledgeOptions search_kopt = kopt;
    search_kopt.excluded_prefixes.push_back("class-s");
    Prover prover(cfg, search_kopt);

    const auto count = static_cast<std::int64_t>(formats.size());
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) {
        SweepRow& row = rows[i];
        Statement st;
        st.fmt = formats[i];
        st.s = s;
        row.stmt = canonicalize(st);
        row.classification = classification_says_defective(row.stmt);

        NodePtr tree = prover.prove(row.stmt);
        if (tree->status == ProofStatus::Closed) {
            row.defective = false;
            row.certificate = "proof";
            row.source = tree->rule == RuleKind::KnownLeaf ? tree->params["source"].get<std::string>()
                                                           : std::string(to_string(tree->rule));
            row.tree = tree;
            continue;
        }
        if (tree->rule == RuleKind::KnownLeaf && tree->params.contains("source"))
            row.source = tree->params["source"].get<std::string>();

        VerifyOptions vo;
        vo.prime = cfg.prime;
        vo.trials = cfg.trials;
        vo.seed = leaf_seed(cfg.seed, row.stmt);
        vo.max_columns = UINT64_MAX;
        row.verdict = verify(row.stmt, vo);
        switch (row.verdict.kind) {
            case VerdictKind::CertifiedTrue:
                row.certificate = "rank";
                break;
            case VerdictKind::ProbablyDefective:
                row.certificate = "rank";
                row.defective = true;
                break;
            case VerdictKind::Inconclusive:
                row.certificate = "inconclusive";
                break;
        }
        if (row.source.empty()) row.source = "rank";
    }
    return rows;
}

}  // namespace secant
