#include <functional>

#include "doctest.h"

#include "secant/reducer.hpp"

using namespace secant;

namespace {

Statement st(const char* s) { return parse_statement(s); }
Statement canon(const char* s) { return canonicalize(parse_statement(s)); }

template <class Fn>
void for_statements(int kMax, int nMax, int aMax, Fn&& fn) {
    std::vector<std::pair<int, int>> kinds;
    for (int n = 1; n <= nMax; ++n)
        for (int a = 1; a <= aMax; ++a) kinds.emplace_back(n, a);
    std::vector<std::size_t> pick;
    auto rec = [&](auto&& self, std::size_t from) -> void {
        if (!pick.empty()) {
            Format f;
            for (auto i : pick) {
                f.n.push_back(kinds[i].first);
                f.a.push_back(kinds[i].second);
            }
            std::int64_t sMax = to_int64(s_bounds(f).second);
            for (std::int64_t s = 1; s <= sMax; ++s) {
                Statement x;
                x.fmt = f;
                x.s = s;
                fn(x);
            }
        }
        if (static_cast<int>(pick.size()) == kMax) return;
        for (std::size_t i = from; i < kinds.size(); ++i) {
            pick.push_back(i);
            self(self, i);
            pick.pop_back();
        }
    };
    rec(rec, 0);
}

bool any_node(const ProofNode& n, const std::function<bool(const ProofNode&)>& pred) {
    if (pred(n)) return true;
    for (const auto& c : n.children)
        if (any_node(*c, pred)) return true;
    return false;
}

KnowledgeOptions without(std::vector<std::string> prefixes) {
    KnowledgeOptions o;
    o.excluded_prefixes = std::move(prefixes);
    return o;
}

}  // namespace

TEST_CASE("differential Horace") {
    DiffHoraceResult r = apply_diff_horace(st("T(2,2;4,4;45)"));
    CHECK(r.children[0] == st("T(1,2;4,4;18)"));
    CHECK(r.children[1] == st("T(2,2;3,4;27)"));
    CHECK(r.children[2] == st("T(2,2;2,4;24)"));
    CHECK(r.lhs == 120);
    CHECK(r.rhs == 90);

    Statement segre1 = st("T(2,2;1,4;9)");
    try {
        apply_diff_horace(segre1, 0);
        FAIL("accepted a_1 = 1");
    } catch (const ReductionError& e) {
        CHECK(e.kind() == ReductionError::Kind::DegreeTooSmall);
    }
    try {
        apply_diff_horace(segre1, 1);
        FAIL("accepted a failing superabundance check");
    } catch (const ReductionError& e) {
        CHECK(e.kind() == ReductionError::Kind::SuperabundanceFail);
        CHECK(std::string(e.what()).find("15") != std::string::npos);
        CHECK(std::string(e.what()).find("18") != std::string::npos);
    }
}

TEST_CASE("differential Horace child structure") {
    std::size_t applied = 0;
    for_statements(2, 3, 5, [&](const Statement& x) {
        for (int l = 0; l < x.fmt.k(); ++l) {
            DiffHoraceResult r;
            try {
                r = apply_diff_horace(x, l);
            } catch (const ReductionError& e) {
                CHECK(e.kind() != ReductionError::Kind::BadPartition);
                continue;
            }
            ++applied;
            Statement front = rotate_to_front(x, l);
            CHECK(r.children[0].fmt.n[0] == front.fmt.n[0] - 1);
            CHECK(r.children[1].fmt.a[0] == front.fmt.a[0] - 1);
            CHECK(r.children[2].fmt.a[0] == front.fmt.a[0] - 2);
            CHECK(r.children[0].fmt.a == front.fmt.a);
            CHECK(r.children[1].fmt.n == front.fmt.n);
            CHECK(r.children[2].fmt.n == front.fmt.n);
            CHECK(r.hp.sPrime >= r.hp.epsilon);
            CHECK(r.lhs >= r.rhs);
            CHECK(r.children[0].s + r.children[1].s == x.s);
        }
    });
    CHECK(applied > 50);
}

TEST_CASE("rotate") {
    Statement r = rotate_to_front(st("T(1,2,3;4,5,6;7)"), 2);
    CHECK(r.fmt.n == std::vector<int>{3, 1, 2});
    CHECK(r.fmt.a == std::vector<int>{6, 4, 5});
}

TEST_CASE("Segre split") {
    SplitResult a = apply_split(st("T(2,2;1,4;9)"), 1, 6, 0);
    CHECK(a.children[0] == st("S(1,2;1,4;6;0;3)"));
    CHECK(a.children[1] == st("S(0,2;1,4;3;0;6)"));
    SplitResult b = apply_split(st("S(1,2;1,4;6;0;3)"), 0, 3, 0);
    CHECK(b.children[0] == st("S(0,2;1,4;3;0;6)"));
    CHECK(b.children[1] == st("S(0,2;1,4;3;0;6)"));
    try {
        apply_split(st("T(2,2;1,4;9)"), 1, 9, 0);
        FAIL("mismatched abundancy accepted");
    } catch (const ReductionError& e) {
        CHECK(e.kind() == ReductionError::Kind::AbundancyMismatch);
    }
    try {
        apply_split(st("T(2,2;1,4;9)"), 2, 1, 0);
        FAIL("bad partition accepted");
    } catch (const ReductionError& e) {
        CHECK(e.kind() == ReductionError::Kind::BadPartition);
    }
}

TEST_CASE("monotone steps") {
    auto steps = apply_monotone(canon("S(2;4;3;6;0)"));
    bool remark_v = false;
    for (const auto& s : steps)
        if (s.rule == RuleKind::RemarkV && s.child == st("T(2;4;3)")) remark_v = true;
    CHECK(remark_v);

    for (int m = 2; m <= 5; ++m) {
        Statement x;
        x.fmt = {{1, m}, {2, 1}};
        x.s = 2;
        bool dim = false;
        for (const auto& s : apply_monotone(canonicalize(x)))
            if (s.rule == RuleKind::MonotoneDim && s.child == canon("T(1,1;1,2;2)")) dim = true;
        CHECK(dim);
    }
    for (const auto& s : apply_monotone(canon("T(2,2;4,4;45)"))) {
        if (s.rule == RuleKind::MonotoneDegree) CHECK(is_sub(abundancy(s.child)));
        if (s.rule == RuleKind::MonotoneSuper) CHECK(is_super(abundancy(s.child)));
    }
}

TEST_CASE("prove: worked examples") {
    ProveConfig cfg;
    NodePtr t = prove(canon("T(2,2;4,4;45)"), cfg);
    REQUIRE(t->status == ProofStatus::Closed);
    CHECK(t->rule == RuleKind::DiffHorace);
    REQUIRE(t->children.size() == 3);
    CHECK(t->children[0]->stmt == canon("T(1,2;4,4;18)"));
    CHECK(t->children[1]->stmt == canon("T(2,2;3,4;27)"));
    CHECK(t->children[2]->stmt == canon("T(2,2;2,4;24)"));

    // Without the table and classification shortcuts the split chain appears.
    ProveConfig no_rank = cfg;
    no_rank.allowRankLeaves = false;
    NodePtr s = prove(canon("T(2,2;1,4;9)"), no_rank, without({"class-s", "Table2"}));
    REQUIRE(s->status == ProofStatus::Closed);
    CHECK(s->rule == RuleKind::SegreSplit);
    CHECK(any_node(*s, [](const ProofNode& n) { return n.rule == RuleKind::RemarkIV; }));
    CHECK(any_node(*s, [](const ProofNode& n) { return n.rule == RuleKind::RemarkV; }));
    CHECK(any_node(*s, [](const ProofNode& n) {
        return n.rule == RuleKind::KnownLeaf && n.stmt == canon("T(2;4;3)") && n.params["source"] == "AH";
    }));

    NodePtr d = prove(canon("T(1,1;2,2;3)"), cfg);
    CHECK(d->status == ProofStatus::Failed);
}

TEST_CASE("depth limit leaves statements open") {
    ProveConfig cfg;
    cfg.maxDepth = 1;
    cfg.allowRankLeaves = false;
    NodePtr t = prove(canon("T(2,2;4,4;45)"), cfg, without({"class-s", "Table2", "literature"}));
    CHECK(t->status != ProofStatus::Closed);
    CHECK_THROWS(Prover(ProveConfig{0}));
}

TEST_CASE("prove is deterministic") {
    ProveConfig cfg;
    for (const char* s : {"T(2,2;4,4;45)", "T(2,2;1,4;9)", "T(3,3;2,2;7)", "T(1,2,2;1,1,2;5)"}) {
        Prover p(cfg);
        auto a = to_json(*p.prove(canon(s))).dump();
        auto b = to_json(*p.prove(canon(s))).dump();
        auto c = to_json(*prove(canon(s), cfg)).dump();
        CHECK(a == b);
        CHECK(a == c);
    }
}

TEST_CASE("soundness: closed implies rank-certified, defective never closes") {
    ProveConfig cfg;
    cfg.allowRankLeaves = false;
    KnowledgeBase kb;
    Prover prover(cfg, without({"class-s"}));
    Prover with_rank(ProveConfig{}, {});
    std::size_t closed = 0, unsound = 0;
    for_statements(3, 3, 4, [&](const Statement& x) {
        if (ambient_dim(x.fmt) > 400) return;
        NodePtr t = prover.prove(x);
        Fact f = kb.lookup(x);
        if (f.status == FactStatus::KnownDefective) {
            CHECK(t->status != ProofStatus::Closed);
            CHECK(with_rank.prove(x)->status != ProofStatus::Closed);
        }
        if (t->status != ProofStatus::Closed) return;
        ++closed;
        if (verify(x).kind != VerdictKind::CertifiedTrue) {
            ++unsound;
            MESSAGE("closed but not rank-certified: " << to_string(x));
        }
    });
    CHECK(unsound == 0);
    CHECK(closed > 200);
}

TEST_CASE("serialization") {
    NodePtr t = prove(canon("T(2,2;1,4;9)"), ProveConfig{}, without({"class-s", "Table2"}));
    auto j = to_json(*t);
    CHECK(j["stmt"] == "T(2,2;1,4;9)");
    CHECK(j["status"] == "closed");
    CHECK(j["children"].is_array());
    std::string dot = to_dot(*t);
    CHECK(dot.find("digraph") == 0);
    CHECK(dot.find("->") != std::string::npos);
    CHECK(to_table(*t).find("T(2,2;1,4;9)") == 0);
    for (RuleKind r : {RuleKind::DiffHorace, RuleKind::SegreSplit, RuleKind::RemarkIV, RuleKind::KnownLeaf})
        CHECK(rule_from_string(to_string(r)) == r);
}
