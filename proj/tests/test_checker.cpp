#include "doctest.h"
#include "mutations.hpp"

#include "secant/checker.hpp"
#include "secant/reducer.hpp"

using namespace secant;
using ojson = nlohmann::ordered_json;
using mutate::mutations;
using mutate::node_pointers;

namespace {

Statement canon(const char* s) { return canonicalize(parse_statement(s)); }

KnowledgeOptions without(std::vector<std::string> prefixes) {
    KnowledgeOptions o;
    o.excluded_prefixes = std::move(prefixes);
    return o;
}

void expect_sound(const NodePtr& t, const KnowledgeOptions& k = {}) {
    REQUIRE(t->status == ProofStatus::Closed);
    ojson j = to_json(*t);
    CheckOptions opt;
    opt.knowledge = k;
    CheckResult ok = check_tree(j, opt);
    INFO(j.dump());
    CHECK_MESSAGE(ok.ok, ok.error << " at " << ok.where);
    for (const auto& m : mutations(j)) {
        CheckResult r = check_tree(m.tree, opt);
        CHECK_MESSAGE(!r.ok, "accepted mutation: " << m.label);
    }
}

}  // namespace

TEST_CASE("emitted trees are accepted and every mutation is rejected") {
    ProveConfig cfg;
    expect_sound(prove(canon("T(2,2;4,4;45)"), cfg));
    expect_sound(prove(canon("T(3,3;2,2;7)"), cfg));
    expect_sound(prove(canon("T(1,2,2;1,1,2;5)"), cfg));
    auto k = without({"class-s", "Table2"});
    expect_sound(prove(canon("T(2,2;1,4;9)"), cfg, k), k);
    ProveConfig no_rank = cfg;
    no_rank.allowRankLeaves = false;
    expect_sound(prove(canon("T(2,2;1,4;9)"), no_rank, k), k);
}

TEST_CASE("rank leaves can be recomputed") {
    ProveConfig cfg;
    NodePtr t = prove(canon("T(2,2;4,4;45)"), cfg, without({"class-s", "Table2", "literature"}));
    REQUIRE(t->status == ProofStatus::Closed);
    CheckOptions opt;
    opt.recompute_rank = true;
    opt.knowledge = without({"class-s", "Table2", "literature"});
    CHECK(check_tree(to_json(*t), opt).ok);
}

TEST_CASE("structural rejections") {
    ojson leaf = {{"stmt", "T(2,2;4,4;45)"}, {"rule", "none"}, {"params", ojson::object()},
                  {"children", ojson::array()}, {"status", "open"}};
    CHECK(!check_tree(leaf).ok);
    leaf["status"] = "closed";
    CHECK(!check_tree(leaf).ok);
    leaf["rule"] = "teleport";
    CHECK(!check_tree(leaf).ok);
    CHECK(!check_tree(ojson::parse("[]")).ok);
    CHECK(!check_tree(ojson{{"stmt", "T(1;1;"}}).ok);

    // a known-defective statement cannot be closed by citing a leaf
    ojson cgg = {{"stmt", "T(1,1;2,2;3)"}, {"rule", "known_leaf"},
                 {"params", {{"source", "trivial"}, {"detail", ""}}},
                 {"children", ojson::array()}, {"status", "closed"}};
    CHECK(!check_tree(cgg).ok);
}

TEST_CASE("node counts") {
    NodePtr t = prove(canon("T(2,2;4,4;45)"), ProveConfig{});
    CheckResult r = check_tree(to_json(*t));
    std::vector<std::string> ptrs;
    node_pointers(to_json(*t), "", ptrs);
    CHECK(r.nodes == ptrs.size());
}
