#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "secant/combinatorics.hpp"
#include "secant/hilbert.hpp"
#include "secant/knowledge.hpp"

namespace secant {

enum class RuleKind {
    DiffHorace,
    SegreSplit,
    MonotoneDegree,
    MonotoneDim,
    MonotoneSuper,
    RemarkIV,
    RemarkV,
    RankLeaf,
    KnownLeaf,
    None,
};

enum class ProofStatus { Closed, Open, Failed };

const char* to_string(RuleKind r);
const char* to_string(ProofStatus s);
std::optional<RuleKind> rule_from_string(const std::string& s);

using Params = nlohmann::ordered_json;

struct ProofNode;
using NodePtr = std::shared_ptr<const ProofNode>;

struct ProofNode {
    Statement stmt;
    RuleKind rule = RuleKind::None;
    Params params = Params::object();
    std::vector<NodePtr> children;
    ProofStatus status = ProofStatus::Open;
    std::string reason;  // why an Open or Failed node stopped
};

class ReductionError : public std::runtime_error {
public:
    enum class Kind {
        DegreeTooSmall,
        EpsilonExceedsSPrime,
        SuperabundanceFail,
        NegativeDividend,
        AbundancyMismatch,
        BadPartition,
        NotApplicable,
    };
    ReductionError(Kind k, const std::string& what) : std::runtime_error(what), kind_(k) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

const char* to_string(ReductionError::Kind k);

struct DiffHoraceResult {
    int factor = 0;  // 0-based, in the parent's factor order
    HoraceParams hp;
    BigInt lhs;  // (s - s' - eps)(1 + sum n)
    BigInt rhs;  // N(n; a'')
    // Children with the chosen factor rotated to position 1 (not canonical).
    std::array<Statement, 3> children;
};

DiffHoraceResult apply_diff_horace(const Statement& st, int factor = 0);

struct SplitResult {
    int factor = 0;
    std::array<Statement, 2> children;  // raw, factor 1 is the split factor
    Abundancy first;
    Abundancy second;
};

SplitResult apply_split(const Statement& st, int n1p, std::int64_t sPrime, std::int64_t tPrime, int factor = 0);

struct MonotoneStep {
    Statement child;
    RuleKind rule;
    Params params;
};

std::vector<MonotoneStep> apply_monotone(const Statement& st);

// Rotates factor `factor` into position 1.
Statement rotate_to_front(const Statement& st, int factor);

struct ProveConfig {
    int maxDepth = 8;
    std::uint64_t prime = PrimeField::kMersenne31;
    int trials = 3;
    bool allowRankLeaves = true;
    std::uint64_t seed = 42;
    std::uint64_t rankCap = 3000;
    int splitCap = 64;
};

std::uint64_t statement_hash(const Statement& st);
std::uint64_t leaf_seed(std::uint64_t seed, const Statement& st);

class Prover {
public:
    Prover(ProveConfig cfg, KnowledgeOptions kopt = {});

    NodePtr prove(const Statement& st);

    const ProveConfig& config() const { return cfg_; }
    const KnowledgeBase& knowledge() const { return kb_; }

private:
    struct MemoEntry {
        std::map<int, NodePtr> closed;  // exact depth -> tree
        int open_depth = -1;            // fails at every depth <= open_depth
        NodePtr definitive;             // depth-independent failure
        std::string open_reason;
    };

    ProveConfig cfg_;
    KnowledgeBase kb_;
    mutable std::shared_mutex mu_;
    std::map<std::string, MemoEntry> memo_;

    NodePtr search(const Statement& st, int depth);
    NodePtr search_uncached(const Statement& st, int depth, bool& definitive);
    NodePtr try_children(const Statement& parent, RuleKind rule, Params params,
                         const std::vector<Statement>& raw_children, int depth, bool& any_open);
    NodePtr child_node(const Statement& raw, int depth);
};

NodePtr prove(const Statement& st, const ProveConfig& cfg, const KnowledgeOptions& kopt = {});

// Serialization.
nlohmann::ordered_json to_json(const ProofNode& n);
std::string to_dot(const ProofNode& n);
std::string to_table(const ProofNode& n);

// Sweeps.
struct SweepBounds {
    int kMax = 2;
    int nMax = 3;
    int aMax = 3;
};

struct SweepRow {
    Statement stmt;
    bool defective = false;
    std::string certificate;  // "proof", "rank", "inconclusive"
    std::string source;
    NodePtr tree;             // present when closed by prove
    Verdict verdict;          // present when decided by rank
    std::optional<bool> classification;  // s <= 4 classification, when available
};

std::vector<Format> enumerate_formats(const SweepBounds& b);
std::vector<SweepRow> classify_sweep(std::int64_t s, const SweepBounds& b, const ProveConfig& cfg,
                                     const KnowledgeOptions& kopt = {});

}  // namespace secant
