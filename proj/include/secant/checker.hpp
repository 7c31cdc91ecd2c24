#pragma once

#include <string>

#include "json.hpp"

#include "secant/knowledge.hpp"

namespace secant {

struct CheckOptions {
    bool recompute_rank = false;
    KnowledgeOptions knowledge;
};

struct CheckResult {
    bool ok = true;
    std::string error;
    std::string where;  // statement of the first rejected node
    std::size_t nodes = 0;
};

// Re-verifies a serialized proof tree from scratch: every node must be
// closed, every rule's side conditions must hold for the recorded
// parameters, and every recorded child must be the one the rule produces.
CheckResult check_tree(const nlohmann::ordered_json& tree, const CheckOptions& opt = {});
CheckResult check_tree(const nlohmann::json& tree, const CheckOptions& opt = {});

}  // namespace secant
