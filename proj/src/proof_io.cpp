#include <map>
#include <sstream>

#include "secant/reducer.hpp"

namespace secant {

nlohmann::ordered_json to_json(const ProofNode& n) {
    nlohmann::ordered_json j;
    j["stmt"] = to_string(n.stmt);
    j["rule"] = to_string(n.rule);
    j["params"] = n.params;
    j["children"] = nlohmann::ordered_json::array();
    for (const auto& c : n.children) j["children"].push_back(to_json(*c));
    j["status"] = to_string(n.status);
    if (!n.reason.empty()) j["reason"] = n.reason;
    return j;
}

namespace {

std::string edge_label(const ProofNode& n) {
    std::ostringstream os;
    os << to_string(n.rule);
    if (n.rule == RuleKind::DiffHorace)
        os << " s'=" << n.params.value("sPrime", 0) << " eps=" << n.params.value("eps", 0);
    if (n.rule == RuleKind::SegreSplit)
        os << " n1'=" << n.params.value("n1p", 0) << " s'=" << n.params.value("sPrime", 0)
           << " t'=" << n.params.value("tPrime", 0);
    return os.str();
}

std::string leaf_label(const ProofNode& n) {
    if (n.rule == RuleKind::KnownLeaf) return n.params.value("source", std::string("known"));
    if (n.rule == RuleKind::RankLeaf) return "rank " + n.params["observed"].dump();
    return n.reason;
}

void dot_rec(const ProofNode& n, std::ostringstream& os, std::map<const ProofNode*, int>& ids, int& next) {
    if (ids.count(&n)) return;
    int id = ids[&n] = next++;
    std::string label = to_string(n.stmt);
    if (n.children.empty()) label += "\\n" + leaf_label(n);
    os << "  n" << id << " [shape=box, label=\"" << label << "\"";
    if (n.status == ProofStatus::Failed) os << ", color=red";
    if (n.status == ProofStatus::Open) os << ", style=dashed";
    os << "];\n";
    for (const auto& c : n.children) {
        dot_rec(*c, os, ids, next);
        os << "  n" << id << " -> n" << ids[c.get()] << " [label=\"" << edge_label(n) << "\"];\n";
    }
}

void table_rec(const ProofNode& n, std::ostringstream& os, int indent) {
    os << std::string(indent * 2, ' ') << to_string(n.stmt) << "  [" << to_string(n.rule) << ", "
       << to_string(n.status) << "]";
    if (!n.params.empty()) os << "  " << n.params.dump();
    if (!n.reason.empty()) os << "  (" << n.reason << ")";
    os << '\n';
    for (const auto& c : n.children) table_rec(*c, os, indent + 1);
}

}  // namespace

std::string to_dot(const ProofNode& n) {
    std::ostringstream os;
    os << "digraph proof {\n  node [fontname=\"monospace\"];\n";
    std::map<const ProofNode*, int> ids;
    int next = 0;
    dot_rec(n, os, ids, next);
    os << "}\n";
    return os.str();
}

std::string to_table(const ProofNode& n) {
    std::ostringstream os;
    table_rec(n, os, 0);
    return os.str();
}

}  // namespace secant
