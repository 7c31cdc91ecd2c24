#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "secant/combinatorics.hpp"

namespace mutate {

using ojson = nlohmann::ordered_json;

inline void node_pointers(const ojson& n, const std::string& at, std::vector<std::string>& out) {
    out.push_back(at);
    for (std::size_t i = 0; i < n["children"].size(); ++i)
        node_pointers(n["children"][i], at + "/children/" + std::to_string(i), out);
}

struct Mutation {
    std::string label;
    ojson tree;
};

// Every single-field perturbation of every node: integer parameters
// shifted by one, string parameters replaced, child statements bumped.
inline std::vector<Mutation> mutations(const ojson& tree) {
    std::vector<std::string> ptrs;
    node_pointers(tree, "", ptrs);
    std::vector<Mutation> out;
    for (const auto& p : ptrs) {
        ojson::json_pointer jp(p);
        const ojson& node = tree[jp];
        for (auto it = node["params"].begin(); it != node["params"].end(); ++it) {
            ojson m = tree;
            ojson& v = m[jp]["params"][it.key()];
            if (v.is_number_unsigned()) v = v.get<std::uint64_t>() + 1;
            else if (v.is_number_integer()) v = v.get<std::int64_t>() + 1;
            else if (v.is_string()) v = v.get<std::string>() + "x";
            else continue;
            out.push_back({node["stmt"].get<std::string>() + " param " + it.key(), std::move(m)});
        }
        for (std::size_t i = 0; i < node["children"].size(); ++i) {
            ojson m = tree;
            ojson& c = m[jp]["children"][i];
            secant::Statement s = secant::parse_statement(c["stmt"].get<std::string>());
            s.s += 1;
            c["stmt"] = secant::to_string(s);
            out.push_back({node["stmt"].get<std::string>() + " child " + std::to_string(i), std::move(m)});
        }
        if (!node["children"].empty()) {
            ojson m = tree;
            m[jp]["children"].erase(m[jp]["children"].size() - 1);
            out.push_back({node["stmt"].get<std::string>() + " dropped child", std::move(m)});
        }
    }
    return out;
}

}  // namespace mutate
