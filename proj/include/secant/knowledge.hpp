#pragma once

#include <functional>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "secant/combinatorics.hpp"

namespace secant {

enum class FactStatus { KnownTrue, KnownDefective, Unknown };

struct Fact {
    FactStatus status = FactStatus::Unknown;
    std::string source;
    std::string detail;
};

const char* to_string(FactStatus s);

struct KnowledgeOptions {
    bool assume_conjecture = false;
    // Sources whose tag starts with any of these prefixes are skipped.
    std::vector<std::string> excluded_prefixes;
};

struct CatalogEntry {
    std::string descriptor;
    std::string source;
    bool conjectural = false;
};

class KnowledgeBase {
public:
    explicit KnowledgeBase(KnowledgeOptions opt = {});

    // First matching rule: s <= 4 classification, then defective families,
    // then true families.
    Fact lookup(const Statement& st) const;
    // Every matching rule, in evaluation order.
    std::vector<Fact> lookup_all(const Statement& st) const;

    const KnowledgeOptions& options() const { return opt_; }

    struct Rule {
        std::string source;
        std::function<std::optional<Fact>(const Statement&)> eval;
    };

private:
    KnowledgeOptions opt_;
    std::vector<Rule> rules_;
    bool excluded(const std::string& source) const;
};

std::vector<CatalogEntry> defective_catalog();

// Decision of the s <= 4 classification theorems for a canonical
// T-statement; nullopt when s is outside {2,3,4}.
std::optional<bool> classification_says_defective(const Statement& st);

}  // namespace secant
