#include "secant/knowledge.hpp"

#include <algorithm>
#include <array>
#include <sstream>

namespace secant {

namespace {

using Pair = std::pair<int, int>;  // (n_i, a_i)
using Pairs = std::vector<Pair>;
using Pred = std::function<std::optional<Fact>(const Statement&)>;

Pairs pairs_of(const Format& f) {
    Pairs p;
    for (int i = 0; i < f.k(); ++i) p.emplace_back(f.n[i], f.a[i]);
    std::sort(p.begin(), p.end());
    return p;
}

bool same(Pairs p, Pairs q) {
    std::sort(p.begin(), p.end());
    std::sort(q.begin(), q.end());
    return p == q;
}

bool all_ones_a(const Pairs& p) {
    return std::all_of(p.begin(), p.end(), [](const Pair& x) { return x.second == 1; });
}

// Tries both assignments of a two-factor format to (x, y).
template <class F>
bool either(const Pairs& p, F f) {
    return p.size() == 2 && (f(p[0], p[1]) || f(p[1], p[0]));
}

std::string range_detail(std::int64_t lo, std::int64_t hi) {
    std::ostringstream os;
    os << "defective for " << lo << " <= s <= " << hi;
    return os.str();
}

Fact defective(std::string src, std::string detail = {}) {
    return {FactStatus::KnownDefective, std::move(src), std::move(detail)};
}
Fact known_true(std::string src, std::string detail = {}) {
    return {FactStatus::KnownTrue, std::move(src), std::move(detail)};
}

// ---- s <= 4 classification -------------------------------------------------

bool class_defective(const Pairs& p, std::int64_t s) {
    int k = static_cast<int>(p.size());
    bool ones = all_ones_a(p);
    auto is = [&](Pairs q) { return same(p, std::move(q)); };
    switch (s) {
        case 2:
            if (k == 1) return p[0].first >= 2 && p[0].second == 2;
            if (k == 2) return ones && p[0].first >= 2;
            return false;
        case 3:
            if (k == 1) return p[0].first >= 3 && p[0].second == 2;
            if (k == 2) return (ones && p[0].first >= 3) || is({{1, 2}, {1, 2}});
            if (k == 3)
                return (ones && p[0].first == 1 && p[1].first == 1 && p[2].first >= 3) ||
                       is({{1, 1}, {1, 1}, {1, 2}});
            if (k == 4) return is({{1, 1}, {1, 1}, {1, 1}, {1, 1}});
            return false;
        case 4:
            if (k == 1) return p[0].first >= 4 && p[0].second == 2;
            if (k == 2) return (ones && p[0].first >= 4) || is({{1, 2}, {2, 2}});
            if (k == 3)
                return is({{2, 1}, {2, 1}, {2, 1}}) ||
                       (ones && p[0].first == 1 && p[1].first == 2 && p[2].first >= 4) ||
                       is({{2, 1}, {2, 1}, {1, 2}});
            return false;
    }
    return false;
}

// ---- defective families ---------------------------------------------------

bool cgg_defective(const Pairs& p, std::int64_t s) {
    return either(p, [&](Pair x, Pair y) {
        return x.first == 1 && y.first == 1 && x.second == 2 && y.second % 2 == 0 && s == y.second + 1;
    });
}

bool is_cgg_format(const Pairs& p) { return p.size() == 2 && p[0].first == 1 && p[1].first == 1; }

const std::array<std::array<int, 3>, 4> kAhExceptions{{{2, 4, 5}, {3, 4, 9}, {4, 3, 7}, {4, 4, 14}}};

bool ah_defective(const Pairs& p, std::int64_t s) {
    if (p.size() != 1) return false;
    auto [n, a] = p[0];
    if (a == 2 && s >= 2 && s <= n) return true;
    for (const auto& e : kAhExceptions)
        if (e[0] == n && e[1] == a && e[2] == s) return true;
    return false;
}

// Row (9): (n,1;2,2k) defective for kn+k+1 <= s <= kn+k+n.
std::optional<std::pair<std::int64_t, std::int64_t>> row9_range(const Pairs& p) {
    std::optional<std::pair<std::int64_t, std::int64_t>> r;
    either(p, [&](Pair x, Pair y) {
        if (x.second == 2 && y.first == 1 && y.second % 2 == 0) {
            std::int64_t n = x.first, k = y.second / 2;
            r = {k * n + k + 1, k * n + k + n};
            return true;
        }
        return false;
    });
    return r;
}

std::optional<Fact> table1(const Pairs& p, std::int64_t s) {
    auto in = [&](std::int64_t lo, std::int64_t hi) { return s >= lo && s <= hi; };
    // (1) (2,2k+1;1,2;3k+2), k >= 1
    if (either(p, [&](Pair x, Pair y) {
            return x == Pair{2, 1} && y.second == 2 && y.first >= 3 && y.first % 2 == 1 &&
                   s == 3 * ((y.first - 1) / 2) + 2;
        }))
        return defective("Table1-row1");
    if (same(p, {{4, 1}, {3, 2}}) && s == 6) return defective("Table1-row2");
    if (same(p, {{1, 1}, {2, 3}}) && s == 5) return defective("Table1-row3");
    // (4) (1,n;2,2), n+2 <= s <= 2n+1
    if (either(p, [&](Pair x, Pair y) {
            return x == Pair{1, 2} && y.second == 2 && in(y.first + 2, 2 * y.first + 1);
        }))
        return defective("Table1-row4");
    if (same(p, {{2, 2}, {2, 2}}) && in(7, 8)) return defective("Table1-row5");
    // (6) (2,n;2,2), ceil((3n^2+9n+5)/(n+3)) <= s <= 3n+2, n >= 2
    if (either(p, [&](Pair x, Pair y) {
            std::int64_t n = y.first;
            return x == Pair{2, 2} && y.second == 2 && n >= 2 && in((3 * n * n + 9 * n + 5 + n + 2) / (n + 3), 3 * n + 2);
        }))
        return defective("Table1-row6");
    if (same(p, {{3, 2}, {3, 2}}) && in(14, 15)) return defective("Table1-row7");
    if (same(p, {{3, 2}, {4, 2}}) && s == 19) return defective("Table1-row8");
    if (auto r = row9_range(p); r && in(r->first, r->second))
        return defective("Table1-row9", range_detail(r->first, r->second));
    return std::nullopt;
}

std::optional<std::pair<BigInt, BigInt>> unbalanced_any(const Pairs& p, std::int64_t s, bool want_hit) {
    // Tries every degree-1 factor as the last one.
    if (p.size() < 2) return std::nullopt;
    for (std::size_t last = 0; last < p.size(); ++last) {
        if (p[last].second != 1) continue;
        Format f;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (i != last) {
                f.n.push_back(p[i].first);
                f.a.push_back(p[i].second);
            }
        f.n.push_back(p[last].first);
        f.a.push_back(1);
        auto r = unbalanced_range(f);
        if (!r) continue;
        if (!want_hit || (s >= r->first && s <= r->second)) return r;
    }
    return std::nullopt;
}

bool is_unbalanced(const Pairs& p) {
    if (p.size() < 2) return false;
    for (std::size_t last = 0; last < p.size(); ++last) {
        if (p[last].second != 1) continue;
        BigInt prod = 1;
        std::int64_t sum = 0;
        for (std::size_t i = 0; i < p.size(); ++i)
            if (i != last) {
                prod *= binom(p[i].first + p[i].second, p[i].second);
                sum += p[i].first;
            }
        if (BigInt(p[last].first) >= prod - sum + 1) return true;
    }
    return false;
}

// (n,n,1;1,1,2d), n >= 2: defective exactly for d(n+1)+1 <= s <= d(n+1)+n.
std::optional<std::pair<std::int64_t, std::int64_t>> nn1_range(const Pairs& p) {
    if (p.size() != 3) return std::nullopt;
    // sorted: (1,2d) first, then (n,1),(n,1)
    if (p[0].first != 1 || p[0].second % 2 != 0 || p[1] != p[2] || p[1].second != 1 || p[1].first < 2)
        return std::nullopt;
    std::int64_t n = p[1].first, d = p[0].second / 2;
    return std::make_pair(d * (n + 1) + 1, d * (n + 1) + n);
}

// ---- literature statements -------------------------------------------------

struct LitEntry {
    Pairs p;
    std::int64_t s;
    const char* src;
};

const std::vector<LitEntry>& literature() {
    static const std::vector<LitEntry> v = {
        {{{1, 1}, {2, 3}}, 3, "BD"},
        {{{2, 1}, {1, 3}}, 3, "BD"},
        {{{1, 1}, {2, 2}}, 3, "BD"},
        {{{1, 1}, {1, 2}, {1, 2}}, 3, "BD"},
        {{{1, 1}, {1, 1}, {1, 3}}, 3, "BD"},
        {{{1, 1}, {2, 2}}, 4, "AB"},
        {{{1, 1}, {3, 2}}, 4, "AB"},
        {{{2, 1}, {3, 2}}, 4, "AB"},
        {{{2, 1}, {2, 2}}, 4, "A"},
        {{{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}, 3, "CGG4"},
        {{{1, 1}, {1, 1}, {1, 1}, {1, 1}, {1, 1}}, 4, "CGG4"},
    };
    return v;
}

}  // namespace

const char* to_string(FactStatus s) {
    switch (s) {
        case FactStatus::KnownTrue: return "known_true";
        case FactStatus::KnownDefective: return "known_defective";
        case FactStatus::Unknown: return "unknown";
    }
    return "?";
}

std::optional<bool> classification_says_defective(const Statement& st) {
    if (!st.is_t() || st.s < 2 || st.s > 4 || st.fmt.k() == 0) return std::nullopt;
    return class_defective(pairs_of(st.fmt), st.s);
}

KnowledgeBase::KnowledgeBase(KnowledgeOptions opt) : opt_(std::move(opt)) {
    auto T = [](auto f) -> Pred {
        return [f](const Statement& st) -> std::optional<Fact> {
            if (!st.is_t()) return std::nullopt;
            return f(pairs_of(st.fmt), st.s);
        };
    };

    // Trivial statements.
    rules_.push_back({"trivial", [](const Statement& st) -> std::optional<Fact> {
                          if (st.fmt.k() == 0) return known_true("trivial", "point");
                          if (st.s == 0 && st.v == 0) return known_true("trivial", "simple points");
                          if (st.is_t() && st.s == 1) return known_true("trivial", "single point");
                          return std::nullopt;
                      }});

    for (int s = 2; s <= 4; ++s) {
        std::string src = "class-s" + std::to_string(s);
        rules_.push_back({src, T([s, src](const Pairs& p, std::int64_t ss) -> std::optional<Fact> {
                              if (ss != s) return std::nullopt;
                              return class_defective(p, s) ? defective(src) : known_true(src);
                          })});
    }

    // Defective families.
    rules_.push_back({"CGG-thm2.1", T([](const Pairs& p, std::int64_t s) -> std::optional<Fact> {
                          if (cgg_defective(p, s)) return defective("CGG-thm2.1");
                          return std::nullopt;
                      })});
    rules_.push_back({"AH", T([](const Pairs& p, std::int64_t s) -> std::optional<Fact> {
                          if (ah_defective(p, s)) return defective("AH");
                          return std::nullopt;
                      })});
    rules_.push_back({"Table1", T([](const Pairs& p, std::int64_t s) { return table1(p, s); })});
    rules_.push_back({"unbalanced", T([](const Pairs& p, std::int64_t s) -> std::optional<Fact> {
                          if (auto r = unbalanced_any(p, s, true))
                              return defective("unbalanced", range_detail(to_int64(r->first), to_int64(r->second)));
                          return std::nullopt;
                      })});
    rules_.push_back({"nn1", T([](const Pairs& p, std::int64_t s) -> std::optional<Fact> {
                          if (auto r = nn1_range(p); r && s >= r->first && s <= r->second)
                              return defective("nn1", range_detail(r->first, r->second));
                          return std::nullopt;
                      })});

    // True families.
    rules_.push_back({"CGG-thm2.1", T([](const Pairs& p, std::int64_t s) -> std::optional<Fact> {
                          if (is_cgg_format(p) && !cgg_defective(p, s)) return known_true("CGG-thm2.1");
                          return std::nullopt;
                      })});
    rules_.push_back({"AH", T([](const Pairs& p, std::int64_t s) -> std::optional<Fact> {
                          if (p.size() == 1 && !ah_defective(p, s)) return known_true("AH");
                          return std::nullopt;
                      })});
    rules_.push_back({"unbalanced", T([](const Pairs& p, std::int64_t s) -> std::optional<Fact> {
                          // Unbalanced formats fail exactly inside the range.
                          if (!is_unbalanced(p) || unbalanced_any(p, s, true)) return std::nullopt;
                          return known_true("unbalanced");
                      })});
    rules_.push_back({"nn1", T([](const Pairs& p, std::int64_t s) -> std::optional<Fact> {
                          if (auto r = nn1_range(p); r && (s < r->first || s > r->second)) return known_true("nn1");
                          return std::nullopt;
                      })});
    rules_.push_back({"n11d", T([](const Pairs& p, std::int64_t) -> std::optional<Fact> {
                          if (either(p, [](Pair x, Pair y) { return x.second == 1 && y.first == 1; }))
                              return known_true("n11d");
                          return std::nullopt;
                      })});
    rules_.push_back({"Abrescia", T([](const Pairs& p, std::int64_t) -> std::optional<Fact> {
                          if (either(p, [](Pair x, Pair y) { return x.second == 2 && y.first == 1 && y.second % 2 == 1; }))
                              return known_true("Abrescia");
                          return std::nullopt;
                      })});
    rules_.push_back({"n124s", T([](const Pairs& p, std::int64_t s) -> std::optional<Fact> {
                          if (auto r = row9_range(p); r && (s < r->first || s > r->second)) return known_true("n124s");
                          return std::nullopt;
                      })});
    rules_.push_back({"n1a2d", T([](const Pairs& p, std::int64_t) -> std::optional<Fact> {
                          if (either(p, [](Pair, Pair y) { return y.first == 1 && y.second >= 3 && y.second % 2 == 1; }))
                              return known_true("n1a2d");
                          return std::nullopt;
                      })});
    rules_.push_back({"n1a4", T([](const Pairs& p, std::int64_t) -> std::optional<Fact> {
                          if (either(p, [](Pair x, Pair y) { return x.second >= 3 && y == Pair{1, 4}; }))
                              return known_true("n1a4");
                          return std::nullopt;
                      })});
    rules_.push_back({"n1ab", T([](const Pairs& p, std::int64_t) -> std::optional<Fact> {
                          if (either(p, [](Pair x, Pair y) { return x.second >= 3 && y.first == 1 && y.second >= 3; }))
                              return known_true("n1ab");
                          return std::nullopt;
                      })});
    // Table 2 rows, each with the exceptions it lists.
    rules_.push_back({"Table2-CCh", T([](const Pairs& p, std::int64_t) -> std::optional<Fact> {
                          if (either(p, [](Pair x, Pair y) { return x == Pair{1, 1} && y.second == 2; }))
                              return known_true("Table2-CCh");
                          return std::nullopt;
                      })});
    rules_.push_back({"Table2-AB", T([](const Pairs& p, std::int64_t s) -> std::optional<Fact> {
                          if (!either(p, [](Pair x, Pair y) { return x == Pair{2, 1} && y.second == 2; }))
                              return std::nullopt;
                          if (table1(p, s)) return std::nullopt;
                          return known_true("Table2-AB");
                      })});
    rules_.push_back({"Table2-A", T([](const Pairs& p, std::int64_t s) -> std::optional<Fact> {
                          bool m = either(p, [](Pair x, Pair y) {
                              return x.second == 1 && y.second == 2 && (y.first == x.first - 1 || y.first == x.first);
                          });
                          if (!m || table1(p, s)) return std::nullopt;
                          return known_true("Table2-A");
                      })});
    rules_.push_back({"Table2-CGG2", T([](const Pairs& p, std::int64_t) -> std::optional<Fact> {
                          if (either(p, [](Pair x, Pair y) { return x.second == 1 && y.second == x.first + 1; }))
                              return known_true("Table2-CGG2");
                          return std::nullopt;
                      })});
    rules_.push_back({"Table2-DF", T([](const Pairs& p, std::int64_t s) -> std::optional<Fact> {
                          if (!either(p, [](Pair x, Pair y) { return x == Pair{1, 1} && y.first == 2; }))
                              return std::nullopt;
                          if (table1(p, s)) return std::nullopt;
                          return known_true("Table2-DF");
                      })});
    rules_.push_back({"Table2-BCC", T([](const Pairs& p, std::int64_t) -> std::optional<Fact> {
                          if (either(p, [](Pair x, Pair y) {
                                  return x.second == 1 && y.second >= 3 &&
                                         binom(y.first + y.second, y.second) % (x.first + y.first + 1) == 0;
                              }))
                              return known_true("Table2-BCC");
                          return std::nullopt;
                      })});
    rules_.push_back({"Table2-Abr", T([](const Pairs& p, std::int64_t s) -> std::optional<Fact> {
                          if (!either(p, [](Pair x, Pair y) { return x.second == 3 && y.first == 1; }))
                              return std::nullopt;
                          if (table1(p, s)) return std::nullopt;
                          return known_true("Table2-Abr");
                      })});
    rules_.push_back({"literature", T([](const Pairs& p, std::int64_t s) -> std::optional<Fact> {
                          for (const auto& e : literature())
                              if (e.s == s && same(p, e.p)) return known_true(e.src);
                          // BD: T(1,1;a;4) for every a, and T(1,2;a;4) for a != (2,2).
                          if (s == 4 && p.size() == 2 && p[0].first == 1 && p[1].first == 1) return known_true("BD");
                          if (s == 4 && either(p, [](Pair x, Pair y) {
                                  return x.first == 1 && y.first == 2 && !(x.second == 2 && y.second == 2);
                              }))
                              return known_true("BD");
                          return std::nullopt;
                      })});
}

bool KnowledgeBase::excluded(const std::string& source) const {
    for (const auto& pre : opt_.excluded_prefixes)
        if (source.rfind(pre, 0) == 0) return true;
    return false;
}

std::vector<Fact> KnowledgeBase::lookup_all(const Statement& st) const {
    std::vector<Fact> out;
    for (const auto& r : rules_) {
        if (excluded(r.source)) continue;
        if (auto f = r.eval(st); f && !excluded(f->source)) out.push_back(*f);
    }
    if (opt_.assume_conjecture && st.is_t() && st.fmt.k() == 2) {
        bool any_def = std::any_of(out.begin(), out.end(),
                                   [](const Fact& f) { return f.status == FactStatus::KnownDefective; });
        if (!any_def) out.push_back(known_true("conjecture"));
    }
    return out;
}

Fact KnowledgeBase::lookup(const Statement& st) const {
    for (const auto& r : rules_) {
        if (excluded(r.source)) continue;
        if (auto f = r.eval(st); f && !excluded(f->source)) return *f;
    }
    if (opt_.assume_conjecture && st.is_t() && st.fmt.k() == 2) return known_true("conjecture");
    return {};
}

std::vector<CatalogEntry> defective_catalog() {
    return {
        {"(1,1;2,2d; s = 2d+1), d >= 1", "CGG-thm2.1"},
        {"(n;2; 2 <= s <= n)", "AH"},
        {"(2;4;5), (3;4;9), (4;3;7), (4;4;14)", "AH"},
        {"(2,2k+1;1,2; s = 3k+2), k >= 1", "Table1-row1"},
        {"(4,3;1,2; s = 6)", "Table1-row2"},
        {"(1,2;1,3; s = 5)", "Table1-row3"},
        {"(1,n;2,2; n+2 <= s <= 2n+1)", "Table1-row4"},
        {"(2,2;2,2; s = 7, 8)", "Table1-row5"},
        {"(2,n;2,2; ceil((3n^2+9n+5)/(n+3)) <= s <= 3n+2), n >= 2", "Table1-row6"},
        {"(3,3;2,2; s = 14, 15)", "Table1-row7"},
        {"(3,4;2,2; s = 19)", "Table1-row8"},
        {"(n,1;2,2k; kn+k+1 <= s <= kn+k+n)", "Table1-row9"},
        {"(n_1..n_k;a_1..a_{k-1},1) unbalanced: prod C(n_i+a_i,a_i) - sum n_i < s < min(n_k+1, prod C(n_i+a_i,a_i))",
         "unbalanced"},
        {"(n,n,1;1,1,2d; d(n+1)+1 <= s <= d(n+1)+n), n >= 2", "nn1"},
        {"(n;2; s=2), n >= 2; (n1,n2;1,1; s=2), 2 <= n1 <= n2", "class-s2"},
        {"(n;2), n >= 3; (n1,n2;1,1), 3 <= n1 <= n2; (1,1;2,2); (1,1,n;1,1,1), n >= 3; (1,1,1;1,1,2); "
         "(1,1,1,1;1,1,1,1); all at s=3",
         "class-s3"},
        {"(n;2), n >= 4; (n1,n2;1,1), 4 <= n1 <= n2; (1,2;2,2); (2,2,2;1,1,1); (1,2,n;1,1,1), n >= 4; "
         "(2,2,1;1,1,2); all at s=4",
         "class-s4"},
        {"(m,n;a,1) unbalanced, m >= 2", "conjecture-a", true},
        {"(1,n;2k,2), k >= 1", "conjecture-b", true},
        {"(4,3;1,2); (2,n;1,2), n odd", "conjecture-c", true},
        {"(1,2;1,3)", "conjecture-d", true},
        {"(2,2;2,2); (3,3;2,2); (3,4;2,2)", "conjecture-e", true},
    };
}

}  // namespace secant
