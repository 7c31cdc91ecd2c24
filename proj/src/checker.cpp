#include "secant/checker.hpp"

#include <algorithm>

#include "secant/hilbert.hpp"
#include "secant/schemes.hpp"

namespace secant {

namespace {

using J = nlohmann::ordered_json;

struct Reject {
    std::string msg;
};

[[noreturn]] void reject(const std::string& m) { throw Reject{m}; }

void require(bool c, const std::string& m) {
    if (!c) reject(m);
}

BigInt amb(const Format& f) {
    BigInt N = 1;
    for (int i = 0; i < f.k(); ++i) N *= binom(f.n[i] + f.a[i], f.a[i]);
    return N;
}

BigInt deg(const Statement& st) {
    BigInt d = BigInt(st.s) * (1 + st.fmt.sum_n()) + st.t;
    if (st.v > 0) d += BigInt(st.v) * (st.fmt.n[0] + 1);
    return d;
}

bool sub(const Statement& st) { return deg(st) <= amb(st.fmt); }
bool super(const Statement& st) { return deg(st) >= amb(st.fmt); }

std::int64_t int_param(const J& p, const char* key) {
    require(p.contains(key), std::string("missing parameter ") + key);
    const J& v = p[key];
    require(v.is_number_integer(), std::string("parameter ") + key + " is not an integer");
    return v.get<std::int64_t>();
}

BigInt big_param(const J& p, const char* key) {
    require(p.contains(key), std::string("missing parameter ") + key);
    const J& v = p[key];
    if (v.is_number_integer()) return BigInt(v.get<std::int64_t>());
    require(v.is_string(), std::string("parameter ") + key + " is not an integer");
    try {
        return BigInt(v.get<std::string>());
    } catch (...) {
        reject(std::string("parameter ") + key + " is not an integer");
    }
}

std::string str_param(const J& p, const char* key) {
    require(p.contains(key) && p[key].is_string(), std::string("missing string parameter ") + key);
    return p[key].get<std::string>();
}

Statement parse(const J& node) {
    require(node.contains("stmt") && node["stmt"].is_string(), "node without statement");
    try {
        return parse_statement(node["stmt"].get<std::string>());
    } catch (const std::exception& e) {
        reject(std::string("unparseable statement: ") + e.what());
    }
}

bool same_statement(const Statement& a, const Statement& b) {
    try {
        return canonicalize(a) == canonicalize(b);
    } catch (const InvalidStatement&) {
        return false;
    }
}

// 0-based factor from a 1-based parameter; the factor must be the first
// of its (n_i, a_i) kind so that the choice is unambiguous.
int factor_param(const J& p, const Format& f) {
    std::int64_t idx = int_param(p, "factor");
    require(idx >= 1 && idx <= f.k(), "factor index out of range");
    int l = static_cast<int>(idx - 1);
    for (int j = 0; j < l; ++j)
        require(!(f.n[j] == f.n[l] && f.a[j] == f.a[l]), "factor index is not the first of its kind");
    return l;
}

Statement rotate(const Statement& st, int l) {
    Statement r = st;
    if (l == 0) return r;
    require(st.v == 0, "cannot rotate a statement with fiber points");
    std::rotate(r.fmt.n.begin(), r.fmt.n.begin() + l, r.fmt.n.begin() + l + 1);
    std::rotate(r.fmt.a.begin(), r.fmt.a.begin() + l, r.fmt.a.begin() + l + 1);
    return r;
}

Statement T(Format f, std::int64_t s) {
    Statement st;
    st.fmt = std::move(f);
    st.s = s;
    return st;
}

class Checker {
public:
    Checker(const CheckOptions& opt) : opt_(opt), kb_(opt.knowledge) {}

    std::size_t nodes = 0;
    std::string where;

    void check(const J& node) {
        ++nodes;
        Statement st = parse(node);
        where = to_string(st);
        require(node.contains("status") && node["status"] == "closed", "node is not closed");
        require(node.contains("rule") && node["rule"].is_string(), "node without rule");
        const J params = node.contains("params") ? node["params"] : J::object();
        require(params.is_object(), "params is not an object");
        std::vector<Statement> kids;
        if (node.contains("children")) {
            require(node["children"].is_array(), "children is not an array");
            for (const auto& c : node["children"]) kids.push_back(parse(c));
        }
        const std::string rule = node["rule"].get<std::string>();
        if (rule != "remark_iv") require(is_canonical(st), "statement is not canonical");

        if (rule == "known_leaf") known_leaf(st, params, kids);
        else if (rule == "rank_leaf") rank_leaf(st, params, kids);
        else if (rule == "diff_horace") diff_horace(st, params, kids);
        else if (rule == "segre_split") segre_split(st, params, kids);
        else if (rule == "monotone_degree") monotone_degree(st, params, kids);
        else if (rule == "monotone_dim") monotone_dim(st, params, kids);
        else if (rule == "monotone_super") monotone_super(st, params, kids);
        else if (rule == "remark_iv") remark_iv(st, params, kids);
        else if (rule == "remark_v") remark_v(st, params, kids);
        else reject("unknown rule " + rule);

        for (const auto& c : node["children"]) check(c);
    }

private:
    const CheckOptions& opt_;
    KnowledgeBase kb_;

    void expect_children(const std::vector<Statement>& got, const std::vector<Statement>& want) {
        require(got.size() == want.size(), "wrong number of children");
        for (std::size_t i = 0; i < got.size(); ++i)
            require(same_statement(got[i], want[i]), "child " + std::to_string(i + 1) + " is " + to_string(got[i]) +
                                                         ", rule yields " + to_string(want[i]));
    }

    void known_leaf(const Statement& st, const J& p, const std::vector<Statement>& kids) {
        require(kids.empty(), "known leaf with children");
        Fact f = kb_.lookup(st);
        require(f.status == FactStatus::KnownTrue, "knowledge base does not know the statement is true");
        require(str_param(p, "source") == f.source, "source differs from knowledge base (" + f.source + ")");
        std::string detail = p.contains("detail") ? str_param(p, "detail") : std::string();
        require(detail == f.detail, "detail differs from knowledge base");
    }

    void rank_leaf(const Statement& st, const J& p, const std::vector<Statement>& kids) {
        require(kids.empty(), "rank leaf with children");
        std::int64_t prime = int_param(p, "prime");
        require(prime > 1 && is_prime(static_cast<std::uint64_t>(prime)) && prime < (1ll << 32), "prime is not prime");
        BigInt N = amb(st.fmt), d = deg(st);
        BigInt expected = std::min(N, d);
        require(big_param(p, "expected") == expected, "expected value is " + expected.str());
        require(big_param(p, "observed") == expected, "observed rank is not the expected value");
        require(p.contains("seed") && p["seed"].is_number_integer(), "missing seed");
        auto seed = p["seed"].get<std::uint64_t>();
        require(p.contains("digest") && p["digest"].is_number_unsigned(), "missing digest");
        PrimeField F(static_cast<std::uint64_t>(prime));
        Scheme z = sample(scheme_for(st), F, seed);
        require(points_digest(z) == p["digest"].get<std::uint64_t>(), "points digest does not match the seed");
        if (opt_.recompute_rank)
            require(BigInt(hilbert_value(z, F)) == expected, "recomputed rank differs");
    }

    void diff_horace(const Statement& st, const J& p, const std::vector<Statement>& kids) {
        require(st.t == 0 && st.v == 0, "differential Horace on an S-statement");
        int l = factor_param(p, st.fmt);
        Statement r = rotate(st, l);
        const Format& f = r.fmt;
        require(f.a[0] >= 3 && f.n[0] >= 1, "differential Horace needs a_1 >= 3 and n_1 >= 1");
        BigInt rest = 1;
        for (int i = 1; i < f.k(); ++i) rest *= binom(f.n[i] + f.a[i], f.a[i]);
        BigInt nR = binom(f.n[0] + f.a[0] - 1, f.a[0] - 1) * rest;
        require(big_param(p, "nR") == nR, "N_R is " + nR.str());
        BigInt div = BigInt(r.s) * (1 + f.sum_n()) - nR;
        require(div >= 0, "negative dividend");
        std::int64_t sp = to_int64(div / f.sum_n()), eps = to_int64(div % f.sum_n());
        require(int_param(p, "sPrime") == sp, "s' is " + std::to_string(sp));
        require(int_param(p, "eps") == eps, "eps is " + std::to_string(eps));
        require(sp >= eps, "s' < eps");
        std::int64_t s3 = r.s - sp - eps;
        BigInt lhs = BigInt(s3) * (1 + f.sum_n());
        BigInt rhs = binom(f.n[0] + f.a[0] - 2, f.a[0] - 2) * rest;
        require(big_param(p, "lhs") == lhs && big_param(p, "rhs") == rhs, "superabundance sides differ");
        require(lhs >= rhs, "superabundance inequality fails");
        require(p.contains("equality") && p["equality"].is_boolean() && p["equality"].get<bool>() == (lhs == rhs),
                "equality flag is wrong");
        Format f0 = f, f1 = f, f2 = f;
        f0.n[0] -= 1;
        f1.a[0] -= 1;
        f2.a[0] -= 2;
        expect_children(kids, {T(f0, sp), T(f1, r.s - sp), T(f2, s3)});
    }

    void segre_split(const Statement& st, const J& p, const std::vector<Statement>& kids) {
        int l = factor_param(p, st.fmt);
        require(st.v == 0 || l == 0, "split factor must be factor 1 when fiber points are present");
        Statement r = rotate(st, l);
        require(r.fmt.a[0] == 1, "split factor has degree != 1");
        std::int64_t n1p = int_param(p, "n1p"), sp = int_param(p, "sPrime"), tp = int_param(p, "tPrime");
        std::int64_t n1pp = r.fmt.n[0] - n1p - 1;
        require(n1p >= 0 && n1pp >= 0 && sp >= 0 && sp <= r.s && tp >= 0 && tp <= r.t, "bad partition");
        Statement c1 = r, c2 = r;
        c1.fmt.n[0] = static_cast<int>(n1p);
        c1.s = sp;
        c1.t = tp;
        c1.v = r.v + (r.s - sp);
        c2.fmt.n[0] = static_cast<int>(n1pp);
        c2.s = r.s - sp;
        c2.t = r.t - tp;
        c2.v = r.v + sp;
        require((sub(c1) && sub(c2)) || (super(c1) && super(c2)), "children have different abundancy");
        expect_children(kids, {c1, c2});
    }

    void monotone_degree(const Statement& st, const J& p, const std::vector<Statement>& kids) {
        require(st.t == 0 && st.v == 0, "degree monotonicity on an S-statement");
        int l = factor_param(p, st.fmt);
        std::int64_t from = int_param(p, "from"), to = int_param(p, "to");
        require(from == st.fmt.a[l], "'from' is not the current degree");
        require(to >= 1 && to < from, "degree must decrease and stay >= 1");
        Statement c = st;
        c.fmt.a[l] = static_cast<int>(to);
        require(sub(c), "child is not subabundant");
        expect_children(kids, {c});
    }

    void monotone_dim(const Statement& st, const J& p, const std::vector<Statement>& kids) {
        require(st.t == 0 && st.v == 0, "dimension monotonicity on an S-statement");
        int l = factor_param(p, st.fmt);
        std::int64_t from = int_param(p, "from"), to = int_param(p, "to");
        require(from == st.fmt.n[l], "'from' is not the current dimension");
        require(to >= 0 && to < from, "dimension must decrease");
        Statement c = st;
        c.fmt.n[l] = static_cast<int>(to);
        require(c.fmt.sum_n() >= 1, "child is the point");
        require(sub(c), "child is not subabundant");
        const Format& f = st.fmt;
        BigInt bound = binom(to + f.a[l] - 1, f.a[l] - 1);
        for (int i = 0; i < f.k(); ++i)
            if (i != l) bound *= binom(f.n[i] + f.a[i], f.a[i]);
        require(big_param(p, "bound") == bound, "bound is " + bound.str());
        require(BigInt(st.s) <= bound, "s exceeds the dimension bound");
        expect_children(kids, {c});
    }

    void monotone_super(const Statement& st, const J& p, const std::vector<Statement>& kids) {
        require(super(st), "parent is not superabundant");
        std::string kind = str_param(p, "kind");
        Statement c = st;
        std::int64_t from = int_param(p, "from"), to = int_param(p, "to");
        if (kind == "count") {
            std::string field = str_param(p, "field");
            std::int64_t* slot = field == "s" ? &c.s : field == "t" ? &c.t : field == "v" ? &c.v : nullptr;
            require(slot != nullptr, "unknown count field");
            require(from == *slot, "'from' is not the current count");
            require(to >= 0 && to < from, "count must decrease");
            *slot = to;
        } else if (kind == "degree") {
            require(st.t == 0 && st.v == 0, "degree increase on an S-statement");
            int l = factor_param(p, st.fmt);
            require(from == st.fmt.a[l], "'from' is not the current degree");
            require(to > from, "degree must increase");
            c.fmt.a[l] = static_cast<int>(to);
        } else {
            reject("unknown monotone_super kind " + kind);
        }
        require(super(c), "child is not superabundant");
        expect_children(kids, {c});
    }

    void remark_iv(const Statement& st, const J& p, const std::vector<Statement>& kids) {
        require(p.empty(), "remark_iv takes no parameters");
        require(st.v > 0 && st.fmt.k() >= 1 && st.fmt.n[0] == 0 && st.fmt.a[0] == 1,
                "remark_iv needs S(0,..;1,..;s;t;v) with v > 0");
        Statement c = st;
        c.fmt.n.erase(c.fmt.n.begin());
        c.fmt.a.erase(c.fmt.a.begin());
        c.t += c.v;
        c.v = 0;
        expect_children(kids, {c});
    }

    void remark_v(const Statement& st, const J& p, const std::vector<Statement>& kids) {
        require(st.v == 0 && st.t > 0, "remark_v needs v = 0 and t > 0");
        require(int_param(p, "t") == st.t, "'t' is not the dropped count");
        require(sub(st), "parent is not subabundant");
        expect_children(kids, {T(st.fmt, st.s)});
    }
};

}  // namespace

CheckResult check_tree(const nlohmann::ordered_json& tree, const CheckOptions& opt) {
    Checker c(opt);
    CheckResult r;
    try {
        c.check(tree);
    } catch (const Reject& e) {
        r.ok = false;
        r.error = e.msg;
        r.where = c.where;
    } catch (const std::exception& e) {
        r.ok = false;
        r.error = e.what();
        r.where = c.where;
    }
    r.nodes = c.nodes;
    return r;
}

CheckResult check_tree(const nlohmann::json& tree, const CheckOptions& opt) {
    return check_tree(nlohmann::ordered_json::parse(tree.dump()), opt);
}

}  // namespace secant
