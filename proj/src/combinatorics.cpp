#include "secant/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <numeric>

namespace secant {

namespace {

constexpr int kTableSize = 96;

struct BinomTable {
    std::vector<std::vector<BigInt>> rows;
    BinomTable() {
        rows.resize(kTableSize);
        for (int n = 0; n < kTableSize; ++n) {
            rows[n].resize(n + 1);
            rows[n][0] = rows[n][n] = 1;
            for (int k = 1; k < n; ++k) rows[n][k] = rows[n - 1][k - 1] + rows[n - 1][k];
        }
    }
};

const BinomTable& table() {
    static const BinomTable t;
    return t;
}

}  // namespace

int Format::sum_n() const { return std::accumulate(n.begin(), n.end(), 0); }

BigInt binom(std::uint64_t n, std::uint64_t k) {
    if (k > n) return 0;
    if (n < kTableSize) return table().rows[n][k];
    k = std::min(k, n - k);
    BigInt r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

bool is_canonical_format(const Format& fmt) {
    if (fmt.n.size() != fmt.a.size()) return false;
    for (int i = 0; i < fmt.k(); ++i)
        if (fmt.n[i] < 1 || fmt.a[i] < 1) return false;
    return true;
}

BigInt ambient_dim(const Format& fmt) {
    if (!is_canonical_format(fmt))
        throw InvalidStatement("ambient_dim: non-canonical format " + to_string(fmt));
    BigInt N = 1;
    for (int i = 0; i < fmt.k(); ++i) N *= binom(fmt.n[i] + fmt.a[i], fmt.a[i]);
    return N;
}

BigInt scheme_degree(const Statement& st) {
    BigInt d = BigInt(st.s) * (1 + st.fmt.sum_n()) + st.t;
    if (st.v > 0) d += BigInt(st.v) * (st.fmt.n.at(0) + 1);
    return d;
}

BigInt expected_value(const Statement& st) {
    BigInt N = ambient_dim(st.fmt);
    BigInt d = scheme_degree(st);
    return d < N ? d : N;
}

Abundancy abundancy(const Statement& st) {
    BigInt N = ambient_dim(st.fmt);
    BigInt d = scheme_degree(st);
    if (d == N) return Abundancy::Equi;
    return d < N ? Abundancy::Sub : Abundancy::Super;
}

bool is_sub(Abundancy a) { return a != Abundancy::Super; }
bool is_super(Abundancy a) { return a != Abundancy::Sub; }

const char* to_string(Abundancy a) {
    switch (a) {
        case Abundancy::Sub: return "subabundant";
        case Abundancy::Super: return "superabundant";
        case Abundancy::Equi: return "equiabundant";
    }
    return "?";
}

HoraceParams horace_params(const Statement& st) {
    const Format& f = st.fmt;
    if (!st.is_t()) throw InvalidStatement("horace_params: T-statement required");
    if (f.k() < 1 || f.a[0] < 2) throw InvalidStatement("horace_params: a_1 >= 2 required");
    BigInt rest = 1;
    for (int i = 1; i < f.k(); ++i) rest *= binom(f.n[i] + f.a[i], f.a[i]);
    HoraceParams hp;
    hp.nR = binom(f.n[0] + f.a[0] - 1, f.a[0] - 1) * rest;
    hp.nT = binom(f.n[0] + f.a[0] - 1, f.a[0]) * rest;
    hp.dividend = BigInt(st.s) * (1 + f.sum_n()) - hp.nR;
    if (hp.dividend < 0) throw NegativeDividend("s(1+sum n) < N_R for " + to_string(st));
    int sn = f.sum_n();
    hp.sPrime = to_int64(hp.dividend / sn);
    hp.epsilon = to_int64(hp.dividend % sn);
    return hp;
}

std::pair<BigInt, BigInt> s_bounds(const Format& fmt) {
    BigInt N = ambient_dim(fmt);
    BigInt d = 1 + fmt.sum_n();
    BigInt lo = N / d;
    BigInt hi = (N % d == 0) ? lo : lo + 1;
    return {lo, hi};
}

Statement canonicalize(const Statement& in) {
    Statement st = in;
    Format& f = st.fmt;
    if (f.n.size() != f.a.size()) throw InvalidStatement("length of n and a differ");
    if (st.s < 0 || st.t < 0 || st.v < 0) throw InvalidStatement("negative point count");
    for (int i = 0; i < f.k(); ++i)
        if (f.n[i] < 0 || f.a[i] < 0) throw InvalidStatement("negative n_i or a_i");
    if (st.v > 0) {
        if (f.k() == 0 || f.a[0] != 1)
            throw InvalidStatement("fiber points need a_1 = 1: " + to_string(in));
        if (f.n[0] == 0) {
            st.t += st.v;
            st.v = 0;
        }
    }
    std::vector<std::pair<int, int>> keep;
    for (int i = 0; i < f.k(); ++i) {
        if (f.n[i] == 0) continue;
        if (f.a[i] == 0)
            throw InvalidStatement("factor with n_i >= 1 and a_i = 0: " + to_string(in));
        keep.emplace_back(f.n[i], f.a[i]);
    }
    auto first = keep.begin();
    if (st.v > 0) ++first;
    std::sort(first, keep.end());
    f.n.clear();
    f.a.clear();
    for (auto [n, a] : keep) {
        f.n.push_back(n);
        f.a.push_back(a);
    }
    st.spelled_s = !st.is_t();
    return st;
}

bool is_canonical(const Statement& st) {
    try {
        return canonicalize(st) == st;
    } catch (const InvalidStatement&) {
        return false;
    }
}

std::optional<std::pair<BigInt, BigInt>> unbalanced_range(const Format& fmt) {
    int k = fmt.k();
    if (k < 2 || fmt.a[k - 1] != 1) return std::nullopt;
    BigInt prod = 1;
    std::int64_t sum = 0;
    for (int i = 0; i + 1 < k; ++i) {
        prod *= binom(fmt.n[i] + fmt.a[i], fmt.a[i]);
        sum += fmt.n[i];
    }
    int nk = fmt.n[k - 1];
    if (BigInt(nk) < prod - sum + 1) return std::nullopt;
    BigInt lo = prod - sum + 1;
    BigInt upper = std::min(BigInt(nk + 1), prod);
    BigInt hi = upper - 1;
    if (lo > hi) return std::nullopt;
    return std::make_pair(lo, hi);
}

std::int64_t to_int64(const BigInt& x) {
    if (x > BigInt(INT64_MAX) || x < BigInt(INT64_MIN))
        throw std::overflow_error("integer exceeds 64 bits");
    return x.convert_to<std::int64_t>();
}

}  // namespace secant
