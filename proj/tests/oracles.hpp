#pragma once

// Reference computations that share no code with the library: their own
// monomial enumeration, their own modular arithmetic, their own elimination.

#include <cstdint>
#include <algorithm>
#include <random>
#include <vector>

namespace oracle {

using i64 = std::int64_t;

inline i64 mod(i64 x, i64 p) {
    x %= p;
    return x < 0 ? x + p : x;
}

inline i64 powmod(i64 b, i64 e, i64 p) {
    i64 r = 1;
    b = mod(b, p);
    while (e > 0) {
        if (e & 1) r = static_cast<i64>((__int128)r * b % p);
        b = static_cast<i64>((__int128)b * b % p);
        e >>= 1;
    }
    return r;
}

// Plain Gauss-Jordan rank modulo p.
inline std::size_t rank_mod(std::vector<std::vector<i64>> m, i64 p) {
    std::size_t r = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.size() && mod(m[piv][c], p) == 0) ++piv;
        if (piv == m.size()) continue;
        std::swap(m[r], m[piv]);
        i64 inv = powmod(m[r][c], p - 2, p);
        for (auto& x : m[r]) x = static_cast<i64>((__int128)mod(x, p) * inv % p);
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == r) continue;
            i64 f = mod(m[i][c], p);
            if (f == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) m[i][j] = mod(m[i][j] - (i64)((__int128)f * m[r][j] % p), p);
        }
        ++r;
    }
    return r;
}

// Leibniz determinant; only for tiny matrices.
inline i64 det_mod(const std::vector<std::vector<i64>>& m, i64 p) {
    const std::size_t n = m.size();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    i64 total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        i64 prod = 1;
        for (std::size_t i = 0; i < n; ++i) prod = prod * mod(m[i][perm[i]], p) % p;
        total = mod(total + (inversions % 2 ? -prod : prod), p);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

// Largest nonvanishing minor.
inline std::size_t minor_rank(const std::vector<std::vector<i64>>& m, i64 p) {
    const std::size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::size_t best = 0;
    for (std::uint32_t rs = 1; rs < (1u << rows); ++rs)
        for (std::uint32_t cs = 1; cs < (1u << cols); ++cs) {
            int r = __builtin_popcount(rs), c = __builtin_popcount(cs);
            if (r != c || static_cast<std::size_t>(r) <= best) continue;
            std::vector<std::vector<i64>> sub;
            for (std::size_t i = 0; i < rows; ++i) {
                if (!(rs >> i & 1)) continue;
                std::vector<i64> row;
                for (std::size_t j = 0; j < cols; ++j)
                    if (cs >> j & 1) row.push_back(m[i][j]);
                sub.push_back(row);
            }
            if (det_mod(sub, p) != 0) best = r;
        }
    return best;
}

inline void compositions(int parts, int total, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        cur.push_back(total);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (int e = total; e >= 0; --e) {
        cur.push_back(e);
        compositions(parts - 1, total - e, cur, out);
        cur.pop_back();
    }
}

inline i64 multinomial(const std::vector<int>& e) {
    i64 r = 1;
    int sum = 0;
    for (int x : e)
        for (int i = 1; i <= x; ++i) {
            ++sum;
            r = r * sum / i;
        }
    return r;
}

// Rank of the stacked tangent spaces of the Segre-Veronese variety at s
// random points: the span of the coefficient vectors of prod_i l_i^{a_i}
// and of its partial derivatives in every coordinate of every l_i.
inline std::size_t terracini_rank(const std::vector<int>& n, const std::vector<int>& a, int s, i64 p,
                                  std::uint64_t seed) {
    const std::size_t k = n.size();
    std::vector<std::vector<std::vector<int>>> mons(k);
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<int> cur;
        compositions(n[i] + 1, a[i], cur, mons[i]);
    }
    std::vector<std::vector<std::size_t>> columns;  // multi-index per column, factor 1 most significant
    std::vector<std::size_t> idx;
    auto enumerate = [&](auto&& self, std::size_t i) -> void {
        if (i == k) {
            columns.push_back(idx);
            return;
        }
        for (std::size_t m = 0; m < mons[i].size(); ++m) {
            idx.push_back(m);
            self(self, i + 1);
            idx.pop_back();
        }
    };
    enumerate(enumerate, 0);

    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<i64> uni(1, p - 1);
    std::vector<std::vector<i64>> rows;
    for (int pt = 0; pt < s; ++pt) {
        std::vector<std::vector<i64>> coord(k);
        for (std::size_t i = 0; i < k; ++i)
            for (int j = 0; j <= n[i]; ++j) coord[i].push_back(uni(gen));
        // factor value of exponent e in l_i^{a_i}, optionally differentiated in x_{i,dj}
        auto factor_coeff = [&](std::size_t i, const std::vector<int>& e, int dj) {
            i64 c = multinomial(e) % p;
            for (int j = 0; j <= n[i]; ++j) {
                int ex = e[j];
                if (j == dj) {
                    if (ex == 0) return i64(0);
                    c = c * ex % p;
                    --ex;
                }
                c = c * powmod(coord[i][j], ex, p) % p;
            }
            return c;
        };
        auto row_for = [&](int di, int dj) {
            std::vector<i64> row;
            for (const auto& col : columns) {
                i64 v = 1;
                for (std::size_t i = 0; i < k; ++i)
                    v = v * factor_coeff(i, mons[i][col[i]], static_cast<int>(i) == di ? dj : -1) % p;
                row.push_back(v);
            }
            return row;
        };
        rows.push_back(row_for(-1, -1));
        for (std::size_t i = 0; i < k; ++i)
            for (int j = 0; j <= n[i]; ++j) rows.push_back(row_for(static_cast<int>(i), j));
    }
    if (rows.empty()) return 0;
    return rank_mod(rows, p);
}

}  // namespace oracle
