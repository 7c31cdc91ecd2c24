#include "secant/hilbert.hpp"

#include <algorithm>

namespace secant {

namespace {

void monomials_rec(int vars, int deg, std::vector<int>& cur, int pos, std::vector<std::vector<int>>& out) {
    if (pos == vars - 1) {
        cur[pos] = deg;
        out.push_back(cur);
        return;
    }
    for (int e = deg; e >= 0; --e) {
        cur[pos] = e;
        monomials_rec(vars, deg - e, cur, pos + 1, out);
    }
}

std::vector<std::vector<int>> factor_monomials(int n, int a) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(n + 1, 0);
    monomials_rec(n + 1, a, cur, 0, out);
    return out;
}

// powers[j][e] = x_j^e
std::vector<std::vector<Elem>> power_table(const std::vector<Elem>& x, int a, const PrimeField& F) {
    std::vector<std::vector<Elem>> pw(x.size(), std::vector<Elem>(a + 1, 1));
    for (std::size_t j = 0; j < x.size(); ++j)
        for (int e = 1; e <= a; ++e) pw[j][e] = F.mul(pw[j][e - 1], x[j]);
    return pw;
}

struct FactorVectors {
    std::vector<Elem> eval;
    std::vector<std::vector<Elem>> deriv;  // one per coordinate x_j
};

FactorVectors factor_vectors(const std::vector<std::vector<int>>& mons, const std::vector<Elem>& x, int a,
                             const PrimeField& F) {
    auto pw = power_table(x, a, F);
    FactorVectors fv;
    std::size_t m = mons.size(), vars = x.size();
    fv.eval.assign(m, 1);
    fv.deriv.assign(vars, std::vector<Elem>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        const auto& e = mons[i];
        Elem val = 1;
        for (std::size_t j = 0; j < vars; ++j) val = F.mul(val, pw[j][e[j]]);
        fv.eval[i] = val;
        for (std::size_t d = 0; d < vars; ++d) {
            if (e[d] == 0) continue;
            Elem g = F.from_int(e[d]);
            for (std::size_t j = 0; j < vars; ++j) g = F.mul(g, pw[j][e[j] - (j == d ? 1 : 0)]);
            fv.deriv[d][i] = g;
        }
    }
    return fv;
}

std::vector<Elem> kron(const std::vector<const std::vector<Elem>*>& parts, const PrimeField& F) {
    std::vector<Elem> out{1};
    for (const auto* v : parts) {
        std::vector<Elem> next(out.size() * v->size());
        std::size_t w = v->size();
        for (std::size_t i = 0; i < out.size(); ++i) {
            Elem o = out[i];
            Elem* dst = next.data() + i * w;
            if (o == 0) continue;
            for (std::size_t j = 0; j < w; ++j) dst[j] = F.mul(o, (*v)[j]);
        }
        out.swap(next);
    }
    return out;
}

bool all_zero(const std::vector<Elem>& v) {
    return std::all_of(v.begin(), v.end(), [](Elem e) { return e == 0; });
}

}  // namespace

std::size_t MonomialBasis::size() const {
    std::size_t N = 1;
    for (const auto& f : factor_monomials) N *= f.size();
    return N;
}

std::vector<std::vector<int>> MonomialBasis::monomial(std::size_t index) const {
    std::vector<std::vector<int>> out(factor_monomials.size());
    for (std::size_t i = factor_monomials.size(); i-- > 0;) {
        std::size_t m = factor_monomials[i].size();
        out[i] = factor_monomials[i][index % m];
        index /= m;
    }
    return out;
}

MonomialBasis monomial_basis(const Format& fmt) {
    MonomialBasis b;
    b.fmt = fmt;
    for (int i = 0; i < fmt.k(); ++i) b.factor_monomials.push_back(factor_monomials(fmt.n[i], fmt.a[i]));
    return b;
}

std::vector<std::vector<Elem>> condition_rows(const SchemeComponent& c, const MonomialBasis& basis,
                                              const PrimeField& F) {
    if (!c.sampled()) throw std::invalid_argument("condition_rows: component not sampled");
    const Format& f = basis.fmt;
    const int k = f.k();
    std::vector<FactorVectors> fv;
    fv.reserve(k);
    for (int i = 0; i < k; ++i) fv.push_back(factor_vectors(basis.factor_monomials[i], c.point.coords[i], f.a[i], F));

    std::vector<const std::vector<Elem>*> parts(k);
    for (int i = 0; i < k; ++i) parts[i] = &fv[i].eval;

    std::vector<std::vector<Elem>> rows;
    auto derivative_rows = [&](int i) {
        for (const auto& d : fv[i].deriv) {
            if (all_zero(d)) continue;
            parts[i] = &d;
            rows.push_back(kron(parts, F));
            parts[i] = &fv[i].eval;
        }
    };
    // Euler recovers the evaluation row from the derivatives of any factor
    // with a_i >= 1; otherwise it is added explicitly.
    switch (c.kind) {
        case ComponentKind::Simple:
            rows.push_back(kron(parts, F));
            break;
        case ComponentKind::Double: {
            bool euler = false;
            for (int i = 0; i < k; ++i) {
                derivative_rows(i);
                euler = euler || f.a[i] >= 1;
            }
            if (!euler) rows.push_back(kron(parts, F));
            break;
        }
        case ComponentKind::FiberDouble:
            derivative_rows(0);
            if (f.a[0] == 0) rows.push_back(kron(parts, F));
            break;
    }
    return rows;
}

namespace {

std::size_t rank_of(const Scheme& z, const PrimeField& F, std::size_t stop_at) {
    MonomialBasis basis = monomial_basis(z.fmt);
    RowBasis rb(basis.size(), F);
    for (const auto& c : z.components) {
        for (auto& r : condition_rows(c, basis, F)) {
            rb.add(std::move(r));
            if (rb.full() || rb.rank() >= stop_at) return rb.rank();
        }
    }
    return rb.rank();
}

}  // namespace

std::size_t hilbert_value(const Scheme& z, const PrimeField& F, std::uint64_t seed) {
    validate(z);
    if (z.sampled()) return rank_of(z, F, SIZE_MAX);
    return rank_of(sample(z, F, seed), F, SIZE_MAX);
}

const char* to_string(VerdictKind k) {
    switch (k) {
        case VerdictKind::CertifiedTrue: return "certified_true";
        case VerdictKind::ProbablyDefective: return "probably_defective";
        case VerdictKind::Inconclusive: return "inconclusive";
    }
    return "?";
}

Verdict verify(const Statement& st, const VerifyOptions& opt) {
    PrimeField F(opt.prime);
    Verdict v;
    v.prime = F.p();
    v.seed = opt.seed;
    v.expected = expected_value(st);
    BigInt N = ambient_dim(st.fmt);
    if (N > opt.max_columns) {
        v.kind = VerdictKind::Inconclusive;
        v.note = "matrix too large";
        return v;
    }
    if (opt.trials < 1) throw std::invalid_argument("verify: trials must be >= 1");
    std::size_t target = v.expected.convert_to<std::size_t>();
    Scheme spec = scheme_for(st);
    bool first = true;
    for (int t = 0; t < opt.trials; ++t) {
        std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(t);
        Scheme z = sample(spec, F, seed);
        std::size_t r = rank_of(z, F, target);
        if (first || r > v.observed) {
            v.observed = r;
            v.seed = seed;
            v.digest = points_digest(z);
            first = false;
        }
        if (r == target) {
            v.kind = VerdictKind::CertifiedTrue;
            v.deficit = 0;
            return v;
        }
    }
    v.kind = VerdictKind::ProbablyDefective;
    v.deficit = target - v.observed;
    return v;
}

std::vector<Verdict> verify_prefixes(const Format& fmt, std::int64_t s_max, const VerifyOptions& opt) {
    if (s_max < 1) return {};
    if (opt.trials < 1) throw std::invalid_argument("verify: trials must be >= 1");
    PrimeField F(opt.prime);
    BigInt N = ambient_dim(fmt);
    std::vector<Verdict> out(static_cast<std::size_t>(s_max));
    std::vector<std::size_t> target(out.size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        Statement st{fmt, static_cast<std::int64_t>(i + 1)};
        out[i].prime = F.p();
        out[i].seed = opt.seed;
        out[i].expected = expected_value(st);
        if (N > opt.max_columns) {
            out[i].kind = VerdictKind::Inconclusive;
            out[i].note = "matrix too large";
        } else {
            target[i] = out[i].expected.convert_to<std::size_t>();
        }
    }
    if (N > opt.max_columns) return out;

    MonomialBasis basis = monomial_basis(fmt);
    Scheme spec = scheme_for(Statement{fmt, s_max});
    std::vector<bool> done(out.size(), false);
    for (int t = 0; t < opt.trials; ++t) {
        std::size_t end = out.size();
        while (end > 0 && done[end - 1]) --end;
        if (end == 0) break;
        std::uint64_t seed = opt.seed + static_cast<std::uint64_t>(t);
        Scheme z = sample(spec, F, seed);
        RowBasis rb(basis.size(), F);
        for (std::size_t i = 0; i < end; ++i) {
            for (auto& r : condition_rows(z.components[i], basis, F)) {
                if (rb.full()) break;
                rb.add(std::move(r));
            }
            if (done[i]) continue;
            Verdict& v = out[i];
            std::size_t r = std::min(rb.rank(), target[i]);
            if (t == 0 || r > v.observed) {
                v.observed = r;
                v.seed = seed;
                v.digest = points_digest(Scheme{fmt, {z.components.begin(), z.components.begin() + i + 1}});
            }
            if (r == target[i]) {
                v.kind = VerdictKind::CertifiedTrue;
                v.deficit = 0;
                done[i] = true;
            } else {
                v.kind = VerdictKind::ProbablyDefective;
                v.deficit = target[i] - v.observed;
            }
        }
    }
    return out;
}

Scheme residual(const Scheme& z) {
    if (z.fmt.k() < 1 || z.fmt.a[0] < 1) throw std::invalid_argument("residual: a_1 >= 1 required");
    Scheme r;
    r.fmt = z.fmt;
    r.fmt.a[0] -= 1;
    for (const auto& c : z.components) {
        bool on_h = c.forced_zeros(0) >= 1;
        if (!on_h) {
            r.components.push_back(c);
            continue;
        }
        if (c.kind == ComponentKind::Simple) continue;
        SchemeComponent s = c;
        s.kind = ComponentKind::Simple;
        r.components.push_back(std::move(s));
    }
    return r;
}

Scheme trace(const Scheme& z) {
    if (z.fmt.k() < 1 || z.fmt.n[0] < 1) throw std::invalid_argument("trace: n_1 >= 1 required");
    Scheme t;
    t.fmt = z.fmt;
    t.fmt.n[0] -= 1;
    for (const auto& c : z.components) {
        if (c.forced_zeros(0) < 1) continue;
        SchemeComponent s;
        s.kind = c.kind;
        for (auto con : c.constraints) {
            if (con.factor == 0) {
                if (--con.codim == 0) continue;
            }
            s.constraints.push_back(con);
        }
        if (c.sampled()) {
            s.point = c.point;
            s.point.coords[0].erase(s.point.coords[0].begin());
        }
        t.components.push_back(std::move(s));
    }
    return t;
}

BigInt chandler_bound(const BigInt& h_res, const Format& fmt) {
    BigInt b = binom(fmt.n[0] - 1 + fmt.a[0], fmt.n[0] - 1);
    for (int i = 1; i < fmt.k(); ++i) b *= binom(fmt.n[i] + fmt.a[i], fmt.a[i]);
    return h_res + b;
}

bool chandler_holds(const BigInt& h_z, const BigInt& u, const BigInt& h_res, const Format& fmt) {
    return h_z + u <= chandler_bound(h_res, fmt);
}

}  // namespace secant
