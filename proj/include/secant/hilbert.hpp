#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "secant/combinatorics.hpp"
#include "secant/linalg.hpp"
#include "secant/schemes.hpp"

namespace secant {

// Monomials of multidegree a. Within a factor, exponent vectors run in
// lexicographic order with x_0^a first; the global index is mixed radix
// with factor 1 most significant.
struct MonomialBasis {
    Format fmt;
    std::vector<std::vector<std::vector<int>>> factor_monomials;

    std::size_t size() const;
    std::vector<std::vector<int>> monomial(std::size_t index) const;
};

MonomialBasis monomial_basis(const Format& fmt);

std::vector<std::vector<Elem>> condition_rows(const SchemeComponent& c, const MonomialBasis& basis,
                                              const PrimeField& F);

std::size_t hilbert_value(const Scheme& z, const PrimeField& F, std::uint64_t seed = 0);

enum class VerdictKind { CertifiedTrue, ProbablyDefective, Inconclusive };

struct Verdict {
    VerdictKind kind = VerdictKind::Inconclusive;
    BigInt expected;
    std::uint64_t observed = 0;
    std::uint64_t deficit = 0;
    std::uint32_t prime = 0;
    std::uint64_t seed = 0;    // seed of the certifying (or best) trial
    std::uint64_t digest = 0;  // points_digest of that trial
    std::string note;
};

struct VerifyOptions {
    std::uint64_t prime = PrimeField::kMersenne31;
    int trials = 3;
    std::uint64_t seed = 42;
    // Above this many columns the matrix is not built and the verdict is
    // Inconclusive.
    std::uint64_t max_columns = 1u << 22;
};

Verdict verify(const Statement& st, const VerifyOptions& opt = {});

// verify(T(fmt; s)) for s = 1..s_max in one streamed pass per trial. The
// s-point sample is a prefix of the s_max-point sample, so element s-1 is
// identical to the single-statement verdict.
std::vector<Verdict> verify_prefixes(const Format& fmt, std::int64_t s_max, const VerifyOptions& opt = {});

const char* to_string(VerdictKind k);

// Residual and trace with respect to H = {x_{0,1} = 0}. A component lies on
// H when its first-factor constraint has codim >= 1.
Scheme residual(const Scheme& z);
Scheme trace(const Scheme& z);

// h(Z,a) + u <= h(Z~,a') + C(n_1-1+a_1, n_1-1) prod_{i>=2} C(n_i+a_i, a_i)
bool chandler_holds(const BigInt& h_z, const BigInt& u, const BigInt& h_res, const Format& fmt);
BigInt chandler_bound(const BigInt& h_res, const Format& fmt);

}  // namespace secant
