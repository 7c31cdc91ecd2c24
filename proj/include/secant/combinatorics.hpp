#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace secant {

using BigInt = boost::multiprecision::cpp_int;

// Factor dimensions n_i and degrees a_i. An empty format is the point
// P^0 and is only produced internally by dropping every factor.
struct Format {
    std::vector<int> n;
    std::vector<int> a;

    int k() const { return static_cast<int>(n.size()); }
    int sum_n() const;
    bool operator==(const Format&) const = default;
};

// T(n;a;s) when t = v = 0, otherwise S(n;a;s;t;v).
struct Statement {
    Format fmt;
    std::int64_t s = 0;
    std::int64_t t = 0;
    std::int64_t v = 0;
    // Remember whether the source spelled the statement as S(...), so
    // printing round-trips even for S(n;a;s;0;0).
    bool spelled_s = false;

    bool is_t() const { return t == 0 && v == 0; }
    bool operator==(const Statement& o) const {
        return fmt == o.fmt && s == o.s && t == o.t && v == o.v;
    }
};

enum class Abundancy { Sub, Super, Equi };

struct HoraceParams {
    std::int64_t sPrime = 0;
    std::int64_t epsilon = 0;
    BigInt nR;
    BigInt nT;
    BigInt dividend;  // s(1+sum n) - N_R
};

class InvalidStatement : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, std::size_t pos);
    std::size_t position() const { return pos_; }

private:
    std::size_t pos_;
};

class NegativeDividend : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

BigInt binom(std::uint64_t n, std::uint64_t k);

// Formats with every n_i >= 1 and a_i >= 1 (the empty format included).
bool is_canonical_format(const Format& fmt);

BigInt ambient_dim(const Format& fmt);
BigInt scheme_degree(const Statement& st);
BigInt expected_value(const Statement& st);
Abundancy abundancy(const Statement& st);
bool is_sub(Abundancy a);
bool is_super(Abundancy a);
const char* to_string(Abundancy a);

HoraceParams horace_params(const Statement& st);

std::pair<BigInt, BigInt> s_bounds(const Format& fmt);

Statement canonicalize(const Statement& st);
bool is_canonical(const Statement& st);

// Open interval of defective s for an unbalanced format with a_k = 1,
// returned as the closed integer range [lo, hi].
std::optional<std::pair<BigInt, BigInt>> unbalanced_range(const Format& fmt);

Statement parse_statement(std::string_view text);
std::string to_string(const Statement& st);
std::string to_string(const Format& fmt);

std::int64_t to_int64(const BigInt& x);

}  // namespace secant
