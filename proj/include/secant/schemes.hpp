#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"

#include "secant/combinatorics.hpp"
#include "secant/linalg.hpp"

namespace secant {

// Homogeneous coordinates, one vector of length n_i + 1 per factor.
struct Point {
    std::vector<std::vector<Elem>> coords;
    bool operator==(const Point&) const = default;
};

// The first `codim` coordinates of factor `factor` (0-based) vanish.
struct Constraint {
    int factor = 0;
    int codim = 0;
    bool operator==(const Constraint&) const = default;
};

enum class ComponentKind { Double, Simple, FiberDouble };

struct SchemeComponent {
    ComponentKind kind = ComponentKind::Double;
    Point point;  // empty until sampled
    std::vector<Constraint> constraints;

    bool sampled() const { return !point.coords.empty(); }
    int forced_zeros(int factor) const;
};

// Formats here may be non-canonical: a_i = 0 and n_i = 0 are both legal,
// since residual schemes lower degrees and traces lower dimensions.
struct Scheme {
    Format fmt;
    std::vector<SchemeComponent> components;

    bool sampled() const;
};

const char* to_string(ComponentKind k);

std::uint64_t component_degree(const Format& fmt, ComponentKind k);
std::uint64_t degree(const Scheme& z);

void validate(const Scheme& z);

Scheme scheme_for(const Statement& st);

// Draws every unconstrained coordinate uniformly; the first free coordinate
// of each factor is fixed to 1 (affine chart).
Scheme sample(const Scheme& spec, const PrimeField& F, std::uint64_t seed);

// FNV-1a over every sampled coordinate, in component order.
std::uint64_t points_digest(const Scheme& z);

Scheme scheme_from_json(const nlohmann::json& j);
nlohmann::json to_json(const Scheme& z);

}  // namespace secant
