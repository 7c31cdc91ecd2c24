#include "secant/schemes.hpp"

#include <random>
#include <stdexcept>

namespace secant {

int SchemeComponent::forced_zeros(int factor) const {
    int z = 0;
    for (const auto& c : constraints)
        if (c.factor == factor) z = std::max(z, c.codim);
    return z;
}

bool Scheme::sampled() const {
    for (const auto& c : components)
        if (!c.sampled()) return false;
    return true;
}

const char* to_string(ComponentKind k) {
    switch (k) {
        case ComponentKind::Double: return "double";
        case ComponentKind::Simple: return "simple";
        case ComponentKind::FiberDouble: return "fiber";
    }
    return "?";
}

std::uint64_t component_degree(const Format& fmt, ComponentKind k) {
    switch (k) {
        case ComponentKind::Double: return 1 + fmt.sum_n();
        case ComponentKind::Simple: return 1;
        case ComponentKind::FiberDouble: return fmt.n.at(0) + 1;
    }
    return 0;
}

std::uint64_t degree(const Scheme& z) {
    std::uint64_t d = 0;
    for (const auto& c : z.components) d += component_degree(z.fmt, c.kind);
    return d;
}

void validate(const Scheme& z) {
    const Format& f = z.fmt;
    if (f.n.size() != f.a.size()) throw InvalidStatement("scheme: n and a differ in length");
    for (int i = 0; i < f.k(); ++i)
        if (f.n[i] < 0 || f.a[i] < 0) throw InvalidStatement("scheme: negative n_i or a_i");
    for (const auto& c : z.components) {
        if (c.kind == ComponentKind::FiberDouble && (f.k() == 0 || f.a[0] > 1))
            throw InvalidStatement("scheme: fiber-double point needs a_1 = 1");
        for (const auto& con : c.constraints) {
            if (con.factor < 0 || con.factor >= f.k())
                throw InvalidStatement("scheme: constraint on a missing factor");
            if (con.codim < 0 || con.codim > f.n[con.factor])
                throw InvalidStatement("scheme: constraint codim out of range");
        }
        if (c.sampled()) {
            if (static_cast<int>(c.point.coords.size()) != f.k())
                throw InvalidStatement("scheme: point has wrong factor count");
            for (int i = 0; i < f.k(); ++i)
                if (static_cast<int>(c.point.coords[i].size()) != f.n[i] + 1)
                    throw InvalidStatement("scheme: point factor has wrong length");
        }
    }
}

Scheme scheme_for(const Statement& st) {
    Scheme z;
    z.fmt = st.fmt;
    auto push = [&](ComponentKind k, std::int64_t count) {
        for (std::int64_t i = 0; i < count; ++i) z.components.push_back({k, {}, {}});
    };
    push(ComponentKind::Double, st.s);
    push(ComponentKind::Simple, st.t);
    push(ComponentKind::FiberDouble, st.v);
    return z;
}

Scheme sample(const Scheme& spec, const PrimeField& F, std::uint64_t seed) {
    validate(spec);
    std::mt19937_64 gen(seed);
    std::uniform_int_distribution<std::uint32_t> uni(0, F.p() - 1);
    Scheme z = spec;
    for (auto& c : z.components) {
        c.point.coords.assign(z.fmt.k(), {});
        for (int i = 0; i < z.fmt.k(); ++i) {
            auto& v = c.point.coords[i];
            v.assign(z.fmt.n[i] + 1, 0);
            int zeros = c.forced_zeros(i);
            v[zeros] = 1;
            for (int j = zeros + 1; j <= z.fmt.n[i]; ++j) v[j] = uni(gen);
        }
    }
    return z;
}

std::uint64_t points_digest(const Scheme& z) {
    std::uint64_t h = 1469598103934665603ull;
    auto mix = [&](std::uint64_t x) {
        for (int b = 0; b < 8; ++b) {
            h ^= (x >> (8 * b)) & 0xff;
            h *= 1099511628211ull;
        }
    };
    for (const auto& c : z.components)
        for (const auto& v : c.point.coords)
            for (Elem e : v) mix(e);
    return h;
}

namespace {

ComponentKind kind_from(const std::string& s) {
    if (s == "double") return ComponentKind::Double;
    if (s == "simple") return ComponentKind::Simple;
    if (s == "fiber") return ComponentKind::FiberDouble;
    throw InvalidStatement("scheme: unknown component kind '" + s + "'");
}

}  // namespace

Scheme scheme_from_json(const nlohmann::json& j) {
    Scheme z;
    z.fmt.n = j.at("n").get<std::vector<int>>();
    z.fmt.a = j.at("a").get<std::vector<int>>();
    for (const auto& cj : j.value("components", nlohmann::json::array())) {
        SchemeComponent c;
        c.kind = kind_from(cj.value("kind", "double"));
        int count = cj.value("count", 1);
        for (const auto& k : cj.value("constraints", nlohmann::json::array()))
            c.constraints.push_back({k.at("factor").get<int>() - 1, k.value("codim", 1)});
        if (cj.contains("point")) c.point.coords = cj["point"].get<std::vector<std::vector<Elem>>>();
        for (int i = 0; i < count; ++i) z.components.push_back(c);
    }
    validate(z);
    return z;
}

nlohmann::json to_json(const Scheme& z) {
    nlohmann::json j;
    j["n"] = z.fmt.n;
    j["a"] = z.fmt.a;
    j["components"] = nlohmann::json::array();
    for (const auto& c : z.components) {
        nlohmann::json cj;
        cj["kind"] = to_string(c.kind);
        nlohmann::json cons = nlohmann::json::array();
        for (const auto& k : c.constraints) cons.push_back({{"factor", k.factor + 1}, {"codim", k.codim}});
        cj["constraints"] = cons;
        if (c.sampled()) cj["point"] = c.point.coords;
        j["components"].push_back(cj);
    }
    return j;
}

}  // namespace secant
