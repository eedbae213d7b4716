#pragma once

#include "walg/miura.hpp"
#include "walg/wgen.hpp"

#include "json.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace walg {

using Json = nlohmann::ordered_json;

inline Json to_json(const LieAlgebraSpec& spec, const DiffPoly& p)
{
    Json monomials = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json vars = Json::array();
        for (const auto& f : m)
            vars.push_back({{"gen", spec.name_of(f.var.gen)}, {"der", f.var.der}, {"pow", f.pow}});
        monomials.push_back({{"coeff", to_fraction_string(c)}, {"vars", std::move(vars)}});
    }
    return {{"monomials", std::move(monomials)}};
}

inline Json to_json(const LieAlgebraSpec& spec, const LambdaPoly& q)
{
    Json coeffs = Json::object();
    for (const auto& [k, c] : q.coeffs())
        coeffs[std::to_string(k)] = to_json(spec, c);
    return {{"lambda_coeffs", std::move(coeffs)}};
}

// Coefficients of d^k keyed by k, highest first.
inline Json to_json(const LieAlgebraSpec& spec, const OpSeries& op)
{
    Json coeffs = Json::object();
    for (auto it = op.coeffs().rbegin(); it != op.coeffs().rend(); ++it)
        coeffs[std::to_string(it->first)] = to_json(spec, it->second);
    Json out = {{"d_coeffs", std::move(coeffs)}};
    out["floor"] = op.floor() ? Json(*op.floor()) : Json(nullptr);
    return out;
}

inline Json to_json(const LieAlgebraSpec& spec, const GeneratorSet& gs)
{
    Json w = Json::object();
    for (const auto& [k, p] : gs.w)
        w[std::to_string(k)] = to_json(spec, p);
    Json out = {{"kind", std::string(kind_name(gs.kind))}, {"rank", gs.rank}, {"w", std::move(w)}};
    out["y"] = gs.y ? to_json(spec, *gs.y) : Json(nullptr);
    out["designated"] = gs.designated;
    if (gs.kind == Kind::D)
        out["y_designated"] = gs.y_designated;
    return out;
}

inline Json to_json(const LieAlgebraSpec& spec, const MembershipCertificate& cert)
{
    Json entries = Json::array();
    for (const auto& e : cert.entries)
        entries.push_back({{"x", spec.name_of(e.x)}, {"value", to_json(spec, e.value)}});
    return {{"member", cert.member}, {"entries", std::move(entries)}};
}

// Resolves a generator name to a basis position and sign; B and D names of the
// form F[i,i'] resolve to nothing because the element is zero.
inline std::optional<std::pair<std::size_t, Rational>> resolve_generator(const LieAlgebraSpec& spec,
                                                                          const std::string& name)
{
    const GeneratorId g = parse_generator_name(name);
    if (g.family == Family::F) {
        const LieElement x = element(spec, g.i, g.j);
        if (x.is_zero())
            return std::nullopt;
        const auto& [pos, c] = *x.terms().begin();
        return std::pair{pos, c};
    }
    return std::pair{spec.index_of(g), Rational(1)};
}

inline DiffPoly diffpoly_from_json(const LieAlgebraSpec& spec, const Json& j)
{
    if (!j.is_object() || !j.contains("monomials") || !j.at("monomials").is_array())
        throw std::invalid_argument("polynomial JSON needs a \"monomials\" array");
    DiffPoly p;
    for (const auto& mono : j.at("monomials")) {
        DiffPoly term(parse_rational(mono.at("coeff").get<std::string>()));
        for (const auto& v : mono.at("vars")) {
            const auto gen = resolve_generator(spec, v.at("gen").get<std::string>());
            const auto der = v.value("der", 0u);
            const auto pow = v.value("pow", 1u);
            if (pow == 0)
                throw std::invalid_argument("polynomial JSON: zero power");
            if (!gen) {
                term = DiffPoly();
                break;
            }
            const DiffPoly x = DiffPoly::variable(gen->first, der, gen->second);
            for (unsigned k = 0; k < pow; ++k)
                term = term * x;
        }
        p += term;
    }
    return p;
}

// Reads the "w" map and "y" of a GeneratorSet document; other fields are ignored.
inline GeneratorSet generator_set_from_json(const LieAlgebraSpec& spec, const Json& j)
{
    GeneratorSet gs;
    gs.kind = spec.kind;
    gs.rank = spec.rank;
    if (!j.contains("w") || !j.at("w").is_object())
        throw std::invalid_argument("generator JSON needs a \"w\" object");
    for (const auto& [key, value] : j.at("w").items())
        gs.w.emplace(std::stoi(key), diffpoly_from_json(spec, value));
    if (j.contains("y") && !j.at("y").is_null())
        gs.y = diffpoly_from_json(spec, j.at("y"));
    return gs;
}

}  // namespace walg
