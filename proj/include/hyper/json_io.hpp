#pragma once

#include <json.hpp>

#include "hyper/algebra.hpp"
#include "hyper/spin.hpp"

namespace hyper {

inline void to_json(nlohmann::json& j, const HNumber& z) {
    j = nlohmann::json{{"x", z.x}, {"y", z.y}, {"v", z.v}, {"w", z.w}};
}

inline void from_json(const nlohmann::json& j, HNumber& z) {
    z = HNumber(j.at("x").get<double>(), j.at("y").get<double>(), j.at("v").get<double>(),
                j.at("w").get<double>());
}

/// AlgebraElement: array of 4 HNumber objects in basis order (1, s1, s2, s3).
inline void to_json(nlohmann::json& j, const AlgebraElement& a) {
    j = nlohmann::json::array({a.c[0], a.c[1], a.c[2], a.c[3]});
}

inline void from_json(const nlohmann::json& j, AlgebraElement& a) {
    for (std::size_t k = 0; k < 4; ++k) a.c[k] = j.at(k).get<HNumber>();
}

/// Paravector: [x0, x1, x2, x3].
inline void to_json(nlohmann::json& j, const Paravector& p) {
    j = nlohmann::json::array({p.x[0], p.x[1], p.x[2], p.x[3]});
}

inline void from_json(const nlohmann::json& j, Paravector& p) {
    p = Paravector(j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>(),
                   j.at(3).get<double>());
}

inline void to_json(nlohmann::json& j, const TransformParams& t) {
    j = nlohmann::json{{"kind", t.kind}, {"axis", t.axis}, {"param", t.param}};
}

inline void to_json(nlohmann::json& j, const SpinTransform& g) {
    if (g.params)
        to_json(j, *g.params);
    else
        j = nlohmann::json{{"kind", "element"}, {"element", g.g}};
}

} // namespace hyper
