#pragma once

#include <json.hpp>

#include "dq/curves.hpp"
#include "dq/quadruples.hpp"

// JSON forms (documented in docs/formats.md): rationals cross as exact
// strings "p/s" (integers as "p"); curve points as {"T","W"} / {"inf":true};
// product-curve points as {"x","y"}.

namespace dq {

inline void to_json(nlohmann::json& j, const Rational& r) { j = r.str(); }
inline void from_json(const nlohmann::json& j, Rational& r) {
    r = Rational::parse(j.get<std::string>());
}

inline void to_json(nlohmann::json& j, const DPoint& p) {
    j = nlohmann::json{{"x", p.x}, {"y", p.y}};
}
inline void from_json(const nlohmann::json& j, DPoint& p) {
    j.at("x").get_to(p.x);
    j.at("y").get_to(p.y);
}

inline void to_json(nlohmann::json& j, const EPoint& p) {
    if (p.inf)
        j = nlohmann::json{{"inf", true}};
    else
        j = nlohmann::json{{"T", p.T}, {"W", p.W}};
}
inline void from_json(const nlohmann::json& j, EPoint& p) {
    if (j.contains("inf") && j.at("inf").get<bool>()) {
        p = EPoint{};
        return;
    }
    Rational t, w;
    j.at("T").get_to(t);
    j.at("W").get_to(w);
    p = EPoint{t, w};
}

inline void to_json(nlohmann::json& j, const Quadruple& q) {
    j = nlohmann::json{{"q", q.q}, {"a", q.a}, {"b", q.b}, {"c", q.c}, {"d", q.d}};
}
inline void from_json(const nlohmann::json& j, Quadruple& q) {
    j.at("q").get_to(q.q);
    j.at("a").get_to(q.a);
    j.at("b").get_to(q.b);
    j.at("c").get_to(q.c);
    j.at("d").get_to(q.d);
}

inline void to_json(nlohmann::json& j, const Certificate& c) {
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& r : c.roots) {
        if (r)
            roots.push_back(*r);
        else
            roots.push_back(nullptr);
    }
    j = nlohmann::json{{"q", c.q},
                       {"a", c.entries[0]},
                       {"b", c.entries[1]},
                       {"c", c.entries[2]},
                       {"d", c.entries[3]},
                       {"roots", std::move(roots)},
                       {"distinct_nonzero", c.distinct_nonzero},
                       {"pass", c.pass}};
}

inline void to_json(nlohmann::json& j, const AdmissibilityVerdict& v) {
    j = nlohmann::json{
        {"status", v.status == Admissibility::Exists ? "exists" : "none_among_supplied"},
        {"coset_reps_checked", v.coset_reps_checked},
        {"unresolved", v.unresolved}};
    if (v.witness)
        j["witness"] = *v.witness;
    else
        j["witness"] = nullptr;
}

}  // namespace dq
