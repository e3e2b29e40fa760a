#include "strata/serialize.hpp"

namespace strata {

nlohmann::json step_to_json(const RewriteStep& step) {
    nlohmann::json subst = nlohmann::json::object();
    for (const auto& [var, value] : step.label.subst) subst[var] = print_term(value);
    nlohmann::json out = nlohmann::json::object();
    out["source"] = print_term(step.source);
    out["position"] = step.label.position.path();
    out["rule"] = step.label.rule;
    out["subst"] = std::move(subst);
    out["target"] = print_term(step.target);
    return out;
}

nlohmann::json derivation_to_json(const Derivation& d) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& s : d.steps()) out.push_back(step_to_json(s));
    return out;
}

} // namespace strata
