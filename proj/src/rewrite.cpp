#include "strata/rewrite.hpp"

#include "strata/error.hpp"

#include <algorithm>

namespace strata {

Rule::Rule(std::string label, Term lhs, Term rhs)
    : label_(std::move(label)), lhs_(std::move(lhs)), rhs_(std::move(rhs)) {
    if (!is_identifier(label_)) throw InvalidRule("invalid rule label '" + label_ + "'");
    if (lhs_.is_var()) throw InvalidRule("rule '" + label_ + "': left-hand side is a bare variable");
    params_ = variables(lhs_);
    for (const auto& v : variables(rhs_)) {
        if (std::find(params_.begin(), params_.end(), v) == params_.end())
            throw InvalidRule("rule '" + label_ + "': variable '" + v + "' occurs only on the right-hand side");
    }
}

RuleSet::RuleSet(std::initializer_list<Rule> rules) {
    for (const auto& r : rules) add(r);
}

void RuleSet::add(Rule rule) {
    if (find(rule.label())) throw InvalidRule("duplicate rule label '" + rule.label() + "'");
    rules_.push_back(std::move(rule));
}

const Rule* RuleSet::find(std::string_view label) const noexcept {
    for (const auto& r : rules_) {
        if (r.label() == label) return &r;
    }
    return nullptr;
}

const Rule& RuleSet::at(std::string_view label) const {
    const Rule* r = find(label);
    if (!r) throw UnknownLabel("unknown rule label '" + std::string(label) + "'");
    return *r;
}

std::size_t RuleSet::index_of(std::string_view label) const noexcept {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
        if (rules_[i].label() == label) return i;
    }
    return rules_.size();
}

std::string to_string(const StepLabel& label) {
    return "(" + label.position.to_string() + ", " + label.rule + ", " + label.subst.to_string() + ")";
}

std::optional<RewriteStep> rewrite_at(const Term& t, const Rule& rule, const Position& p) {
    const Term& redex = subterm_at(t, p);
    auto sigma = match(rule.lhs(), redex);
    if (!sigma) return std::nullopt;
    Term target = replace_at(t, p, apply_subst(*sigma, rule.rhs()));
    return RewriteStep{t, StepLabel{p, rule.label(), std::move(*sigma)}, std::move(target)};
}

std::vector<StepLabel> all_redexes(const Term& t, const RuleSet& rs) {
    std::vector<StepLabel> out;
    for (const auto& p : positions(t)) {
        const Term& redex = subterm_at(t, p);
        if (redex.is_var()) continue;
        for (const auto& rule : rs) {
            if (auto sigma = match(rule.lhs(), redex)) out.push_back(StepLabel{p, rule.label(), std::move(*sigma)});
        }
    }
    return out;
}

RewriteStep apply_step(const Term& t, const StepLabel& label, const RuleSet& rs) {
    const Rule& rule = rs.at(label.rule);
    if (!is_valid_position(t, label.position))
        throw StepMismatch("step " + to_string(label) + ": position not valid in " + print_term(t));
    auto step = rewrite_at(t, rule, label.position);
    if (!step) throw StepMismatch("step " + to_string(label) + ": rule does not match in " + print_term(t));
    if (step->label.subst != label.subst) {
        throw StepMismatch("step " + to_string(label) + ": recorded substitution disagrees with match " +
                           step->label.subst.to_string());
    }
    return std::move(*step);
}

} // namespace strata
