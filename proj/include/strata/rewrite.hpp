#pragma once

#include "strata/term.hpp"

#include <optional>
#include <string>
#include <vector>

namespace strata {

/// Labeled rewrite rule `label(x1..xn) : lhs => rhs`. The parameters are the
/// variables of lhs in first-occurrence order.
class Rule {
public:
    /// Throws InvalidRule when lhs is a variable or rhs has extra variables.
    Rule(std::string label, Term lhs, Term rhs);

    const std::string& label() const noexcept { return label_; }
    const std::vector<std::string>& params() const noexcept { return params_; }
    const Term& lhs() const noexcept { return lhs_; }
    const Term& rhs() const noexcept { return rhs_; }

    friend bool operator==(const Rule&, const Rule&) = default;

private:
    std::string label_;
    std::vector<std::string> params_;
    Term lhs_;
    Term rhs_;
};

/// Ordered rules with distinct labels. Order is significant for redex
/// enumeration and tie-breaking.
class RuleSet {
public:
    RuleSet() = default;
    RuleSet(std::initializer_list<Rule> rules);

    void add(Rule rule);
    const Rule* find(std::string_view label) const noexcept;
    const Rule& at(std::string_view label) const; // UnknownLabel
    /// Index in rule order, or size() when absent.
    std::size_t index_of(std::string_view label) const noexcept;

    const std::vector<Rule>& rules() const noexcept { return rules_; }
    std::size_t size() const noexcept { return rules_.size(); }
    auto begin() const noexcept { return rules_.begin(); }
    auto end() const noexcept { return rules_.end(); }

private:
    std::vector<Rule> rules_;
};

/// The annotation (p, ℓ, σ) of a rewrite step.
struct StepLabel {
    Position position;
    std::string rule;
    Substitution subst;

    friend bool operator==(const StepLabel&, const StepLabel&) = default;
    friend auto operator<=>(const StepLabel&, const StepLabel&) = default;
};

std::string to_string(const StepLabel& label);

/// t →(p,ℓ,σ) t′
struct RewriteStep {
    Term source;
    StepLabel label;
    Term target;

    friend bool operator==(const RewriteStep&, const RewriteStep&) = default;
};

/// Applies `rule` at position `p` of `t`. Returns nothing when the lhs does
/// not match there; throws InvalidPosition when p is not a position of t.
std::optional<RewriteStep> rewrite_at(const Term& t, const Rule& rule, const Position& p);

/// Every (p, ℓ, σ) for which rewrite_at succeeds, ordered by position
/// (pre-order) and then by rule order.
std::vector<StepLabel> all_redexes(const Term& t, const RuleSet& rs);

/// Revalidates a recorded label against `t`. Throws UnknownLabel or
/// StepMismatch.
RewriteStep apply_step(const Term& t, const StepLabel& label, const RuleSet& rs);

} // namespace strata
