#pragma once

// Term rewriting as an abstract reduction system: objects are terms, labels
// are (position, rule, substitution) triples.

#include "strata/ars.hpp"
#include "strata/rewrite.hpp"

#include <string>
#include <vector>

namespace strata {

class TermSystem {
public:
    using object_type = Term;
    using label_type = StepLabel;
    using step_type = RewriteStep;

    explicit TermSystem(RuleSet rules) : rules_(std::move(rules)) {}

    const RuleSet& rules() const noexcept { return rules_; }
    std::vector<StepLabel> labels_from(const Term& t) const { return all_redexes(t, rules_); }
    RewriteStep fire(const Term& t, const StepLabel& label) const { return apply_step(t, label, rules_); }

private:
    RuleSet rules_;
};

using Derivation = ars::Derivation<TermSystem>;
using TracedTerm = ars::TracedObject<TermSystem>;
using TermStrategy = ars::IntensionalStrategy<TermSystem>;

/// Redexes whose position has no other redex strictly below it. Several
/// incomparable positions, and several rules at one position, may be chosen.
std::vector<StepLabel> innermost_redexes(const Term& t, const RuleSet& rs);

TermStrategy innermost(const RuleSet& rs);
/// The innermost redex furthest to the right; among rules matching there,
/// the first in rule order. At most one step.
TermStrategy rightmost_innermost(const RuleSet& rs);
TermStrategy all_steps(const RuleSet& rs);

/// `<src> -[<pos>,<label>]-> <tgt>`
std::string format_step(const RewriteStep& step);
/// One line per step; an empty derivation is its source term alone.
std::string format_derivation_lines(const Derivation& d);
/// Single-line chained form `t0 -[p,l]-> t1 -[q,m]-> t2`.
std::string format_derivation(const Derivation& d);

} // namespace strata
