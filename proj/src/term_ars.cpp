#include "strata/term_ars.hpp"

#include <algorithm>

namespace strata {

std::vector<StepLabel> innermost_redexes(const Term& t, const RuleSet& rs) {
    auto redexes = all_redexes(t, rs);
    std::vector<StepLabel> out;
    for (const auto& l : redexes) {
        bool below = std::any_of(redexes.begin(), redexes.end(),
                                 [&](const StepLabel& other) { return l.position.is_strictly_above(other.position); });
        if (!below) out.push_back(l);
    }
    return out;
}

TermStrategy innermost(const RuleSet& rs) {
    return ars::memoryless<TermSystem>("innermost", [rs](const Term& t) { return innermost_redexes(t, rs); });
}

TermStrategy rightmost_innermost(const RuleSet& rs) {
    return ars::memoryless<TermSystem>("rightmost-innermost", [rs](const Term& t) {
        auto candidates = innermost_redexes(t, rs);
        std::vector<StepLabel> out;
        if (candidates.empty()) return out;
        // candidates are in (position, rule order) order
        const Position& rightmost =
            std::max_element(candidates.begin(), candidates.end(),
                             [](const StepLabel& a, const StepLabel& b) { return a.position < b.position; })
                ->position;
        auto first_rule = std::find_if(candidates.begin(), candidates.end(),
                                       [&](const StepLabel& l) { return l.position == rightmost; });
        out.push_back(*first_rule);
        return out;
    });
}

TermStrategy all_steps(const RuleSet& rs) { return ars::all_steps(TermSystem(rs)); }

std::string format_step(const RewriteStep& step) {
    return print_term(step.source) + " -[" + step.label.position.to_string() + "," + step.label.rule + "]-> " +
           print_term(step.target);
}

std::string format_derivation_lines(const Derivation& d) {
    if (d.empty()) return print_term(d.source()) + "\n";
    std::string out;
    for (const auto& s : d.steps()) out += format_step(s) + "\n";
    return out;
}

std::string format_derivation(const Derivation& d) {
    std::string out = print_term(d.source());
    for (const auto& s : d.steps())
        out += " -[" + s.label.position.to_string() + "," + s.label.rule + "]-> " + print_term(s.target);
    return out;
}

} // namespace strata
