#pragma once

// Brute-force reference computations. These deliberately avoid the library
// routines they are used to check (matching, extension, innermost selection).

#include "strata/rewrite.hpp"
#include "strata/term_ars.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

namespace strata::testing {

/// Independent instantiation: walks the term by hand.
inline Term instantiate(const std::map<std::string, Term>& bindings, const Term& t) {
    if (t.is_var()) {
        auto it = bindings.find(t.name());
        return it == bindings.end() ? t : it->second;
    }
    std::vector<Term> args;
    for (const auto& a : t.args()) args.push_back(instantiate(bindings, a));
    return Term::app(t.symbol(), std::move(args));
}

inline void all_subterms(const Term& t, std::vector<Term>& out) {
    if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
    for (const auto& a : t.args()) all_subterms(a, out);
}

/// Every assignment of the pattern's variables to subterms of the subject
/// that instantiates the pattern to the subject.
inline std::vector<std::map<std::string, Term>> brute_force_matches(const Term& pattern, const Term& subject) {
    std::vector<std::string> vars = variables(pattern);
    std::vector<Term> candidates;
    all_subterms(subject, candidates);
    std::vector<std::map<std::string, Term>> out;
    std::vector<std::size_t> idx(vars.size(), 0);
    for (;;) {
        std::map<std::string, Term> b;
        for (std::size_t i = 0; i < vars.size(); ++i) b.emplace(vars[i], candidates[idx[i]]);
        if (instantiate(b, pattern) == subject) out.push_back(b);
        std::size_t k = 0;
        while (k < idx.size() && ++idx[k] == candidates.size()) idx[k++] = 0;
        if (k == idx.size()) break;
    }
    return out;
}

/// Redexes by a double loop over positions × rules with rewrite_at.
inline std::vector<StepLabel> redex_scan(const Term& t, const RuleSet& rs) {
    std::vector<StepLabel> out;
    for (const auto& p : positions(t)) {
        for (const auto& r : rs) {
            if (auto step = rewrite_at(t, r, p)) out.push_back(step->label);
        }
    }
    return out;
}

/// Terms reachable in at most k steps (breadth-first closure of all_redexes).
inline std::set<Term> bfs_reachable(const Term& t, const RuleSet& rs, std::size_t k) {
    std::set<Term> seen{t};
    std::vector<Term> frontier{t};
    for (std::size_t i = 0; i < k; ++i) {
        std::vector<Term> next;
        for (const auto& u : frontier) {
            for (const auto& l : all_redexes(u, rs)) {
                Term v = apply_step(u, l, rs).target;
                if (seen.insert(v).second) next.push_back(v);
            }
        }
        frontier = std::move(next);
    }
    return seen;
}

/// The full derivation tree from t to depth n, built step by step with
/// all_redexes and rewrite_at.
inline std::set<Derivation> derivation_tree(const Term& t, const RuleSet& rs, std::size_t n) {
    std::set<Derivation> out{Derivation(t)};
    std::vector<Derivation> layer{Derivation(t)};
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Derivation> next;
        for (const auto& d : layer) {
            for (const auto& l : all_redexes(d.target(), rs)) {
                auto step = rewrite_at(d.target(), rs.at(l.rule), l.position);
                next.push_back(d.then(*step));
            }
        }
        for (const auto& d : next) out.insert(d);
        layer = std::move(next);
    }
    return out;
}

/// Pattern occurs at some position of t (match at every subterm).
inline bool occurs_scan(const Term& g, const Term& t) {
    for (const auto& p : positions(t)) {
        if (!brute_force_matches(g, subterm_at(t, p)).empty()) return true;
    }
    return false;
}

} // namespace strata::testing
