#pragma once

// Standing test theories.

#include "strata/theory.hpp"

#include <string>

namespace strata::testing {

// r1: a ⇒ b; r2: g(x) ⇒ x; r3: f(x) ⇒ g(x); p0: plus(0,y) ⇒ y;
// ps: plus(s(x),y) ⇒ s(plus(x,y)). h/2 gives incomparable positions.
inline const char* const kRexText = R"(
sig a/0 b/0 0/0 f/1 g/1 s/1 plus/2 h/2
rule r1 : a => b
rule r2 : g(x) => x
rule r3 : f(x) => g(x)
rule p0 : plus(0, y) => y
rule ps : plus(s(x), y) => s(plus(x, y))
)";

inline const Theory& rex() {
    static const Theory theory = parse_theory(kRexText);
    return theory;
}

/// The REX symbols used for exhaustive enumeration (h excluded).
inline std::vector<Symbol> rex_enumeration_symbols() {
    return {{"a", 0}, {"b", 0}, {"0", 0}, {"f", 1}, {"g", 1}, {"s", 1}, {"plus", 2}};
}

inline std::vector<Symbol> rex_random_symbols() {
    return {{"a", 0}, {"b", 0}, {"0", 0}, {"f", 1}, {"g", 1}, {"s", 1}, {"plus", 2}, {"h", 2}};
}

inline Term T(std::string_view text) { return rex().term(text); }

/// Four-object chain a → b → c → d.
inline const char* const kChainText = R"(
sig a/0 b/0 c/0 d/0
rule c1 : a => b
rule c2 : b => c
rule c3 : c => d
)";

inline const Theory& chain() {
    static const Theory theory = parse_theory(kChainText);
    return theory;
}

} // namespace strata::testing
