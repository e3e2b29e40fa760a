#pragma once

#include "strata/rewrite.hpp"
#include "strata/strategy.hpp"

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

/// Signature, rules and named strategies read from one file. Line formats:
///
///     sig <name>/<arity> ...
///     rule <label> : <term> => <term>
///     strat <name> = <strategy>
///
/// `#` starts a comment. Declarations may only refer to earlier ones.
struct Theory {
    Signature signature;
    RuleSet rules;
    std::map<std::string, StrategyExpr, std::less<>> strategies;
    std::vector<std::string> strategy_names; // declaration order

    Term term(std::string_view text) const { return parse_term(text, signature); }
    StrategyExpr strategy(std::string_view text) const { return parse_strategy(text, signature, strategies); }
};

/// Any problem is reported as a ParseError carrying line and column.
Theory parse_theory(std::string_view text);
Theory load_theory(const std::filesystem::path& path);

} // namespace strata
