#pragma once

// Strategy combinators with explicit failure, evaluated over terms.

#include "strata/rewrite.hpp"

#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

class StrategyExpr {
public:
    enum class Kind { Id, Fail, RuleRef, Seq, First, Try, Not, IfTE, Repeat, Mu, SVar, Occurs };

    static StrategyExpr id();
    static StrategyExpr fail();
    static StrategyExpr rule(std::string label);
    static StrategyExpr seq(StrategyExpr first, StrategyExpr second);
    static StrategyExpr first(StrategyExpr preferred, StrategyExpr fallback);
    static StrategyExpr try_(StrategyExpr s);
    static StrategyExpr not_(StrategyExpr s);
    static StrategyExpr if_then_else(StrategyExpr cond, StrategyExpr then_s, StrategyExpr else_s);
    static StrategyExpr repeat(StrategyExpr s);
    static StrategyExpr mu(std::string var, StrategyExpr body);
    static StrategyExpr var(std::string name);
    /// Succeeds with the input unchanged when `pattern` matches some subterm,
    /// fails otherwise. The anonymous rule G ⇒ G applied anywhere.
    static StrategyExpr occurs(Term pattern);

    Kind kind() const noexcept { return node_->kind; }
    /// Rule label, Mu variable, or SVar name.
    const std::string& name() const noexcept { return node_->name; }
    std::span<const StrategyExpr> children() const noexcept { return node_->children; }
    const StrategyExpr& child(std::size_t i) const { return node_->children.at(i); }
    const Term& pattern() const;

    friend bool operator==(const StrategyExpr& a, const StrategyExpr& b) noexcept;

private:
    struct Node {
        Kind kind;
        std::string name;
        std::vector<StrategyExpr> children;
        std::optional<Term> pattern;
    };

    static StrategyExpr make(Kind kind, std::string name, std::vector<StrategyExpr> children);

    explicit StrategyExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Either a term or the failure constant stk. stk is never a term.
class EvalResult {
public:
    static EvalResult value(Term t) { return EvalResult(std::move(t)); }
    static EvalResult stk() { return EvalResult(); }

    bool is_stk() const noexcept { return !term_.has_value(); }
    bool is_value() const noexcept { return term_.has_value(); }
    const Term& value() const;

    friend bool operator==(const EvalResult&, const EvalResult&) = default;

private:
    EvalResult() = default;
    explicit EvalResult(Term t) : term_(std::move(t)) {}

    std::optional<Term> term_;
};

std::string to_string(const EvalResult& r);

/// Applies `s` to `t`. Every evaluated node costs one unit of fuel; running
/// out raises FuelExhausted, which is distinct from failure. Rule references
/// apply at the root only. Throws UnknownLabel, UnboundSVar.
EvalResult eval(const StrategyExpr& s, const Term& t, const RuleSet& rs, std::size_t fuel);

/// Strategy variables not bound by an enclosing mu.
std::vector<std::string> free_svars(const StrategyExpr& s);

/// first(G ⇒ G, X ⇒ stk): succeeds unchanged iff g occurs in the input.
StrategyExpr invariant_strategy(const Term& g);
bool check_invariant(const Term& g, const Term& t);
/// G ⇒ stk: fails iff g occurs in the input, otherwise identity.
StrategyExpr forbidden_strategy(const Term& g);

/// Concrete syntax:
///   id | fail | <label> | seq(S,S) | first(S,S) | try(S) | not(S)
///   | ifTE(S,S,S) | repeat(S) | mu X . S | X | occurs(<term>)
/// Identifiers starting with an upper-case letter are strategy variables.
/// Lower-case identifiers found in `aliases` expand to the named strategy;
/// all others are rule references. Throws ParseError, UnboundSVar.
StrategyExpr parse_strategy(std::string_view text, const Signature& sig,
                            const std::map<std::string, StrategyExpr, std::less<>>& aliases = {});
std::string print_strategy(const StrategyExpr& s);

bool is_strategy_keyword(std::string_view ident) noexcept;

} // namespace strata
