#pragma once

// Rewriting-logic proof terms and the four deduction rules
// (reflexivity, congruence, transitivity, replacement).

#include "strata/rewrite.hpp"
#include "strata/term_ars.hpp"

#include <compare>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

class ProofTerm {
public:
    enum class Kind { Embed, Cong, Trans, Repl };

    /// Reflexivity: t : [t] → [t].
    static ProofTerm embed(Term t);
    /// Congruence f(π1..πn). When every πi is an embedding the result is
    /// normalized to embed(f(t1..tn)). Throws ArityError.
    static ProofTerm cong(Symbol f, std::vector<ProofTerm> args);
    /// Transitivity π1 ; π2.
    static ProofTerm trans(ProofTerm first, ProofTerm second);
    /// Replacement ℓ(π1..πn). The arity is checked against the rule at
    /// inference time.
    static ProofTerm repl(std::string label, std::vector<ProofTerm> args);

    Kind kind() const noexcept { return node_->kind; }
    bool is_embed() const noexcept { return kind() == Kind::Embed; }

    const Term& term() const;           // Embed
    const Symbol& symbol() const;       // Cong
    const std::string& label() const;   // Repl
    std::span<const ProofTerm> args() const noexcept { return node_->args; } // Cong, Repl; Trans holds {first, second}
    const ProofTerm& first() const;     // Trans
    const ProofTerm& second() const;    // Trans

    /// Number of Trans nodes on the longest root-to-leaf path.
    std::size_t trans_depth() const noexcept;

    friend bool operator==(const ProofTerm& a, const ProofTerm& b) noexcept;
    friend std::strong_ordering operator<=>(const ProofTerm& a, const ProofTerm& b) noexcept;

private:
    struct Node {
        Kind kind;
        std::optional<Term> term;
        Symbol symbol;       // Cong symbol, or Repl label in symbol.name
        std::vector<ProofTerm> args;
    };

    explicit ProofTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// [source] → [target]
struct Sequent {
    Term source;
    Term target;

    friend bool operator==(const Sequent&, const Sequent&) = default;
};

/// Derives the sequent proved by π. Throws UnknownLabel, ArityError, or
/// ComposeError when a composition's intermediate terms differ.
Sequent infer(const ProofTerm& pi, const RuleSet& rs);

/// R ⊢ π : [t] → [t2]
bool check(const ProofTerm& pi, const Term& t, const Term& t2, const RuleSet& rs);

/// Encodes each step as a replacement (arguments in the rule's parameter
/// order, hence the rule set) wrapped in congruences along its
/// position and chains the steps left-associatively. The empty derivation
/// becomes embed(source).
ProofTerm from_derivation(const Derivation& d, const RuleSet& rs);

/// Sequentializes π into single rewrite steps. Parallel sub-proofs are
/// replayed left to right, and a replacement's arguments are rewritten before
/// the rule fires at the top.
Derivation to_derivation(const ProofTerm& pi, const RuleSet& rs);

/// { t′ | π ∈ ζ, π : [t] → [t′] }. Proof terms that fail inference or start
/// elsewhere are skipped.
std::set<Term> apply_proof_set(std::span<const ProofTerm> zeta, const Term& t, const RuleSet& rs);

/// pt := term | ident "(" pt ("," pt)* ")" | pt ";" pt | "(" pt ")"
/// `;` binds loosest and associates to the left. Identifiers resolve to rule
/// labels, then symbols, then variables. Throws ParseError, AmbiguousIdent,
/// ArityError, UnknownSymbol.
ProofTerm parse_proof(std::string_view text, const Signature& sig, const RuleSet& rs);
std::string print_proof(const ProofTerm& pi);

} // namespace strata
