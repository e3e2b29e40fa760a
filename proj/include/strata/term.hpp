#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace strata {

/// A function symbol with a fixed arity.
struct Symbol {
    std::string name;
    std::size_t arity = 0;

    friend bool operator==(const Symbol&, const Symbol&) = default;
    friend auto operator<=>(const Symbol&, const Symbol&) = default;
};

/// Identifiers are `[A-Za-z0-9][A-Za-z0-9_]*`. A leading digit is only
/// meaningful for declared symbols such as the Peano constant `0`.
bool is_identifier(std::string_view text) noexcept;

class Signature {
public:
    Signature() = default;
    Signature(std::initializer_list<Symbol> symbols);

    /// Redeclaring a name with the same arity is a no-op; a different arity
    /// raises ArityError.
    void declare(const Symbol& symbol);

    const Symbol* find(std::string_view name) const;
    bool contains(std::string_view name) const { return find(name) != nullptr; }
    std::vector<Symbol> symbols() const;
    std::size_t size() const noexcept { return symbols_.size(); }

private:
    std::map<std::string, Symbol, std::less<>> symbols_;
};

/// Immutable first-order term: a variable or a symbol applied to arguments.
/// Copies share structure; equality is syntactic identity.
class Term {
public:
    static Term var(std::string name);
    static Term app(Symbol symbol, std::vector<Term> args);
    static Term constant(std::string name) { return app(Symbol{std::move(name), 0}, {}); }

    bool is_var() const noexcept { return node_->is_var; }
    bool is_app() const noexcept { return !node_->is_var; }

    /// Variable name, or the head symbol's name.
    const std::string& name() const noexcept { return node_->symbol.name; }
    /// Head symbol. For a variable this is {name, 0}.
    const Symbol& symbol() const noexcept { return node_->symbol; }
    std::span<const Term> args() const noexcept { return node_->args; }
    const Term& arg(std::size_t i) const { return node_->args.at(i); }

    std::size_t hash() const noexcept { return node_->hash; }
    /// Number of nodes.
    std::size_t size() const noexcept { return node_->size; }
    std::size_t depth() const noexcept { return node_->depth; }

    friend bool operator==(const Term& a, const Term& b) noexcept;
    friend std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept;

private:
    struct Node {
        bool is_var = false;
        Symbol symbol;
        std::vector<Term> args;
        std::size_t hash = 0;
        std::size_t size = 1;
        std::size_t depth = 1;
    };

    explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

/// Path of 1-based child indices from the root. The empty path is the root.
class Position {
public:
    Position() = default;
    Position(std::initializer_list<std::size_t> path);
    explicit Position(std::vector<std::size_t> path);

    static Position root() { return {}; }

    bool is_root() const noexcept { return path_.empty(); }
    std::size_t length() const noexcept { return path_.size(); }
    std::size_t operator[](std::size_t i) const { return path_.at(i); }
    const std::vector<std::size_t>& path() const noexcept { return path_; }

    Position child(std::size_t index) const;
    Position concat(const Position& suffix) const;

    /// Prefix order: this ≤ other iff this is an initial segment of other.
    bool is_prefix_of(const Position& other) const noexcept;
    bool is_strictly_above(const Position& other) const noexcept {
        return length() < other.length() && is_prefix_of(other);
    }

    /// Dotted form, `ε` for the root.
    std::string to_string() const;
    /// Accepts `ε`, `eps` or an empty string for the root, else `i.j.k`.
    static Position parse(std::string_view text);

    /// Lexicographic order on index sequences; on positions it coincides with
    /// pre-order traversal, and among positions incomparable under the prefix
    /// order the greater one is further to the right.
    friend auto operator<=>(const Position&, const Position&) = default;
    friend bool operator==(const Position&, const Position&) = default;

private:
    std::vector<std::size_t> path_;
};

/// Finite map from variable names to terms, applied simultaneously.
class Substitution {
public:
    using map_type = std::map<std::string, Term>;

    Substitution() = default;
    Substitution(std::initializer_list<map_type::value_type> bindings);

    /// Adds x ↦ t. Returns false when x is already bound to a different term.
    bool bind(const std::string& var, const Term& term);
    const Term* find(const std::string& var) const;
    bool empty() const noexcept { return bindings_.empty(); }
    std::size_t size() const noexcept { return bindings_.size(); }
    auto begin() const noexcept { return bindings_.begin(); }
    auto end() const noexcept { return bindings_.end(); }

    /// `{x↦a, y↦f(b)}`
    std::string to_string() const;

    friend bool operator==(const Substitution&, const Substitution&) = default;
    friend auto operator<=>(const Substitution&, const Substitution&) = default;

private:
    map_type bindings_;
};

/// Every valid position of `t` in pre-order (root first, children left to
/// right). The count equals `t.size()`.
std::vector<Position> positions(const Term& t);
bool is_valid_position(const Term& t, const Position& p) noexcept;

const Term& subterm_at(const Term& t, const Position& p);
Term replace_at(const Term& t, const Position& p, const Term& replacement);

/// Syntactic one-sided matching. Variables of the subject are inert. Returns
/// the unique most general σ with σ(pattern) = subject, or nothing.
std::optional<Substitution> match(const Term& pattern, const Term& subject);

Term apply_subst(const Substitution& sigma, const Term& t);

/// Variables of t in first-occurrence (pre-order) order, without repeats.
std::vector<std::string> variables(const Term& t);
/// Positions at which variable `var` occurs in t, in pre-order.
std::vector<Position> occurrences(const Term& t, std::string_view var);

/// Parses `ident | ident(term, ...)`. Identifiers declared in `sig` are
/// symbols; any other identifier is a variable.
Term parse_term(std::string_view text, const Signature& sig);
std::string print_term(const Term& t);

std::ostream& operator<<(std::ostream& os, const Term& t);
std::ostream& operator<<(std::ostream& os, const Position& p);

} // namespace strata

template <>
struct std::hash<strata::Term> {
    std::size_t operator()(const strata::Term& t) const noexcept { return t.hash(); }
};
