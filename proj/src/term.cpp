#include "strata/term.hpp"

#include "lexer.hpp"
#include "strata/error.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace strata {

bool is_identifier(std::string_view text) noexcept {
    if (text.empty() || std::isalnum(static_cast<unsigned char>(text.front())) == 0) return false;
    return std::all_of(text.begin(), text.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
    });
}

// ---------------------------------------------------------------- Signature

Signature::Signature(std::initializer_list<Symbol> symbols) {
    for (const auto& s : symbols) declare(s);
}

void Signature::declare(const Symbol& symbol) {
    if (!is_identifier(symbol.name)) throw UnknownSymbol("invalid symbol name '" + symbol.name + "'");
    auto [it, inserted] = symbols_.try_emplace(symbol.name, symbol);
    if (!inserted && it->second.arity != symbol.arity) {
        throw ArityError("symbol '" + symbol.name + "' redeclared with arity " + std::to_string(symbol.arity) +
                         " (was " + std::to_string(it->second.arity) + ")");
    }
}

const Symbol* Signature::find(std::string_view name) const {
    auto it = symbols_.find(name);
    return it == symbols_.end() ? nullptr : &it->second;
}

std::vector<Symbol> Signature::symbols() const {
    std::vector<Symbol> out;
    out.reserve(symbols_.size());
    for (const auto& [_, s] : symbols_) out.push_back(s);
    return out;
}

// ---------------------------------------------------------------- Term

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
    return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

} // namespace

Term Term::var(std::string name) {
    auto node = std::make_shared<Node>();
    node->is_var = true;
    node->hash = mix(0x5bd1e995, std::hash<std::string>{}(name));
    node->symbol = Symbol{std::move(name), 0};
    return Term(std::move(node));
}

Term Term::app(Symbol symbol, std::vector<Term> args) {
    if (args.size() != symbol.arity) {
        throw ArityError("symbol '" + symbol.name + "' expects " + std::to_string(symbol.arity) +
                         " argument(s), got " + std::to_string(args.size()));
    }
    auto node = std::make_shared<Node>();
    std::size_t h = mix(std::hash<std::string>{}(symbol.name), symbol.arity);
    for (const auto& a : args) {
        h = mix(h, a.hash());
        node->size += a.size();
        node->depth = std::max(node->depth, a.depth() + 1);
    }
    node->hash = h;
    node->symbol = std::move(symbol);
    node->args = std::move(args);
    return Term(std::move(node));
}

bool operator==(const Term& a, const Term& b) noexcept {
    if (a.node_ == b.node_) return true;
    if (a.hash() != b.hash() || a.size() != b.size() || a.is_var() != b.is_var() || a.symbol() != b.symbol())
        return false;
    return std::equal(a.args().begin(), a.args().end(), b.args().begin(), b.args().end());
}

std::strong_ordering operator<=>(const Term& a, const Term& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (a.is_var() != b.is_var()) return a.is_var() ? std::strong_ordering::less : std::strong_ordering::greater;
    if (auto c = a.symbol() <=> b.symbol(); c != 0) return c;
    for (std::size_t i = 0; i < a.args().size(); ++i) {
        if (auto c = a.args()[i] <=> b.args()[i]; c != 0) return c;
    }
    return std::strong_ordering::equal;
}

// ---------------------------------------------------------------- Position

Position::Position(std::initializer_list<std::size_t> path) : Position(std::vector<std::size_t>(path)) {}

Position::Position(std::vector<std::size_t> path) : path_(std::move(path)) {
    for (auto i : path_) {
        if (i == 0) throw InvalidPosition("position indices are 1-based");
    }
}

Position Position::child(std::size_t index) const {
    if (index == 0) throw InvalidPosition("position indices are 1-based");
    Position p = *this;
    p.path_.push_back(index);
    return p;
}

Position Position::concat(const Position& suffix) const {
    Position p = *this;
    p.path_.insert(p.path_.end(), suffix.path_.begin(), suffix.path_.end());
    return p;
}

bool Position::is_prefix_of(const Position& other) const noexcept {
    return path_.size() <= other.path_.size() && std::equal(path_.begin(), path_.end(), other.path_.begin());
}

std::string Position::to_string() const {
    if (path_.empty()) return "ε";
    std::string out;
    for (std::size_t i = 0; i < path_.size(); ++i) {
        if (i) out += '.';
        out += std::to_string(path_[i]);
    }
    return out;
}

Position Position::parse(std::string_view text) {
    if (text.empty() || text == "ε" || text == "eps") return {};
    std::vector<std::size_t> path;
    std::size_t value = 0;
    bool have_digit = false;
    for (char c : text) {
        if (c == '.') {
            if (!have_digit) throw ParseError("empty index in position", 1, 1);
            path.push_back(value);
            value = 0;
            have_digit = false;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            value = value * 10 + static_cast<std::size_t>(c - '0');
            have_digit = true;
        } else {
            throw ParseError(std::string("invalid character '") + c + "' in position", 1, 1);
        }
    }
    if (!have_digit) throw ParseError("empty index in position", 1, 1);
    path.push_back(value);
    return Position(std::move(path));
}

// ---------------------------------------------------------------- Substitution

Substitution::Substitution(std::initializer_list<map_type::value_type> bindings) {
    for (const auto& [k, v] : bindings) {
        if (!bind(k, v)) throw Error("variable '" + k + "' bound twice");
    }
}

bool Substitution::bind(const std::string& var, const Term& term) {
    auto [it, inserted] = bindings_.try_emplace(var, term);
    return inserted || it->second == term;
}

const Term* Substitution::find(const std::string& var) const {
    auto it = bindings_.find(var);
    return it == bindings_.end() ? nullptr : &it->second;
}

std::string Substitution::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [k, v] : bindings_) {
        if (!first) out += ", ";
        first = false;
        out += k + "↦" + print_term(v);
    }
    return out + "}";
}

// ---------------------------------------------------------------- operations

namespace {

void collect_positions(const Term& t, Position& at, std::vector<Position>& out) {
    out.push_back(at);
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        Position child = at.child(i + 1);
        collect_positions(t.args()[i], child, out);
    }
}

const Term* walk(const Term& t, const Position& p) noexcept {
    const Term* cur = &t;
    for (auto i : p.path()) {
        if (i == 0 || i > cur->args().size()) return nullptr;
        cur = &cur->args()[i - 1];
    }
    return cur;
}

Term replace_from(const Term& t, const std::vector<std::size_t>& path, std::size_t depth, const Term& s) {
    if (depth == path.size()) return s;
    std::vector<Term> args(t.args().begin(), t.args().end());
    std::size_t i = path[depth] - 1;
    args[i] = replace_from(args[i], path, depth + 1, s);
    return Term::app(t.symbol(), std::move(args));
}

bool match_into(const Term& pattern, const Term& subject, Substitution& sigma) {
    if (pattern.is_var()) return sigma.bind(pattern.name(), subject);
    if (subject.is_var() || pattern.symbol() != subject.symbol()) return false;
    for (std::size_t i = 0; i < pattern.args().size(); ++i) {
        if (!match_into(pattern.args()[i], subject.args()[i], sigma)) return false;
    }
    return true;
}

void collect_vars(const Term& t, std::vector<std::string>& out) {
    if (t.is_var()) {
        if (std::find(out.begin(), out.end(), t.name()) == out.end()) out.push_back(t.name());
        return;
    }
    for (const auto& a : t.args()) collect_vars(a, out);
}

void print_into(const Term& t, std::string& out) {
    out += t.name();
    if (t.is_var() || t.args().empty()) return;
    out += '(';
    for (std::size_t i = 0; i < t.args().size(); ++i) {
        if (i) out += ',';
        print_into(t.args()[i], out);
    }
    out += ')';
}

} // namespace

std::vector<Position> positions(const Term& t) {
    std::vector<Position> out;
    out.reserve(t.size());
    Position root;
    collect_positions(t, root, out);
    return out;
}

bool is_valid_position(const Term& t, const Position& p) noexcept { return walk(t, p) != nullptr; }

const Term& subterm_at(const Term& t, const Position& p) {
    const Term* s = walk(t, p);
    if (s == nullptr) throw InvalidPosition("position " + p.to_string() + " is not valid in " + print_term(t));
    return *s;
}

Term replace_at(const Term& t, const Position& p, const Term& replacement) {
    if (!is_valid_position(t, p))
        throw InvalidPosition("position " + p.to_string() + " is not valid in " + print_term(t));
    return replace_from(t, p.path(), 0, replacement);
}

std::optional<Substitution> match(const Term& pattern, const Term& subject) {
    Substitution sigma;
    if (!match_into(pattern, subject, sigma)) return std::nullopt;
    return sigma;
}

Term apply_subst(const Substitution& sigma, const Term& t) {
    if (sigma.empty()) return t;
    if (t.is_var()) {
        const Term* bound = sigma.find(t.name());
        return bound ? *bound : t;
    }
    if (t.args().empty()) return t;
    std::vector<Term> args;
    args.reserve(t.args().size());
    for (const auto& a : t.args()) args.push_back(apply_subst(sigma, a));
    return Term::app(t.symbol(), std::move(args));
}

std::vector<std::string> variables(const Term& t) {
    std::vector<std::string> out;
    collect_vars(t, out);
    return out;
}

std::vector<Position> occurrences(const Term& t, std::string_view var) {
    std::vector<Position> out;
    for (auto& p : positions(t)) {
        const Term& s = subterm_at(t, p);
        if (s.is_var() && s.name() == var) out.push_back(std::move(p));
    }
    return out;
}

Term parse_term(std::string_view text, const Signature& sig) {
    detail::TokenStream in(text);
    Term t = detail::parse_term(in, sig);
    in.expect_end("after term");
    return t;
}

std::string print_term(const Term& t) {
    std::string out;
    print_into(t, out);
    return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) { return os << print_term(t); }
std::ostream& operator<<(std::ostream& os, const Position& p) { return os << p.to_string(); }

} // namespace strata
