#include "strata/strategy.hpp"

#include "lexer.hpp"
#include "strata/error.hpp"

#include <algorithm>
#include <array>
#include <cctype>

namespace strata {

// ---------------------------------------------------------------- construction

StrategyExpr StrategyExpr::make(Kind kind, std::string name, std::vector<StrategyExpr> children) {
    auto node = std::make_shared<Node>();
    node->kind = kind;
    node->name = std::move(name);
    node->children = std::move(children);
    return StrategyExpr(std::move(node));
}

StrategyExpr StrategyExpr::id() { return make(Kind::Id, {}, {}); }
StrategyExpr StrategyExpr::fail() { return make(Kind::Fail, {}, {}); }
StrategyExpr StrategyExpr::rule(std::string label) { return make(Kind::RuleRef, std::move(label), {}); }
StrategyExpr StrategyExpr::seq(StrategyExpr a, StrategyExpr b) { return make(Kind::Seq, {}, {std::move(a), std::move(b)}); }
StrategyExpr StrategyExpr::first(StrategyExpr a, StrategyExpr b) {
    return make(Kind::First, {}, {std::move(a), std::move(b)});
}
StrategyExpr StrategyExpr::try_(StrategyExpr s) { return make(Kind::Try, {}, {std::move(s)}); }
StrategyExpr StrategyExpr::not_(StrategyExpr s) { return make(Kind::Not, {}, {std::move(s)}); }
StrategyExpr StrategyExpr::if_then_else(StrategyExpr c, StrategyExpr a, StrategyExpr b) {
    return make(Kind::IfTE, {}, {std::move(c), std::move(a), std::move(b)});
}
StrategyExpr StrategyExpr::repeat(StrategyExpr s) { return make(Kind::Repeat, {}, {std::move(s)}); }
StrategyExpr StrategyExpr::mu(std::string var, StrategyExpr body) { return make(Kind::Mu, std::move(var), {std::move(body)}); }
StrategyExpr StrategyExpr::var(std::string name) { return make(Kind::SVar, std::move(name), {}); }

StrategyExpr StrategyExpr::occurs(Term pattern) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Occurs;
    node->pattern = std::move(pattern);
    return StrategyExpr(std::move(node));
}

const Term& StrategyExpr::pattern() const {
    if (kind() != Kind::Occurs) throw Error("strategy has no pattern");
    return *node_->pattern;
}

bool operator==(const StrategyExpr& a, const StrategyExpr& b) noexcept {
    if (a.node_ == b.node_) return true;
    return a.kind() == b.kind() && a.name() == b.name() && a.node_->pattern == b.node_->pattern &&
           std::equal(a.children().begin(), a.children().end(), b.children().begin(), b.children().end());
}

const Term& EvalResult::value() const {
    if (!term_) throw Error("strategy result is stk");
    return *term_;
}

std::string to_string(const EvalResult& r) { return r.is_stk() ? "stk" : "value: " + print_term(r.value()); }

// ---------------------------------------------------------------- evaluation

namespace {

// Recursion environment: a strategy variable names the mu that binds it,
// together with the environment in which that mu was entered.
struct Binding {
    std::string var;
    StrategyExpr mu;
    std::shared_ptr<const Binding> defined_in;
    std::shared_ptr<const Binding> next;
};
using Env = std::shared_ptr<const Binding>;

class Evaluator {
public:
    Evaluator(const RuleSet& rs, std::size_t fuel) : rs_(rs), fuel_(fuel) {}

    EvalResult run(const StrategyExpr& s, const Term& t, const Env& env) {
        using K = StrategyExpr::Kind;
        tick();
        switch (s.kind()) {
        case K::Id:
            return EvalResult::value(t);
        case K::Fail:
            return EvalResult::stk();
        case K::RuleRef: {
            auto step = rewrite_at(t, rs_.at(s.name()), Position::root());
            return step ? EvalResult::value(std::move(step->target)) : EvalResult::stk();
        }
        case K::Seq: {
            auto r = run(s.child(0), t, env);
            if (r.is_stk()) return r;
            return run(s.child(1), r.value(), env);
        }
        case K::First: {
            auto r = run(s.child(0), t, env);
            if (r.is_value()) return r;
            return run(s.child(1), t, env);
        }
        case K::Try: {
            auto r = run(s.child(0), t, env);
            return r.is_value() ? r : EvalResult::value(t);
        }
        case K::Not:
            return run(s.child(0), t, env).is_stk() ? EvalResult::value(t) : EvalResult::stk();
        case K::IfTE:
            return run(s.child(0), t, env).is_value() ? run(s.child(1), t, env) : run(s.child(2), t, env);
        case K::Repeat: {
            Term cur = t;
            for (;;) {
                auto r = run(s.child(0), cur, env);
                if (r.is_stk()) return EvalResult::value(std::move(cur));
                cur = r.value();
                tick();
            }
        }
        case K::Mu: {
            auto inner = std::make_shared<const Binding>(Binding{s.name(), s, env, env});
            return run(s.child(0), t, inner);
        }
        case K::SVar: {
            for (const Binding* b = env.get(); b; b = b->next.get()) {
                if (b->var == s.name()) return run(b->mu, t, b->defined_in);
            }
            throw UnboundSVar("strategy variable '" + s.name() + "' is not bound by any mu");
        }
        case K::Occurs:
            return check_invariant(s.pattern(), t) ? EvalResult::value(t) : EvalResult::stk();
        }
        throw Error("unreachable strategy kind");
    }

private:
    void tick() {
        if (fuel_ == 0) throw FuelExhausted("strategy evaluation ran out of fuel");
        --fuel_;
    }

    const RuleSet& rs_;
    std::size_t fuel_;
};

void collect_free(const StrategyExpr& s, std::vector<std::string>& bound, std::vector<std::string>& out) {
    if (s.kind() == StrategyExpr::Kind::SVar) {
        if (std::find(bound.begin(), bound.end(), s.name()) == bound.end() &&
            std::find(out.begin(), out.end(), s.name()) == out.end())
            out.push_back(s.name());
        return;
    }
    if (s.kind() == StrategyExpr::Kind::Mu) bound.push_back(s.name());
    for (const auto& c : s.children()) collect_free(c, bound, out);
    if (s.kind() == StrategyExpr::Kind::Mu) bound.pop_back();
}

} // namespace

EvalResult eval(const StrategyExpr& s, const Term& t, const RuleSet& rs, std::size_t fuel) {
    return Evaluator(rs, fuel).run(s, t, nullptr);
}

std::vector<std::string> free_svars(const StrategyExpr& s) {
    std::vector<std::string> bound, out;
    collect_free(s, bound, out);
    return out;
}

StrategyExpr invariant_strategy(const Term& g) {
    return StrategyExpr::first(StrategyExpr::occurs(g), StrategyExpr::fail());
}

bool check_invariant(const Term& g, const Term& t) {
    if (match(g, t)) return true;
    return std::any_of(t.args().begin(), t.args().end(), [&](const Term& a) { return check_invariant(g, a); });
}

StrategyExpr forbidden_strategy(const Term& g) {
    return StrategyExpr::if_then_else(StrategyExpr::occurs(g), StrategyExpr::fail(), StrategyExpr::id());
}

// ---------------------------------------------------------------- text form

namespace {

using detail::Tok;
using detail::TokenStream;

constexpr std::array<std::string_view, 10> kKeywords{"id",  "fail",   "seq", "first", "try",
                                                     "not", "ifTE", "repeat", "mu",  "occurs"};

bool is_svar_name(std::string_view ident) { return std::isupper(static_cast<unsigned char>(ident.front())) != 0; }

class StrategyParser {
public:
    StrategyParser(std::string_view text, const Signature& sig,
                   const std::map<std::string, StrategyExpr, std::less<>>& aliases)
        : in_(text), sig_(sig), aliases_(aliases) {}

    StrategyExpr parse() {
        StrategyExpr s = expr();
        in_.expect_end("after strategy");
        return s;
    }

private:
    std::vector<StrategyExpr> args(std::size_t n, std::string_view what) {
        in_.expect(Tok::LParen, ("after '" + std::string(what) + "'").c_str());
        std::vector<StrategyExpr> out;
        for (std::size_t i = 0; i < n; ++i) {
            if (i) in_.expect(Tok::Comma, ("between arguments of '" + std::string(what) + "'").c_str());
            out.push_back(expr());
        }
        in_.expect(Tok::RParen, ("to close '" + std::string(what) + "'").c_str());
        return out;
    }

    StrategyExpr expr() {
        const auto& head = in_.expect(Tok::Ident, "at start of strategy");
        std::string_view w = head.text;
        if (w == "id") return StrategyExpr::id();
        if (w == "fail") return StrategyExpr::fail();
        if (w == "seq") {
            auto a = args(2, w);
            return StrategyExpr::seq(a[0], a[1]);
        }
        if (w == "first") {
            auto a = args(2, w);
            return StrategyExpr::first(a[0], a[1]);
        }
        if (w == "try") return StrategyExpr::try_(args(1, w)[0]);
        if (w == "not") return StrategyExpr::not_(args(1, w)[0]);
        if (w == "ifTE") {
            auto a = args(3, w);
            return StrategyExpr::if_then_else(a[0], a[1], a[2]);
        }
        if (w == "repeat") return StrategyExpr::repeat(args(1, w)[0]);
        if (w == "occurs") {
            in_.expect(Tok::LParen, "after 'occurs'");
            Term g = detail::parse_term(in_, sig_);
            in_.expect(Tok::RParen, "to close 'occurs'");
            return StrategyExpr::occurs(std::move(g));
        }
        if (w == "mu") {
            const auto& var = in_.expect(Tok::Ident, "after 'mu'");
            if (!is_svar_name(var.text))
                TokenStream::fail_at(var, "strategy variable must start with an upper-case letter");
            in_.expect(Tok::Dot, "after mu variable");
            std::string name(var.text);
            bound_.push_back(name);
            StrategyExpr body = expr();
            bound_.pop_back();
            return StrategyExpr::mu(std::move(name), std::move(body));
        }
        if (is_svar_name(w)) {
            if (std::find(bound_.begin(), bound_.end(), w) == bound_.end())
                throw UnboundSVar("strategy variable '" + std::string(w) + "' is not bound by any mu");
            return StrategyExpr::var(std::string(w));
        }
        if (auto it = aliases_.find(w); it != aliases_.end()) return it->second;
        return StrategyExpr::rule(std::string(w));
    }

    TokenStream in_;
    const Signature& sig_;
    const std::map<std::string, StrategyExpr, std::less<>>& aliases_;
    std::vector<std::string> bound_;
};

void print_into(const StrategyExpr& s, std::string& out) {
    using K = StrategyExpr::Kind;
    auto call = [&](const char* name) {
        out += name;
        out += '(';
        for (std::size_t i = 0; i < s.children().size(); ++i) {
            if (i) out += ',';
            print_into(s.children()[i], out);
        }
        out += ')';
    };
    switch (s.kind()) {
    case K::Id: out += "id"; return;
    case K::Fail: out += "fail"; return;
    case K::RuleRef: out += s.name(); return;
    case K::SVar: out += s.name(); return;
    case K::Seq: call("seq"); return;
    case K::First: call("first"); return;
    case K::Try: call("try"); return;
    case K::Not: call("not"); return;
    case K::IfTE: call("ifTE"); return;
    case K::Repeat: call("repeat"); return;
    case K::Mu:
        out += "mu " + s.name() + " . ";
        print_into(s.child(0), out);
        return;
    case K::Occurs:
        out += "occurs(" + print_term(s.pattern()) + ")";
        return;
    }
}

} // namespace

bool is_strategy_keyword(std::string_view ident) noexcept {
    return std::find(kKeywords.begin(), kKeywords.end(), ident) != kKeywords.end();
}

StrategyExpr parse_strategy(std::string_view text, const Signature& sig,
                            const std::map<std::string, StrategyExpr, std::less<>>& aliases) {
    return StrategyParser(text, sig, aliases).parse();
}

std::string print_strategy(const StrategyExpr& s) {
    std::string out;
    print_into(s, out);
    return out;
}

} // namespace strata
