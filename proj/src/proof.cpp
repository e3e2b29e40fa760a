#include "strata/proof.hpp"

#include "lexer.hpp"
#include "strata/error.hpp"

#include <algorithm>

namespace strata {

// ---------------------------------------------------------------- construction

ProofTerm ProofTerm::embed(Term t) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Embed;
    node->term = std::move(t);
    return ProofTerm(std::move(node));
}

ProofTerm ProofTerm::cong(Symbol f, std::vector<ProofTerm> args) {
    if (args.size() != f.arity) {
        throw ArityError("congruence on '" + f.name + "' expects " + std::to_string(f.arity) + " argument(s), got " +
                         std::to_string(args.size()));
    }
    if (std::all_of(args.begin(), args.end(), [](const ProofTerm& p) { return p.is_embed(); })) {
        std::vector<Term> terms;
        terms.reserve(args.size());
        for (const auto& a : args) terms.push_back(a.term());
        return embed(Term::app(std::move(f), std::move(terms)));
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::Cong;
    node->symbol = std::move(f);
    node->args = std::move(args);
    return ProofTerm(std::move(node));
}

ProofTerm ProofTerm::trans(ProofTerm first, ProofTerm second) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Trans;
    node->args = {std::move(first), std::move(second)};
    return ProofTerm(std::move(node));
}

ProofTerm ProofTerm::repl(std::string label, std::vector<ProofTerm> args) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Repl;
    node->symbol = Symbol{std::move(label), args.size()};
    node->args = std::move(args);
    return ProofTerm(std::move(node));
}

const Term& ProofTerm::term() const {
    if (kind() != Kind::Embed) throw Error("proof term is not an embedding");
    return *node_->term;
}

const Symbol& ProofTerm::symbol() const {
    if (kind() != Kind::Cong) throw Error("proof term is not a congruence");
    return node_->symbol;
}

const std::string& ProofTerm::label() const {
    if (kind() != Kind::Repl) throw Error("proof term is not a replacement");
    return node_->symbol.name;
}

const ProofTerm& ProofTerm::first() const {
    if (kind() != Kind::Trans) throw Error("proof term is not a composition");
    return node_->args[0];
}

const ProofTerm& ProofTerm::second() const {
    if (kind() != Kind::Trans) throw Error("proof term is not a composition");
    return node_->args[1];
}

std::size_t ProofTerm::trans_depth() const noexcept {
    std::size_t d = 0;
    for (const auto& a : args()) d = std::max(d, a.trans_depth());
    return d + (kind() == Kind::Trans ? 1 : 0);
}

bool operator==(const ProofTerm& a, const ProofTerm& b) noexcept { return (a <=> b) == 0; }

std::strong_ordering operator<=>(const ProofTerm& a, const ProofTerm& b) noexcept {
    if (a.node_ == b.node_) return std::strong_ordering::equal;
    if (auto c = a.kind() <=> b.kind(); c != 0) return c;
    if (a.kind() == ProofTerm::Kind::Embed) return *a.node_->term <=> *b.node_->term;
    if (auto c = a.node_->symbol <=> b.node_->symbol; c != 0) return c;
    return std::lexicographical_compare_three_way(a.args().begin(), a.args().end(), b.args().begin(),
                                                  b.args().end());
}

// ---------------------------------------------------------------- inference

Sequent infer(const ProofTerm& pi, const RuleSet& rs) {
    switch (pi.kind()) {
    case ProofTerm::Kind::Embed:
        return {pi.term(), pi.term()};
    case ProofTerm::Kind::Cong: {
        std::vector<Term> sources, targets;
        for (const auto& a : pi.args()) {
            auto s = infer(a, rs);
            sources.push_back(std::move(s.source));
            targets.push_back(std::move(s.target));
        }
        return {Term::app(pi.symbol(), std::move(sources)), Term::app(pi.symbol(), std::move(targets))};
    }
    case ProofTerm::Kind::Trans: {
        auto left = infer(pi.first(), rs);
        auto right = infer(pi.second(), rs);
        if (!(left.target == right.source)) {
            std::string lt = print_term(left.target);
            std::string rs_ = print_term(right.source);
            throw ComposeError("cannot compose `" + print_proof(pi.first()) + "` with `" + print_proof(pi.second()) +
                                   "`: " + lt + " differs from " + rs_,
                               lt, rs_);
        }
        return {std::move(left.source), std::move(right.target)};
    }
    case ProofTerm::Kind::Repl: {
        const Rule& rule = rs.at(pi.label());
        if (pi.args().size() != rule.params().size()) {
            throw ArityError("rule '" + rule.label() + "' takes " + std::to_string(rule.params().size()) +
                             " argument(s), got " + std::to_string(pi.args().size()));
        }
        Substitution before, after;
        for (std::size_t i = 0; i < pi.args().size(); ++i) {
            auto s = infer(pi.args()[i], rs);
            before.bind(rule.params()[i], s.source);
            after.bind(rule.params()[i], s.target);
        }
        return {apply_subst(before, rule.lhs()), apply_subst(after, rule.rhs())};
    }
    }
    throw Error("unreachable proof term kind");
}

bool check(const ProofTerm& pi, const Term& t, const Term& t2, const RuleSet& rs) {
    auto s = infer(pi, rs);
    return s.source == t && s.target == t2;
}

// ---------------------------------------------------------------- derivations

ProofTerm from_derivation(const Derivation& d, const RuleSet& rs) {
    if (d.empty()) return ProofTerm::embed(d.source());
    std::optional<ProofTerm> acc;
    for (const auto& step : d.steps()) {
        const Rule& rule = rs.at(step.label.rule);
        std::vector<ProofTerm> args;
        for (const auto& param : rule.params()) {
            const Term* value = step.label.subst.find(param);
            if (!value) throw StepMismatch("step " + to_string(step.label) + " leaves '" + param + "' unbound");
            args.push_back(ProofTerm::embed(*value));
        }
        ProofTerm core = ProofTerm::repl(rule.label(), std::move(args));

        const auto& path = step.label.position.path();
        for (std::size_t depth = path.size(); depth-- > 0;) {
            Position at(std::vector<std::size_t>(path.begin(), path.begin() + static_cast<std::ptrdiff_t>(depth)));
            const Term& context = subterm_at(step.source, at);
            std::vector<ProofTerm> children;
            for (std::size_t i = 0; i < context.args().size(); ++i) {
                children.push_back(i + 1 == path[depth] ? core : ProofTerm::embed(context.args()[i]));
            }
            core = ProofTerm::cong(context.symbol(), std::move(children));
        }
        acc = acc ? ProofTerm::trans(std::move(*acc), std::move(core)) : std::move(core);
    }
    return *acc;
}

namespace {

class Sequentializer {
public:
    Sequentializer(const RuleSet& rs, Derivation& out) : rs_(rs), out_(out) {}

    void emit(const ProofTerm& pi, const Position& at) {
        switch (pi.kind()) {
        case ProofTerm::Kind::Embed:
            return;
        case ProofTerm::Kind::Cong:
            for (std::size_t i = 0; i < pi.args().size(); ++i) emit(pi.args()[i], at.child(i + 1));
            return;
        case ProofTerm::Kind::Trans:
            emit(pi.first(), at);
            emit(pi.second(), at);
            return;
        case ProofTerm::Kind::Repl: {
            const Rule& rule = rs_.at(pi.label());
            Substitution reduced;
            for (std::size_t i = 0; i < rule.params().size(); ++i) {
                const ProofTerm& arg = pi.args()[i];
                for (const auto& occ : occurrences(rule.lhs(), rule.params()[i])) emit(arg, at.concat(occ));
                reduced.bind(rule.params()[i], infer(arg, rs_).target);
            }
            out_.append(apply_step(out_.target(), StepLabel{at, rule.label(), std::move(reduced)}, rs_));
            return;
        }
        }
    }

private:
    const RuleSet& rs_;
    Derivation& out_;
};

} // namespace

Derivation to_derivation(const ProofTerm& pi, const RuleSet& rs) {
    auto sequent = infer(pi, rs);
    Derivation d(sequent.source);
    Sequentializer(rs, d).emit(pi, Position::root());
    if (!(d.target() == sequent.target)) throw StepMismatch("sequentialization did not reach the inferred target");
    return d;
}

std::set<Term> apply_proof_set(std::span<const ProofTerm> zeta, const Term& t, const RuleSet& rs) {
    std::set<Term> out;
    for (const auto& pi : zeta) {
        try {
            auto s = infer(pi, rs);
            if (s.source == t) out.insert(std::move(s.target));
        } catch (const Error&) {
            // not a proof over rs: contributes nothing
        }
    }
    return out;
}

// ---------------------------------------------------------------- text form

namespace {

using detail::Tok;
using detail::TokenStream;

class ProofParser {
public:
    ProofParser(std::string_view text, const Signature& sig, const RuleSet& rs) : in_(text), sig_(sig), rs_(rs) {}

    ProofTerm parse() {
        ProofTerm p = sequence();
        in_.expect_end("after proof term");
        return p;
    }

private:
    ProofTerm sequence() {
        ProofTerm acc = atom();
        while (in_.accept(Tok::Semi)) acc = ProofTerm::trans(std::move(acc), atom());
        return acc;
    }

    ProofTerm atom() {
        if (in_.accept(Tok::LParen)) {
            ProofTerm p = sequence();
            in_.expect(Tok::RParen, "to close group");
            return p;
        }
        const auto& head = in_.expect(Tok::Ident, "at start of proof term");
        std::vector<ProofTerm> args;
        bool applied = false;
        if (in_.accept(Tok::LParen)) {
            applied = true;
            if (!in_.at(Tok::RParen)) {
                do {
                    args.push_back(sequence());
                } while (in_.accept(Tok::Comma));
            }
            in_.expect(Tok::RParen, "to close argument list");
        }
        const Rule* rule = rs_.find(head.text);
        const Symbol* symbol = sig_.find(head.text);
        if (rule && symbol)
            throw AmbiguousIdent("'" + std::string(head.text) + "' is both a rule label and a function symbol");
        if (rule) return ProofTerm::repl(rule->label(), std::move(args));
        if (symbol) return ProofTerm::cong(*symbol, std::move(args));
        return ProofTerm::embed(detail::variable_or_fail(head, applied));
    }

    TokenStream in_;
    const Signature& sig_;
    const RuleSet& rs_;
};

void print_into(const ProofTerm& pi, std::string& out) {
    auto print_args = [&](std::span<const ProofTerm> args) {
        if (args.empty()) return;
        out += '(';
        for (std::size_t i = 0; i < args.size(); ++i) {
            if (i) out += ',';
            print_into(args[i], out);
        }
        out += ')';
    };
    switch (pi.kind()) {
    case ProofTerm::Kind::Embed:
        out += print_term(pi.term());
        return;
    case ProofTerm::Kind::Cong:
        out += pi.symbol().name;
        print_args(pi.args());
        return;
    case ProofTerm::Kind::Repl:
        out += pi.label();
        print_args(pi.args());
        return;
    case ProofTerm::Kind::Trans:
        print_into(pi.first(), out);
        out += " ; ";
        if (pi.second().kind() == ProofTerm::Kind::Trans) {
            out += '(';
            print_into(pi.second(), out);
            out += ')';
        } else {
            print_into(pi.second(), out);
        }
        return;
    }
}

} // namespace

ProofTerm parse_proof(std::string_view text, const Signature& sig, const RuleSet& rs) {
    return ProofParser(text, sig, rs).parse();
}

std::string print_proof(const ProofTerm& pi) {
    std::string out;
    print_into(pi, out);
    return out;
}

} // namespace strata
