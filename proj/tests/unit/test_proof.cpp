#include "strata/error.hpp"
#include "strata/proof.hpp"

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace strata;
using namespace strata::testing;

namespace {

ProofTerm P(std::string_view text) { return parse_proof(text, rex().signature, rex().rules); }
ProofTerm E(std::string_view t) { return ProofTerm::embed(T(t)); }
ProofTerm R(std::string label, std::vector<ProofTerm> args = {}) { return ProofTerm::repl(std::move(label), std::move(args)); }

bool normalized(const ProofTerm& p) {
    if (p.kind() == ProofTerm::Kind::Cong &&
        std::all_of(p.args().begin(), p.args().end(), [](const ProofTerm& a) { return a.is_embed(); }))
        return false;
    return std::all_of(p.args().begin(), p.args().end(), normalized);
}

std::vector<std::pair<std::string, std::size_t>> rex_rule_arities() {
    std::vector<std::pair<std::string, std::size_t>> out;
    for (const auto& r : rex().rules) out.emplace_back(r.label(), r.params().size());
    return out;
}

} // namespace

TEST_CASE("infer examples") {
    const auto& rs = rex().rules;
    CHECK(infer(E("a"), rs) == Sequent{T("a"), T("a")});
    CHECK(infer(R("r3", {E("a")}), rs) == Sequent{T("f(a)"), T("g(a)")});
    CHECK(infer(ProofTerm::trans(R("r3", {E("a")}), R("r2", {E("a")})), rs) == Sequent{T("f(a)"), T("a")});
    try {
        infer(ProofTerm::trans(R("r1"), R("r1")), rs);
        FAIL("expected ComposeError");
    } catch (const ComposeError& e) {
        CHECK(e.left_target() == "b");
        CHECK(e.right_source() == "a");
    }
    CHECK_THROWS_AS(infer(R("zz"), rs), UnknownLabel);
    CHECK_THROWS_AS(infer(R("r3"), rs), ArityError);
    CHECK_THROWS_AS(ProofTerm::cong({"f", 1}, {}), ArityError);
}

TEST_CASE("congruence with a rewriting child") {
    CHECK(infer(ProofTerm::cong({"h", 2}, {R("r1"), E("g(a)")}), rex().rules) == Sequent{T("h(a,g(a))"), T("h(b,g(a))")});
}

TEST_CASE("check examples") {
    const auto& rs = rex().rules;
    CHECK(check(E("a"), T("a"), T("a"), rs));
    CHECK(check(R("r1"), T("a"), T("b"), rs));
    CHECK_FALSE(check(R("r1"), T("a"), T("a"), rs));
    CHECK_THROWS_AS(check(ProofTerm::trans(R("r1"), R("r1")), T("a"), T("b"), rs), ComposeError);
}

TEST_CASE("construction normalizes all-embedding congruences") {
    auto p = ProofTerm::cong({"f", 1}, {E("g(a)")});
    CHECK(p.is_embed());
    CHECK(p.term() == T("f(g(a))"));
    CHECK(ProofTerm::cong({"a", 0}, {}).is_embed());

    Gen gen(31);
    for (int i = 0; i < 500; ++i) {
        CHECK(normalized(gen.proof(rex_random_symbols(), rex_rule_arities(), 4)));
    }
}

TEST_CASE("from_derivation examples") {
    const auto& rs = rex().rules;
    Derivation d1(T("f(g(a))"), {apply_step(T("f(g(a))"), {{1, 1}, "r1", {}}, rs)});
    CHECK(from_derivation(d1, rs) == ProofTerm::cong({"f", 1}, {ProofTerm::cong({"g", 1}, {R("r1")})}));

    Derivation d2(T("a"), {apply_step(T("a"), {{}, "r1", {}}, rs)});
    CHECK(from_derivation(d2, rs) == R("r1"));

    auto s1 = apply_step(T("f(a)"), {{}, "r3", {{"x", T("a")}}}, rs);
    auto s2 = apply_step(T("g(a)"), {{}, "r2", {{"x", T("a")}}}, rs);
    Derivation d3(T("f(a)"), {s1, s2});
    CHECK(from_derivation(d3, rs) == ProofTerm::trans(R("r3", {E("a")}), R("r2", {E("a")})));

    CHECK(from_derivation(Derivation(T("h(a,b)")), rs) == E("h(a,b)"));
}

TEST_CASE("Replacement over embeddings coincides with a root rewrite") {
    const auto& rs = rex().rules;
    Gen gen(32);
    for (int i = 0; i < 300; ++i) {
        const Rule& r = gen.pick(rs.rules());
        Substitution sigma;
        std::vector<ProofTerm> args;
        for (const auto& x : r.params()) {
            Term v = gen.term(rex_random_symbols(), 3);
            sigma.bind(x, v);
            args.push_back(ProofTerm::embed(v));
        }
        auto seq = infer(ProofTerm::repl(r.label(), args), rs);
        CHECK(seq.source == apply_subst(sigma, r.lhs()));
        CHECK(seq.target == apply_subst(sigma, r.rhs()));
        auto step = rewrite_at(seq.source, r, {});
        REQUIRE(step);
        CHECK(step->target == seq.target);
    }
}

TEST_CASE("to_derivation examples") {
    const auto& rs = rex().rules;
    auto d1 = to_derivation(ProofTerm::cong({"f", 1}, {R("r1")}), rs);
    REQUIRE(d1.length() == 1);
    CHECK(d1.source() == T("f(a)"));
    CHECK(d1.steps()[0].label == StepLabel{{1}, "r1", {}});
    CHECK(d1.target() == T("f(b)"));

    auto d2 = to_derivation(E("h(a,b)"), rs);
    CHECK(d2.empty());
    CHECK(d2.source() == T("h(a,b)"));

    auto d3 = to_derivation(R("r2", {R("r1")}), rs);
    REQUIRE(d3.length() == 2);
    CHECK(d3.steps()[0].source == T("g(a)"));
    CHECK(d3.steps()[0].label == StepLabel{{1}, "r1", {}});
    CHECK(d3.steps()[1].source == T("g(b)"));
    CHECK(d3.steps()[1].label == StepLabel{{}, "r2", {{"x", T("b")}}});
    CHECK(d3.target() == T("b"));
}

TEST_CASE("to_derivation rewrites every occurrence of a nonlinear parameter") {
    Theory th = parse_theory("sig a/0 b/0 h/2\nrule r1 : a => b\nrule dup : h(x, x) => x\n");
    auto pi = parse_proof("dup(r1)", th.signature, th.rules);
    CHECK(infer(pi, th.rules) == Sequent{th.term("h(a,a)"), th.term("b")});
    auto d = to_derivation(pi, th.rules);
    REQUIRE(d.length() == 3);
    CHECK(d.steps()[0].target == th.term("h(b,a)"));
    CHECK(d.steps()[1].target == th.term("h(b,b)"));
    CHECK(d.target() == th.term("b"));
}

TEST_CASE("to_derivation and from_derivation preserve the sequent") {
    const auto& rs = rex().rules;
    Gen gen(33);
    int inferable = 0;
    for (int i = 0; i < 3000; ++i) {
        ProofTerm pi = gen.proof(rex_enumeration_symbols(), rex_rule_arities(), 4);
        std::optional<Sequent> s;
        try {
            s = infer(pi, rs);
        } catch (const Error&) {
            continue;
        }
        ++inferable;
        auto d = to_derivation(pi, rs);
        CHECK(d.source() == s->source);
        CHECK(d.target() == s->target);
        CHECK(infer(from_derivation(d, rs), rs) == *s);
    }
    CHECK(inferable > 200);
}

TEST_CASE("apply_proof_set examples") {
    const auto& rs = rex().rules;
    std::vector<ProofTerm> z1{R("r1")};
    CHECK(apply_proof_set(z1, T("a"), rs) == std::set<Term>{T("b")});
    std::vector<ProofTerm> z2{E("a")};
    CHECK(apply_proof_set(z2, T("a"), rs) == std::set<Term>{T("a")});
    CHECK(apply_proof_set(z1, T("b"), rs).empty());
    std::vector<ProofTerm> z3{R("r1"), ProofTerm::trans(R("r1"), R("r1")), R("zz"), E("a"),
                              ProofTerm::trans(R("r3", {E("a")}), R("r2", {E("a")}))};
    CHECK(apply_proof_set(z3, T("a"), rs) == std::set<Term>{T("a"), T("b")});
    CHECK(apply_proof_set(z3, T("f(a)"), rs) == std::set<Term>{T("a")});
}

TEST_CASE("proof term text") {
    const auto& rs = rex().rules;
    CHECK_THROWS_AS(infer(P("r1 ; r1"), rs), ComposeError);
    CHECK(P("f(r1)") == ProofTerm::cong({"f", 1}, {R("r1")}));
    CHECK(P("r3(a) ; r2(a)") == ProofTerm::trans(R("r3", {E("a")}), R("r2", {E("a")})));
    CHECK(P("a ; a ; a") == ProofTerm::trans(ProofTerm::trans(E("a"), E("a")), E("a")));
    CHECK(P("a ; (a ; a)") == ProofTerm::trans(E("a"), ProofTerm::trans(E("a"), E("a"))));
    CHECK(P("f(g(a))") == E("f(g(a))"));
    CHECK(P("r1()") == R("r1"));
    CHECK(P("x") == ProofTerm::embed(Term::var("x")));

    CHECK(print_proof(P("r3(a) ;r2( a )")) == "r3(a) ; r2(a)");
    CHECK(print_proof(P("h(r1 ; r1, a)")) == "h(r1 ; r1,a)");
    CHECK(print_proof(P("a ; (a ; a)")) == "a ; (a ; a)");

    Theory clash = parse_theory("sig a/0 b/0\nrule a : a => b\n");
    CHECK_THROWS_AS(parse_proof("a", clash.signature, clash.rules), AmbiguousIdent);
    CHECK_THROWS_AS(P("r1 ;"), ParseError);
    CHECK_THROWS_AS(P("f(a, b)"), ArityError);
    CHECK_THROWS_AS(P("q(a)"), UnknownSymbol);
}

TEST_CASE("proof term print/parse round-trip") {
    Gen gen(34);
    for (int i = 0; i < 500; ++i) {
        ProofTerm pi = gen.proof(rex_random_symbols(), rex_rule_arities(), 5);
        CHECK(P(print_proof(pi)) == pi);
    }
}
