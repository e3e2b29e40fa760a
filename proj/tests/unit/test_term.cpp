#include "strata/error.hpp"
#include "strata/term.hpp"

#include "fixtures.hpp"
#include "generators.hpp"
#include "oracles.hpp"

#include <doctest.h>

using namespace strata;
using namespace strata::testing;

namespace {

std::vector<std::string> position_strings(const Term& t) {
    std::vector<std::string> out;
    for (const auto& p : positions(t)) out.push_back(p.to_string());
    return out;
}

} // namespace

TEST_CASE("positions enumerate every node in pre-order") {
    CHECK(position_strings(T("a")) == std::vector<std::string>{"ε"});
    CHECK(position_strings(T("f(g(a))")) == std::vector<std::string>{"ε", "1", "1.1"});
    CHECK(position_strings(T("h(x, b)")) == std::vector<std::string>{"ε", "1", "2"});

    Gen gen(11);
    for (int i = 0; i < 200; ++i) {
        Term t = gen.term(rex_random_symbols(), 4, {"x", "y"}, 0.2);
        CHECK(positions(t).size() == t.size());
    }
}

TEST_CASE("subterm_at") {
    Term t = T("f(g(a))");
    CHECK(subterm_at(t, {}) == t);
    CHECK(subterm_at(t, {1, 1}) == T("a"));
    CHECK_THROWS_AS(subterm_at(t, {2}), InvalidPosition);
    CHECK_THROWS_AS(Position({0}), InvalidPosition);
}

TEST_CASE("replace_at") {
    CHECK(replace_at(T("f(g(a))"), {1, 1}, T("b")) == T("f(g(b))"));
    CHECK(replace_at(T("a"), {}, T("f(b)")) == T("f(b)"));
    CHECK_THROWS_AS(replace_at(T("f(a)"), {1, 1}, T("b")), InvalidPosition);
}

TEST_CASE("replace_at invariants") {
    Gen gen(12);
    for (int i = 0; i < 300; ++i) {
        Term t = gen.term(rex_random_symbols(), 4, {"x"}, 0.1);
        Term s = gen.term(rex_random_symbols(), 3);
        auto ps = positions(t);
        const Position& p = ps[gen.below(ps.size())];
        CHECK(replace_at(t, p, subterm_at(t, p)) == t);
        Term r = replace_at(t, p, s);
        CHECK(subterm_at(r, p) == s);
        auto after = positions(r);
        for (const auto& q : ps) {
            if (!p.is_prefix_of(q)) CHECK(std::find(after.begin(), after.end(), q) != after.end());
        }
    }
}

TEST_CASE("position order and text") {
    CHECK(Position({1}).is_prefix_of(Position({1, 2})));
    CHECK(Position().is_strictly_above(Position({1})));
    CHECK_FALSE(Position({1}).is_strictly_above(Position({1})));
    CHECK_FALSE(Position({1}).is_prefix_of(Position({2, 1})));
    CHECK(Position({1, 2}) < Position({2}));
    CHECK(Position::parse("1.2.3") == Position({1, 2, 3}));
    CHECK(Position::parse("ε").is_root());
    CHECK(Position({2, 10}).to_string() == "2.10");
    CHECK_THROWS_AS(Position::parse("1..2"), ParseError);
}

TEST_CASE("match examples") {
    auto s = match(T("x"), T("g(a)"));
    REQUIRE(s);
    CHECK(*s == Substitution{{"x", T("g(a)")}});

    auto nl = match(T("h(x, x)"), T("h(a, a)"));
    REQUIRE(nl);
    CHECK(*nl == Substitution{{"x", T("a")}});

    CHECK_FALSE(match(T("h(x, x)"), T("h(a, b)")));
    // subject variables are inert constants
    CHECK_FALSE(match(T("a"), T("x")));
    CHECK(match(T("g(x)"), T("g(y)")) == Substitution{{"x", T("y")}});
}

TEST_CASE("apply_subst examples") {
    CHECK(apply_subst({{"x", T("a")}}, T("h(x, x)")) == T("h(a, a)"));
    Term t = T("plus(x, s(y))");
    CHECK(apply_subst({}, t) == t);
    CHECK(apply_subst({{"x", T("a")}}, T("y")) == T("y"));
    // simultaneous: no re-substitution of introduced variables
    CHECK(apply_subst({{"x", T("y")}, {"y", T("a")}}, T("h(x, y)")) == T("h(y, a)"));
}

TEST_CASE("match soundness on random pairs") {
    Gen gen(13);
    int successes = 0;
    for (int i = 0; i < 2000; ++i) {
        Term pattern = gen.term(rex_random_symbols(), 3, {"x", "y"}, 0.35);
        Term subject = gen.chance(0.5) ? apply_subst({{"x", gen.term(rex_random_symbols(), 2)},
                                                      {"y", gen.term(rex_random_symbols(), 2)}},
                                                     pattern)
                                       : gen.term(rex_random_symbols(), 4);
        if (auto s = match(pattern, subject)) {
            ++successes;
            CHECK(apply_subst(*s, pattern) == subject);
        }
    }
    CHECK(successes > 500);
}

TEST_CASE("match is the unique minimal match over a 4-symbol signature") {
    const std::vector<Symbol> sig4{{"a", 0}, {"b", 0}, {"g", 1}, {"h", 2}};
    Gen gen(14);
    auto subjects = all_ground_terms(sig4, 3);
    for (int i = 0; i < 400; ++i) {
        Term pattern = gen.term(sig4, 3, {"x", "y"}, 0.4);
        const Term& subject = gen.pick(subjects);
        auto expected = brute_force_matches(pattern, subject);
        auto got = match(pattern, subject);
        REQUIRE(expected.size() <= 1);
        if (expected.empty()) {
            CHECK_FALSE(got);
        } else {
            REQUIRE(got);
            CHECK(std::map<std::string, Term>(got->begin(), got->end()) == expected.front());
        }
    }
}

TEST_CASE("parse_term") {
    const Signature& sig = rex().signature;
    Term t = parse_term("f(g(a))", sig);
    CHECK(t.is_app());
    CHECK(t.name() == "f");
    CHECK(t.arg(0).arg(0) == Term::constant("a"));
    CHECK(parse_term(" plus ( 0 , s(x) ) ", sig) == T("plus(0,s(x))"));
    CHECK(parse_term("a()", sig) == T("a"));

    Signature f1{{"f", 1}, {"a", 0}, {"b", 0}};
    CHECK_THROWS_AS(parse_term("f(a,b)", f1), ArityError);
    CHECK_THROWS_AS(parse_term("f", f1), ArityError);
    CHECK(parse_term("x", f1) == Term::var("x"));
    CHECK_THROWS_AS(parse_term("k(a)", f1), UnknownSymbol);
    CHECK_THROWS_AS(parse_term("7", f1), UnknownSymbol);

    try {
        parse_term("f(a", f1);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 1);
        CHECK(e.column() == 4);
    }
    CHECK_THROWS_AS(parse_term("f(a) b", f1), ParseError);
    CHECK_THROWS_AS(parse_term("f(a%)", f1), ParseError);
}

TEST_CASE("print_term") {
    CHECK(print_term(Term::var("x")) == "x");
    CHECK(print_term(Term::constant("a")) == "a");
    CHECK(print_term(T("f(g(a))")) == "f(g(a))");
    CHECK(print_term(T("plus(s(0), y)")) == "plus(s(0),y)");
}

TEST_CASE("print/parse round-trip") {
    Gen gen(15);
    for (int i = 0; i < 500; ++i) {
        Term t = gen.term(rex_random_symbols(), 5, {"x", "y", "z1"}, 0.15);
        CHECK(parse_term(print_term(t), rex().signature) == t);
    }
}

TEST_CASE("signature rejects conflicting arities") {
    Signature sig{{"f", 1}};
    CHECK_NOTHROW(sig.declare({"f", 1}));
    CHECK_THROWS_AS(sig.declare({"f", 2}), ArityError);
    CHECK_THROWS_AS(Term::app({"f", 1}, {}), ArityError);
    CHECK(is_identifier("plus_2"));
    CHECK(is_identifier("0"));
    CHECK_FALSE(is_identifier("_x"));
    CHECK_FALSE(is_identifier(""));
}
