#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "strata/cli.hpp"
#include "strata/error.hpp"
#include "strata/proof.hpp"
#include "strata/serialize.hpp"
#include "strata/strategy.hpp"
#include "strata/term_ars.hpp"
#include "strata/theory.hpp"

#include <algorithm>
#include <sstream>

namespace py = pybind11;
using namespace strata;

namespace {

std::map<std::string, Term> subst_to_map(const Substitution& s) {
    return {s.begin(), s.end()};
}

Substitution map_to_subst(const std::map<std::string, Term>& m) {
    Substitution s;
    for (const auto& [k, v] : m) s.bind(k, v);
    return s;
}

TermStrategy intensional(const Theory& th, const std::string& name) {
    if (name == "innermost") return innermost(th.rules);
    if (name == "rightmost-innermost") return rightmost_innermost(th.rules);
    if (name == "all") return all_steps(th.rules);
    throw Error("unknown intensional strategy '" + name + "'");
}

py::tuple label_tuple(const StepLabel& l) {
    return py::make_tuple(l.position.to_string(), l.rule, subst_to_map(l.subst));
}

} // namespace

PYBIND11_MODULE(_strata, m) {
    m.doc() = "Strategic first-order term rewriting";

    auto base = py::register_exception<Error>(m, "StrataError");
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<FuelExhausted>(m, "FuelExhausted", base.ptr());
    py::register_exception<ComposeError>(m, "ComposeError", base.ptr());
    py::register_exception<InvalidPosition>(m, "InvalidPosition", base.ptr());

    py::class_<Term>(m, "Term")
        .def_property_readonly("is_var", &Term::is_var)
        .def_property_readonly("name", &Term::name)
        .def_property_readonly("args", [](const Term& t) { return std::vector<Term>(t.args().begin(), t.args().end()); })
        .def_property_readonly("size", &Term::size)
        .def("__str__", &print_term)
        .def("__repr__", [](const Term& t) { return "Term(" + print_term(t) + ")"; })
        .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
        .def("__lt__", [](const Term& a, const Term& b) { return a < b; })
        .def("__hash__", &Term::hash);

    py::class_<Theory>(m, "Theory")
        .def_property_readonly("rule_labels", [](const Theory& th) {
            std::vector<std::string> out;
            for (const auto& r : th.rules) out.push_back(r.label());
            return out;
        })
        .def_readonly("strategy_names", &Theory::strategy_names)
        .def("term", &Theory::term, py::arg("text"))
        .def("strategy_text", [](const Theory& th, const std::string& text) { return print_strategy(th.strategy(text)); });

    m.def("parse_theory", &parse_theory, py::arg("text"));
    m.def("load_theory", [](const std::string& path) { return load_theory(path); }, py::arg("path"));

    m.def("positions", [](const Term& t) {
        std::vector<std::string> out;
        for (const auto& p : positions(t)) out.push_back(p.to_string());
        return out;
    });
    m.def("subterm_at", [](const Term& t, const std::string& p) { return subterm_at(t, Position::parse(p)); });
    m.def("replace_at", [](const Term& t, const std::string& p, const Term& s) {
        return replace_at(t, Position::parse(p), s);
    });
    m.def("match", [](const Term& pattern, const Term& subject) -> std::optional<std::map<std::string, Term>> {
        auto s = match(pattern, subject);
        if (!s) return std::nullopt;
        return subst_to_map(*s);
    });
    m.def("apply_subst", [](const std::map<std::string, Term>& s, const Term& t) { return apply_subst(map_to_subst(s), t); });

    m.def("rewrite_at", [](const Theory& th, const Term& t, const std::string& label, const std::string& p)
              -> std::optional<Term> {
        auto step = rewrite_at(t, th.rules.at(label), Position::parse(p));
        if (!step) return std::nullopt;
        return step->target;
    });
    m.def("all_redexes", [](const Theory& th, const Term& t) {
        py::list out;
        for (const auto& l : all_redexes(t, th.rules)) out.append(label_tuple(l));
        return out;
    });

    m.def("infer", [](const Theory& th, const std::string& proof) {
        auto s = infer(parse_proof(proof, th.signature, th.rules), th.rules);
        return py::make_tuple(s.source, s.target);
    });
    m.def("check_proof", [](const Theory& th, const std::string& proof, const Term& from, const Term& to) {
        return check(parse_proof(proof, th.signature, th.rules), from, to, th.rules);
    });
    m.def("canonical_proof", [](const Theory& th, const std::string& proof) {
        return print_proof(parse_proof(proof, th.signature, th.rules));
    });

    m.def(
        "eval",
        [](const Theory& th, const std::string& strategy, const Term& t, std::size_t fuel) -> std::optional<Term> {
            auto r = eval(th.strategy(strategy), t, th.rules, fuel);
            if (r.is_stk()) return std::nullopt;
            return r.value();
        },
        py::arg("theory"), py::arg("strategy"), py::arg("term"), py::arg("fuel") = 10000,
        "Apply a strategy; None stands for stk.");
    m.def("check_invariant", &check_invariant, py::arg("pattern"), py::arg("term"));

    m.def(
        "normal_forms",
        [](const Theory& th, const Term& t, const std::string& name, std::size_t fuel) {
            auto forms = ars::normal_forms_under(TermSystem(th.rules), intensional(th, name), t, fuel);
            return std::vector<Term>(forms.begin(), forms.end());
        },
        py::arg("theory"), py::arg("term"), py::arg("intensional") = "rightmost-innermost", py::arg("fuel") = 10000);
    m.def(
        "derive",
        [](const Theory& th, const Term& t, std::size_t depth, const std::string& name) {
            auto ds = ars::extension(TermSystem(th.rules), intensional(th, name), t, depth);
            std::vector<std::string> out;
            for (const auto& d : ds) out.push_back(format_derivation(d));
            std::sort(out.begin(), out.end());
            return out;
        },
        py::arg("theory"), py::arg("term"), py::arg("depth"), py::arg("intensional") = "all");
    m.def(
        "choose",
        [](const Theory& th, const Term& t, const std::string& name) {
            py::list out;
            for (const auto& l : intensional(th, name).choose(TracedTerm::initial(t))) out.append(label_tuple(l));
            return out;
        },
        py::arg("theory"), py::arg("term"), py::arg("intensional"));

    m.def("run_cli", [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    });
}
