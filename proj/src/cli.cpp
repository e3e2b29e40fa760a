#include "strata/cli.hpp"

#include "strata/error.hpp"
#include "strata/proof.hpp"
#include "strata/serialize.hpp"
#include "strata/strategy.hpp"
#include "strata/term_ars.hpp"
#include "strata/theory.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <optional>

namespace strata::cli {

namespace {

constexpr std::size_t kDefaultFuel = 10000;

struct Options {
    std::string file;
    std::size_t fuel = kDefaultFuel;
    std::string term;
    std::string strategy;
    std::string intensional;
    std::size_t depth = 0;
    bool json = false;
    std::string proof;
    std::optional<std::string> from;
    std::optional<std::string> to;
};

TermStrategy intensional_by_name(const std::string& name, const RuleSet& rs) {
    if (name == "innermost") return innermost(rs);
    if (name == "rightmost-innermost") return rightmost_innermost(rs);
    return all_steps(rs);
}

int cmd_eval(const Options& o, std::ostream& out, std::ostream& err) {
    Theory th = load_theory(o.file);
    StrategyExpr s = th.strategy(o.strategy);
    Term t = th.term(o.term);
    try {
        auto r = eval(s, t, th.rules, o.fuel);
        out << to_string(r) << '\n';
        return r.is_value() ? kOk : kNegative;
    } catch (const FuelExhausted& e) {
        err << "fuel exhausted after " << o.fuel << " unit(s)\n";
        return kCutoff;
    }
}

int cmd_normalize(const Options& o, std::ostream& out, std::ostream& err) {
    Theory th = load_theory(o.file);
    Term t = th.term(o.term);
    TermSystem sys(th.rules);
    try {
        auto forms = ars::normal_forms_under(sys, intensional_by_name(o.intensional, th.rules), t, o.fuel);
        std::vector<std::string> lines;
        for (const auto& f : forms) lines.push_back(print_term(f));
        std::sort(lines.begin(), lines.end());
        for (const auto& l : lines) out << l << '\n';
        return kOk;
    } catch (const FuelExhausted& e) {
        err << e.what() << '\n';
        return kCutoff;
    }
}

int cmd_derive(const Options& o, std::ostream& out, std::ostream&) {
    Theory th = load_theory(o.file);
    Term t = th.term(o.term);
    TermSystem sys(th.rules);
    auto ds = ars::extension(sys, intensional_by_name(o.intensional, th.rules), t, o.depth);
    std::vector<std::pair<std::string, const Derivation*>> rows;
    for (const auto& d : ds) rows.emplace_back(format_derivation(d), &d);
    std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    if (o.json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& [_, d] : rows) arr.push_back(derivation_to_json(*d));
        out << arr.dump(2) << '\n';
    } else {
        for (const auto& [line, _] : rows) out << line << '\n';
    }
    return kOk;
}

int cmd_check_proof(const Options& o, std::ostream& out, std::ostream& err) {
    Theory th = load_theory(o.file);
    ProofTerm pi = parse_proof(o.proof, th.signature, th.rules);
    std::optional<Term> from, to;
    if (o.from) from = th.term(*o.from);
    if (o.to) to = th.term(*o.to);
    std::optional<Sequent> inferred;
    try {
        inferred = infer(pi, th.rules);
    } catch (const Error& e) {
        out << "error: " << e.what() << '\n';
        return kCutoff;
    }
    const Sequent& s = *inferred;
    out << print_term(s.source) << " -> " << print_term(s.target) << '\n';
    if ((from && !(*from == s.source)) || (to && !(*to == s.target))) {
        err << "sequent does not match the expected " << (from ? print_term(*from) : "_") << " -> "
            << (to ? print_term(*to) : "_") << '\n';
        return kNegative;
    }
    return kOk;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Strategic term rewriting: strategy evaluation, normalization, derivation trees, proof checking",
                 "strata"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--file", o.file, "Theory file (sig/rule/strat declarations)");
    app.add_option("--fuel", o.fuel, "Evaluation / exploration budget")->capture_default_str();

    auto* eval_cmd = app.add_subcommand("eval", "Apply a strategy expression to a term");
    eval_cmd->add_option("--strategy", o.strategy, "Strategy expression or declared name")->required();
    eval_cmd->add_option("--term", o.term, "Input term")->required();

    const std::vector<std::string> intensional_names{"innermost", "rightmost-innermost", "all"};

    auto* normalize_cmd = app.add_subcommand("normalize", "Normal forms under an intensional strategy");
    normalize_cmd->add_option("--term", o.term, "Input term")->required();
    normalize_cmd->add_option("--intensional", o.intensional, "innermost | rightmost-innermost | all")
        ->check(CLI::IsMember(intensional_names))
        ->default_val("rightmost-innermost");

    auto* derive_cmd = app.add_subcommand("derive", "Enumerate the bounded extension of an intensional strategy");
    derive_cmd->add_option("--term", o.term, "Input term")->required();
    derive_cmd->add_option("--depth", o.depth, "Maximum derivation length")->required();
    derive_cmd->add_option("--intensional", o.intensional, "innermost | rightmost-innermost | all")
        ->check(CLI::IsMember(intensional_names))
        ->default_val("all");
    derive_cmd->add_flag("--json", o.json, "Emit JSON instead of text");

    auto* check_cmd = app.add_subcommand("check-proof", "Infer and check the sequent proved by a proof term");
    check_cmd->add_option("--proof", o.proof, "Proof term")->required();
    check_cmd->add_option("--from", o.from, "Expected source term");
    check_cmd->add_option("--to", o.to, "Expected target term");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kUsage;
    }
    if (o.file.empty()) {
        err << "usage error: --file is required\n";
        return kUsage;
    }
    if (o.fuel == 0) {
        err << "usage error: --fuel must be positive\n";
        return kUsage;
    }

    try {
        if (eval_cmd->parsed()) return cmd_eval(o, out, err);
        if (normalize_cmd->parsed()) return cmd_normalize(o, out, err);
        if (derive_cmd->parsed()) return cmd_derive(o, out, err);
        return cmd_check_proof(o, out, err);
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kUsage;
    }
}

} // namespace strata::cli
