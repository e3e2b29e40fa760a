#include "strata/theory.hpp"

#include "lexer.hpp"
#include "strata/error.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace strata {

namespace {

using detail::Tok;
using detail::TokenStream;

class TheoryReader {
public:
    Theory read(std::string_view text) {
        int line_no = 0;
        std::size_t start = 0;
        while (start <= text.size()) {
            std::size_t end = text.find('\n', start);
            if (end == std::string_view::npos) end = text.size();
            ++line_no;
            std::string_view line = text.substr(start, end - start);
            if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
            if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
            try {
                declaration(line);
            } catch (const ParseError& e) {
                throw e.relocated(line_no, 0);
            } catch (const Error& e) {
                throw ParseError(e.what(), line_no, item_column_);
            }
            if (end == text.size()) break;
            start = end + 1;
        }
        return std::move(theory_);
    }

private:
    void declaration(std::string_view line) {
        TokenStream in(line);
        if (in.at(Tok::End)) return;
        const auto& keyword = in.expect(Tok::Ident, "at start of declaration");
        item_column_ = keyword.column;
        if (keyword.text == "sig") return signature(in);
        if (keyword.text == "rule") return rule(in);
        if (keyword.text == "strat") return strategy(in, line);
        TokenStream::fail_at(keyword, "unknown declaration '" + std::string(keyword.text) +
                                          "' (expected sig, rule or strat)");
    }

    void signature(TokenStream& in) {
        if (in.at(Tok::End)) in.fail("expected at least one symbol declaration");
        while (!in.at(Tok::End)) {
            const auto& name = in.expect(Tok::Ident, "in symbol declaration");
            item_column_ = name.column;
            in.expect(Tok::Slash, "after symbol name");
            const auto& arity = in.expect(Tok::Ident, "for symbol arity");
            std::size_t value = 0;
            for (char c : arity.text) {
                if (!std::isdigit(static_cast<unsigned char>(c))) TokenStream::fail_at(arity, "arity must be a number");
                value = value * 10 + static_cast<std::size_t>(c - '0');
            }
            theory_.signature.declare(Symbol{std::string(name.text), value});
        }
    }

    void rule(TokenStream& in) {
        const auto& label = in.expect(Tok::Ident, "for rule label");
        item_column_ = label.column;
        std::string name(label.text);
        if (is_strategy_keyword(name)) TokenStream::fail_at(label, "rule label '" + name + "' is a strategy keyword");
        if (std::isupper(static_cast<unsigned char>(name.front())))
            TokenStream::fail_at(label, "rule label '" + name + "' must not start with an upper-case letter");
        if (theory_.strategies.contains(name)) TokenStream::fail_at(label, "'" + name + "' already names a strategy");
        in.expect(Tok::Colon, "after rule label");
        item_column_ = in.peek().column;
        Term lhs = detail::parse_term(in, theory_.signature);
        in.expect(Tok::Arrow, "between rule sides");
        item_column_ = in.peek().column;
        Term rhs = detail::parse_term(in, theory_.signature);
        in.expect_end("after rule");
        item_column_ = label.column;
        theory_.rules.add(Rule(std::move(name), std::move(lhs), std::move(rhs)));
    }

    void strategy(TokenStream& in, std::string_view line) {
        const auto& name_tok = in.expect(Tok::Ident, "for strategy name");
        item_column_ = name_tok.column;
        std::string name(name_tok.text);
        if (is_strategy_keyword(name)) TokenStream::fail_at(name_tok, "strategy name '" + name + "' is a keyword");
        if (std::isupper(static_cast<unsigned char>(name.front())))
            TokenStream::fail_at(name_tok, "strategy name '" + name + "' must not start with an upper-case letter");
        if (theory_.rules.find(name) || theory_.strategies.contains(name))
            TokenStream::fail_at(name_tok, "'" + name + "' is already declared");
        const auto& eq = in.expect(Tok::Equals, "after strategy name");
        int offset = eq.column; // body starts right after '='
        item_column_ = offset + 1;
        StrategyExpr body = [&] {
            try {
                return parse_strategy(line.substr(static_cast<std::size_t>(offset)), theory_.signature,
                                      theory_.strategies);
            } catch (const ParseError& e) {
                throw e.relocated(1, offset);
            }
        }();
        theory_.strategies.emplace(name, std::move(body));
        theory_.strategy_names.push_back(std::move(name));
    }

    Theory theory_;
    int item_column_ = 1;
};

} // namespace

Theory parse_theory(std::string_view text) { return TheoryReader().read(text); }

Theory load_theory(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open theory file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_theory(buf.str());
}

} // namespace strata
