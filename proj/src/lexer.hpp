#pragma once

// Shared tokenizer for the term, proof-term, strategy and theory grammars.

#include "strata/error.hpp"
#include "strata/term.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace strata::detail {

enum class Tok { Ident, LParen, RParen, Comma, Semi, Dot, Colon, Equals, Arrow, Slash, End };

struct Token {
    Tok kind;
    std::string_view text;
    int column; // 1-based
};

const char* describe(Tok kind);

std::vector<Token> tokenize(std::string_view text);

class TokenStream {
public:
    explicit TokenStream(std::string_view text) : tokens_(tokenize(text)) {}

    const Token& peek(std::size_t ahead = 0) const {
        std::size_t i = pos_ + ahead;
        return i < tokens_.size() ? tokens_[i] : tokens_.back();
    }
    const Token& next() {
        const Token& t = peek();
        if (pos_ + 1 < tokens_.size()) ++pos_;
        return t;
    }
    bool at(Tok kind) const { return peek().kind == kind; }
    bool accept(Tok kind) {
        if (!at(kind)) return false;
        next();
        return true;
    }
    const Token& expect(Tok kind, const char* context);
    [[noreturn]] void fail(const std::string& message) const { fail_at(peek(), message); }
    [[noreturn]] static void fail_at(const Token& token, const std::string& message) {
        throw ParseError(message, 1, token.column);
    }
    void expect_end(const char* context) { expect(Tok::End, context); }

private:
    std::vector<Token> tokens_;
    std::size_t pos_ = 0;
};

/// term := ident | ident "(" term ("," term)* ")"
Term parse_term(TokenStream& in, const Signature& sig);

/// Resolves an identifier that was not declared as a symbol to a variable.
Term variable_or_fail(const Token& ident, bool applied);

} // namespace strata::detail
