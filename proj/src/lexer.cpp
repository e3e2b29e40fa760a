#include "lexer.hpp"

#include <cctype>

namespace strata::detail {

const char* describe(Tok kind) {
    switch (kind) {
    case Tok::Ident: return "identifier";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::Comma: return "','";
    case Tok::Semi: return "';'";
    case Tok::Dot: return "'.'";
    case Tok::Colon: return "':'";
    case Tok::Equals: return "'='";
    case Tok::Arrow: return "'=>'";
    case Tok::Slash: return "'/'";
    case Tok::End: return "end of input";
    }
    return "?";
}

namespace {

bool ident_start(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

} // namespace

std::vector<Token> tokenize(std::string_view text) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < text.size()) {
        char c = text[i];
        int column = static_cast<int>(i) + 1;
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (ident_start(c)) {
            std::size_t j = i + 1;
            while (j < text.size() && ident_char(text[j])) ++j;
            out.push_back({Tok::Ident, text.substr(i, j - i), column});
            i = j;
            continue;
        }
        Tok kind;
        std::size_t len = 1;
        switch (c) {
        case '(': kind = Tok::LParen; break;
        case ')': kind = Tok::RParen; break;
        case ',': kind = Tok::Comma; break;
        case ';': kind = Tok::Semi; break;
        case '.': kind = Tok::Dot; break;
        case ':': kind = Tok::Colon; break;
        case '/': kind = Tok::Slash; break;
        case '=':
            if (i + 1 < text.size() && text[i + 1] == '>') {
                kind = Tok::Arrow;
                len = 2;
            } else {
                kind = Tok::Equals;
            }
            break;
        default:
            throw ParseError(std::string("unexpected character '") + c + "'", 1, column);
        }
        out.push_back({kind, text.substr(i, len), column});
        i += len;
    }
    out.push_back({Tok::End, {}, static_cast<int>(text.size()) + 1});
    return out;
}

const Token& TokenStream::expect(Tok kind, const char* context) {
    if (!at(kind)) {
        const Token& t = peek();
        std::string found = t.kind == Tok::End ? "end of input" : "'" + std::string(t.text) + "'";
        fail(std::string("expected ") + describe(kind) + " " + context + ", found " + found);
    }
    return next();
}

Term variable_or_fail(const Token& ident, bool applied) {
    std::string name(ident.text);
    if (applied) throw UnknownSymbol("unknown function symbol '" + name + "'");
    if (std::isdigit(static_cast<unsigned char>(name.front())))
        throw UnknownSymbol("undeclared constant '" + name + "'");
    return Term::var(std::move(name));
}

Term parse_term(TokenStream& in, const Signature& sig) {
    const Token& head = in.expect(Tok::Ident, "at start of term");
    const Symbol* symbol = sig.find(head.text);
    std::vector<Term> args;
    bool applied = false;
    if (in.accept(Tok::LParen)) {
        applied = true;
        if (!in.at(Tok::RParen)) {
            do {
                args.push_back(parse_term(in, sig));
            } while (in.accept(Tok::Comma));
        }
        in.expect(Tok::RParen, "to close argument list");
    }
    if (symbol == nullptr) return variable_or_fail(head, applied);
    if (args.size() != symbol->arity) {
        throw ArityError("symbol '" + symbol->name + "' expects " + std::to_string(symbol->arity) +
                         " argument(s), got " + std::to_string(args.size()));
    }
    return Term::app(*symbol, std::move(args));
}

} // namespace strata::detail
