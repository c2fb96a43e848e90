#include "lexer.hpp"

#include <cctype>
#include <cstdlib>

#include "qpd/qasm/ast.hpp"

namespace qpd::qasm {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

}  // namespace

std::vector<Token> tokenize(const std::string& source) {
    std::vector<Token> tokens;
    int line = 1, column = 1;
    std::size_t i = 0;
    const std::size_t n = source.size();

    auto advance = [&](std::size_t count) {
        for (std::size_t k = 0; k < count && i < n; ++k, ++i) {
            if (source[i] == '\n') {
                ++line;
                column = 1;
            } else {
                ++column;
            }
        }
    };

    while (i < n) {
        char c = source[i];
        if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            advance(1);
            continue;
        }
        if (c == '/' && i + 1 < n && source[i + 1] == '/') {
            while (i < n && source[i] != '\n') advance(1);
            continue;
        }
        Token tok;
        tok.line = line;
        tok.column = column;
        if (ident_start(c)) {
            std::size_t j = i;
            while (j < n && ident_char(source[j])) ++j;
            tok.kind = TokenKind::Identifier;
            tok.text = source.substr(i, j - i);
            advance(j - i);
            tokens.push_back(std::move(tok));
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '.' && i + 1 < n && std::isdigit(static_cast<unsigned char>(source[i + 1])))) {
            std::size_t j = i;
            bool is_real = false;
            while (j < n && std::isdigit(static_cast<unsigned char>(source[j]))) ++j;
            if (j < n && source[j] == '.') {
                is_real = true;
                ++j;
                while (j < n && std::isdigit(static_cast<unsigned char>(source[j]))) ++j;
            }
            if (j < n && (source[j] == 'e' || source[j] == 'E')) {
                std::size_t k = j + 1;
                if (k < n && (source[k] == '+' || source[k] == '-')) ++k;
                if (k < n && std::isdigit(static_cast<unsigned char>(source[k]))) {
                    is_real = true;
                    j = k;
                    while (j < n && std::isdigit(static_cast<unsigned char>(source[j]))) ++j;
                }
            }
            tok.text = source.substr(i, j - i);
            if (is_real) {
                tok.kind = TokenKind::Real;
                tok.real_value = std::strtod(tok.text.c_str(), nullptr);
            } else {
                tok.kind = TokenKind::Integer;
                tok.int_value = std::strtoll(tok.text.c_str(), nullptr, 10);
                tok.real_value = static_cast<double>(tok.int_value);
            }
            advance(j - i);
            tokens.push_back(std::move(tok));
            continue;
        }
        if (c == '"') {
            std::size_t j = i + 1;
            while (j < n && source[j] != '"' && source[j] != '\n') ++j;
            if (j >= n || source[j] != '"')
                throw ParseError("unterminated string literal", line, column);
            tok.kind = TokenKind::String;
            tok.text = source.substr(i + 1, j - i - 1);
            advance(j - i + 1);
            tokens.push_back(std::move(tok));
            continue;
        }
        if (c == '-' && i + 1 < n && source[i + 1] == '>') {
            tok.kind = TokenKind::Symbol;
            tok.text = "->";
            advance(2);
            tokens.push_back(std::move(tok));
            continue;
        }
        if (c == '=' && i + 1 < n && source[i + 1] == '=') {
            tok.kind = TokenKind::Symbol;
            tok.text = "==";
            advance(2);
            tokens.push_back(std::move(tok));
            continue;
        }
        if (std::string(";,()[]{}+-*/^").find(c) != std::string::npos) {
            tok.kind = TokenKind::Symbol;
            tok.text = std::string(1, c);
            advance(1);
            tokens.push_back(std::move(tok));
            continue;
        }
        throw ParseError(std::string("unexpected character '") + c + "'", line, column);
    }

    Token eof;
    eof.kind = TokenKind::Eof;
    eof.line = line;
    eof.column = column;
    tokens.push_back(eof);
    return tokens;
}

}  // namespace qpd::qasm
