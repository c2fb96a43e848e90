#pragma once

#include <string>
#include <vector>

namespace qpd::qasm {

enum class TokenKind {
    Identifier,
    Real,
    Integer,
    String,
    Symbol,  // ; , ( ) [ ] { } + - * / ^ -> ==
    Eof,
};

struct Token {
    TokenKind kind = TokenKind::Eof;
    std::string text;
    double real_value = 0.0;
    long long int_value = 0;
    int line = 1, column = 1;
};

/// Tokenizes OpenQASM 2.0 source. `//` comments are skipped. Throws
/// ParseError on stray characters or malformed numbers.
std::vector<Token> tokenize(const std::string& source);

}  // namespace qpd::qasm
