#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace algorec::java {

struct ParseError : std::runtime_error {
    ParseError(std::string file, int line, int col, const std::string& message)
        : std::runtime_error(file + ":" + std::to_string(line) + ":" +
                             std::to_string(col) + ": " + message),
          file(std::move(file)), line(line), col(col), message(message) {}

    std::string file;
    int line;
    int col;
    std::string message;
};

enum class TokenType {
    Identifier,
    Keyword,
    IntLiteral,
    FloatLiteral,
    CharLiteral,
    StringLiteral,
    Punct,
    End,
};

struct Token {
    TokenType type = TokenType::End;
    std::string text;
    int line = 0; // 1-based
    int col = 0;
    int endLine = 0;
    int endCol = 0; // inclusive

    bool is(TokenType t) const { return type == t; }
    bool is(TokenType t, const char* s) const { return type == t && text == s; }
    bool isPunct(const char* s) const { return is(TokenType::Punct, s); }
    bool isKeyword(const char* s) const { return is(TokenType::Keyword, s); }
    bool isIdent() const { return type == TokenType::Identifier; }
    bool isIdent(const char* s) const { return is(TokenType::Identifier, s); }
};

/// Tokenizes Java source. Comments and whitespace are skipped; positions are
/// 1-based. Throws ParseError on malformed literals.
std::vector<Token> lex(const std::string& source, const std::string& file);

} // namespace algorec::java
