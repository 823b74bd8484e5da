#include "algorec/java_lexer.hpp"

#include <array>
#include <cctype>
#include <unordered_set>

namespace algorec::java {

namespace {

const std::unordered_set<std::string> kKeywords = {
    "abstract", "assert",   "boolean",  "break",      "byte",      "case",
    "catch",    "char",     "class",    "const",      "continue",  "default",
    "do",       "double",   "else",     "enum",       "extends",   "final",
    "finally",  "float",    "for",      "goto",       "if",        "implements",
    "import",   "instanceof", "int",    "interface",  "long",      "native",
    "new",      "package",  "private",  "protected",  "public",    "return",
    "short",    "static",   "strictfp", "super",      "switch",    "synchronized",
    "this",     "throw",    "throws",   "transient",  "try",       "void",
    "volatile", "while",
};

// Longest match first.
const std::array<const char*, 38> kOperators = {
    ">>>=", "...",  "<<=", ">>=", ">>>", "->", "::", "==", "!=", "<=",
    ">=",   "&&",   "||",  "++",  "--",  "+=", "-=", "*=", "/=", "%=",
    "&=",   "|=",   "^=",  "<<",  ">>",  "+",  "-",  "*",  "/",  "%",
    "=",    "<",    ">",   "!",   "~",   "&",  "|",  "^",
};

struct Lexer {
    const std::string& src;
    const std::string& file;
    std::size_t pos = 0;
    int line = 1;
    int col = 1;

    Lexer(const std::string& s, const std::string& f) : src(s), file(f) {}

    bool done() const { return pos >= src.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos + ahead < src.size() ? src[pos + ahead] : '\0';
    }
    char advance() {
        char c = src[pos++];
        if (c == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
        return c;
    }
    [[noreturn]] void fail(const std::string& message) const {
        throw ParseError(file, line, col, message);
    }

    void skipTrivia() {
        while (!done()) {
            char c = peek();
            if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else if (c == '/' && peek(1) == '/') {
                while (!done() && peek() != '\n') advance();
            } else if (c == '/' && peek(1) == '*') {
                advance();
                advance();
                while (!done() && !(peek() == '*' && peek(1) == '/')) advance();
                if (done()) fail("unterminated block comment");
                advance();
                advance();
            } else {
                break;
            }
        }
    }

    Token make(TokenType type, std::string text, int l, int c) const {
        Token t;
        t.type = type;
        t.text = std::move(text);
        t.line = l;
        t.col = c;
        t.endLine = line;
        t.endCol = col > 1 ? col - 1 : col;
        return t;
    }

    Token identifier() {
        int l = line, c = col;
        std::string text;
        while (!done() && (std::isalnum(static_cast<unsigned char>(peek())) ||
                           peek() == '_' || peek() == '$')) {
            text += advance();
        }
        TokenType type =
            kKeywords.count(text) ? TokenType::Keyword : TokenType::Identifier;
        return make(type, std::move(text), l, c);
    }

    Token number() {
        int l = line, c = col;
        std::string text;
        bool isFloat = false;
        auto digits = [&](auto pred) {
            while (!done() && (pred(peek()) || peek() == '_')) text += advance();
        };
        if (peek() == '0' && (peek(1) == 'x' || peek(1) == 'X')) {
            text += advance();
            text += advance();
            digits([](char ch) { return std::isxdigit(static_cast<unsigned char>(ch)); });
        } else if (peek() == '0' && (peek(1) == 'b' || peek(1) == 'B')) {
            text += advance();
            text += advance();
            digits([](char ch) { return ch == '0' || ch == '1'; });
        } else {
            digits([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
            if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
                isFloat = true;
                text += advance();
                digits([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
            }
            if (peek() == 'e' || peek() == 'E') {
                isFloat = true;
                text += advance();
                if (peek() == '+' || peek() == '-') text += advance();
                digits([](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
            }
        }
        if (peek() == 'f' || peek() == 'F' || peek() == 'd' || peek() == 'D') {
            isFloat = true;
            text += advance();
        } else if (peek() == 'l' || peek() == 'L') {
            text += advance();
        }
        return make(isFloat ? TokenType::FloatLiteral : TokenType::IntLiteral,
                    std::move(text), l, c);
    }

    void escape(std::string& text) {
        text += advance(); // backslash
        if (done()) fail("unterminated escape sequence");
        text += advance();
    }

    Token charLiteral() {
        int l = line, c = col;
        std::string text;
        text += advance(); // opening quote
        while (!done() && peek() != '\'') {
            if (peek() == '\\') {
                escape(text);
            } else if (peek() == '\n') {
                fail("unterminated char literal");
            } else {
                text += advance();
            }
        }
        if (done()) fail("unterminated char literal");
        text += advance();
        return make(TokenType::CharLiteral, std::move(text), l, c);
    }

    Token stringLiteral() {
        int l = line, c = col;
        std::string text;
        if (peek(1) == '"' && peek(2) == '"') { // text block
            text += advance();
            text += advance();
            text += advance();
            while (!done() &&
                   !(peek() == '"' && peek(1) == '"' && peek(2) == '"')) {
                text += advance();
            }
            if (done()) fail("unterminated text block");
            text += advance();
            text += advance();
            text += advance();
        } else {
            text += advance();
            while (!done() && peek() != '"') {
                if (peek() == '\\') {
                    escape(text);
                } else if (peek() == '\n') {
                    fail("unterminated string literal");
                } else {
                    text += advance();
                }
            }
            if (done()) fail("unterminated string literal");
            text += advance();
        }
        return make(TokenType::StringLiteral, std::move(text), l, c);
    }

    Token punct() {
        int l = line, c = col;
        for (const char* op : kOperators) {
            std::size_t len = std::string::npos;
            len = std::char_traits<char>::length(op);
            if (src.compare(pos, len, op) == 0) {
                for (std::size_t i = 0; i < len; ++i) advance();
                return make(TokenType::Punct, op, l, c);
            }
        }
        char ch = advance();
        return make(TokenType::Punct, std::string(1, ch), l, c);
    }

    std::vector<Token> run() {
        std::vector<Token> tokens;
        while (true) {
            skipTrivia();
            if (done()) break;
            char c = peek();
            if (std::isalpha(static_cast<unsigned char>(c)) || c == '_' || c == '$') {
                tokens.push_back(identifier());
            } else if (std::isdigit(static_cast<unsigned char>(c))) {
                tokens.push_back(number());
            } else if (c == '\'') {
                tokens.push_back(charLiteral());
            } else if (c == '"') {
                tokens.push_back(stringLiteral());
            } else {
                tokens.push_back(punct());
            }
        }
        Token end;
        end.type = TokenType::End;
        end.line = line;
        end.col = col;
        end.endLine = line;
        end.endCol = col;
        tokens.push_back(end);
        return tokens;
    }
};

} // namespace

std::vector<Token> lex(const std::string& source, const std::string& file) {
    return Lexer(source, file).run();
}

} // namespace algorec::java
