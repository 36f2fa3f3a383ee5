#pragma once

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace birfol::frontend {

struct Location {
    int line = 1;
    int column = 1;
    std::string to_string() const { return std::to_string(line) + ":" + std::to_string(column); }
};

class ParseError : public std::runtime_error {
public:
    ParseError(Location at, const std::string& what) : std::runtime_error(what), at_(at) {}
    const Location& where() const { return at_; }

private:
    Location at_;
};

enum class Tok { ident, number, string, punct, newline, end };

struct Token {
    Tok kind;
    std::string text;
    Location at;
    std::size_t offset = 0;  // byte offset of the token start
};

// Newlines inside parentheses or brackets are dropped so that long
// expressions may span lines; braces keep them since they hold statements.
inline std::vector<Token> tokenize(const std::string& src) {
    std::vector<Token> out;
    std::size_t i = 0;
    Location at;
    int depth = 0;
    auto advance = [&](std::size_t n) {
        for (std::size_t k = 0; k < n && i < src.size(); ++k, ++i) {
            unsigned char c = static_cast<unsigned char>(src[i]);
            if (c == '\n') {
                ++at.line;
                at.column = 1;
            } else if ((c & 0xC0) != 0x80) {
                ++at.column;
            }
        }
    };
    while (i < src.size()) {
        char c = src[i];
        if (c == '#') {
            while (i < src.size() && src[i] != '\n') advance(1);
            continue;
        }
        if (c == '\n') {
            if (depth == 0) out.push_back({Tok::newline, "\n", at, i});
            advance(1);
            continue;
        }
        if (std::isspace(static_cast<unsigned char>(c))) {
            advance(1);
            continue;
        }
        Token t{Tok::punct, "", at, i};
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t j = i;
            while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
            t.kind = Tok::ident;
            t.text = src.substr(i, j - i);
            advance(j - i);
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t j = i;
            while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
            t.kind = Tok::number;
            t.text = src.substr(i, j - i);
            advance(j - i);
        } else if (c == '"') {
            std::size_t j = i + 1;
            while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
            if (j >= src.size() || src[j] != '"') throw ParseError(at, "unterminated string");
            t.kind = Tok::string;
            t.text = src.substr(i + 1, j - i - 1);
            advance(j + 1 - i);
        } else {
            static const char* two[] = {"==", "->"};
            std::string op;
            for (const char* p : two)
                if (src.compare(i, 2, p) == 0) op = p;
            if (op.empty()) {
                static const std::string single = "+-*/^()[]{}:,;=~";
                if (single.find(c) == std::string::npos)
                    throw ParseError(at, std::string("unexpected character '") + c + "'");
                op = std::string(1, c);
            }
            if (op == "(" || op == "[") ++depth;
            if ((op == ")" || op == "]") && depth > 0) --depth;
            t.text = op;
            advance(op.size());
        }
        out.push_back(std::move(t));
    }
    out.push_back({Tok::newline, "\n", at, src.size()});
    out.push_back({Tok::end, "", at, src.size()});
    return out;
}

}  // namespace birfol::frontend
