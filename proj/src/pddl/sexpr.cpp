#include "macopp/pddl/sexpr.hpp"

#include <cctype>

namespace macopp::pddl {

ParseError::ParseError(const std::string& message, SourcePos pos)
    : Error(std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      pos_(pos),
      message_(message) {}

ParseError::ParseError(const std::string& file, const std::string& message, SourcePos pos)
    : Error(file + ":" + std::to_string(pos.line) + ":" + std::to_string(pos.column) + ": " + message),
      pos_(pos),
      message_(message) {}

std::string SExpr::str() const {
    if (!is_list) return atom;
    std::string out = "(";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ' ';
        out += items[i].str();
    }
    return out + ")";
}

namespace {

class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    std::vector<SExpr> read_all() {
        std::vector<SExpr> out;
        skip_space();
        while (i_ < text_.size()) {
            out.push_back(read());
            skip_space();
        }
        return out;
    }

private:
    SExpr read() {
        SourcePos start = pos_;
        char c = text_[i_];
        if (c == ')') throw ParseError("unexpected ')'", start);
        if (c == '(') {
            advance();
            SExpr list;
            list.is_list = true;
            list.pos = start;
            skip_space();
            while (true) {
                if (i_ >= text_.size()) throw ParseError("unterminated list", start);
                if (text_[i_] == ')') {
                    advance();
                    return list;
                }
                list.items.push_back(read());
                skip_space();
            }
        }
        SExpr atom;
        atom.pos = start;
        while (i_ < text_.size()) {
            char ch = text_[i_];
            if (std::isspace(static_cast<unsigned char>(ch)) || ch == '(' || ch == ')' || ch == ';') break;
            if (!std::isprint(static_cast<unsigned char>(ch)))
                throw ParseError(std::string("invalid character in symbol"), pos_);
            atom.atom.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
            advance();
        }
        return atom;
    }

    void skip_space() {
        while (i_ < text_.size()) {
            char c = text_[i_];
            if (c == ';') {
                while (i_ < text_.size() && text_[i_] != '\n') advance();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (text_[i_] == '\n') {
            ++pos_.line;
            pos_.column = 1;
        } else {
            ++pos_.column;
        }
        ++i_;
    }

    std::string_view text_;
    std::size_t i_ = 0;
    SourcePos pos_;
};

}  // namespace

std::vector<SExpr> read_sexprs(std::string_view text) { return Reader(text).read_all(); }

}  // namespace macopp::pddl
