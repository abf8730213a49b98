#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "macopp/core/errors.hpp"

namespace macopp::pddl {

struct SourcePos {
    int line = 1;
    int column = 1;
};

class ParseError : public Error {
public:
    ParseError(const std::string& message, SourcePos pos);
    // "file:line:column: message"
    ParseError(const std::string& file, const std::string& message, SourcePos pos);

    SourcePos pos() const { return pos_; }
    const std::string& message() const { return message_; }

private:
    SourcePos pos_;
    std::string message_;
};

struct SExpr {
    bool is_list = false;
    std::string atom;  // lower-cased symbol when !is_list
    std::vector<SExpr> items;
    SourcePos pos;

    bool is_atom() const { return !is_list; }
    bool is_atom(std::string_view text) const { return !is_list && atom == text; }
    // True for a list whose first element is the given atom.
    bool is_form(std::string_view head) const {
        return is_list && !items.empty() && items.front().is_atom(head);
    }
    std::string str() const;
};

// Reads all top-level expressions. ';' starts a comment running to end of line.
// Symbols are case-insensitive and returned lower-cased.
std::vector<SExpr> read_sexprs(std::string_view text);

}  // namespace macopp::pddl
