#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace udg {

/// Syntax error in any of the textual inputs (scalars, points files,
/// tiling files). Line and column are 1-based; line 0 means "not
/// attached to a file line" (bare scalar parsing).
class ParseError : public std::runtime_error {
    std::size_t line_;
    std::size_t column_;

    static std::string compose(const std::string& msg, std::size_t line, std::size_t col) {
        if (line == 0 && col == 0) return msg;
        if (line == 0) return msg + " (column " + std::to_string(col) + ")";
        return msg + " (line " + std::to_string(line) + ", column " + std::to_string(col) + ")";
    }

public:
    explicit ParseError(const std::string& msg) : ParseError(msg, 0, 0) {}

    ParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error(compose(msg, line, column)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

    ParseError at_line(std::size_t line) const {
        std::string base = what();
        std::size_t cut = base.rfind(" (column ");
        if (cut == std::string::npos) cut = base.rfind(" (line ");
        if (cut != std::string::npos) base = base.substr(0, cut);
        return ParseError(base, line, column_);
    }
};

}  // namespace udg
