#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "alldiff/model.hpp"

namespace alldiff::io {

/// Syntax error at a 1-based line and column.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// The document parsed, but the resulting problem failed validation.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<ModelError> errors);

    const std::vector<ModelError>& errors() const { return errors_; }

private:
    std::vector<ModelError> errors_;
};

/// Largest number of values a single [a,b] range may expand to.
inline constexpr std::uint64_t kMaxRangeValues = 10'000'000;

/// Reads a problem document:
///
///   # comment
///   var NAME : [LO,HI]                 inclusive range
///   var NAME : {V1,V2,...}             explicit values; {} is empty
///   var NAME = BASE + K                shifted copy of BASE (or BASE - K)
///   var NAME : DOMAIN = BASE + K       shifted copy with its own domain
///   alldifferent(NAME, NAME, ...)
///
/// Variables get dense ids in declaration order. Throws ParseError or
/// ValidationError.
Problem parse_problem(std::string_view text);

/// Inverse of parse_problem. Contiguous domains print as ranges.
std::string serialize_problem(const Problem& p);

}  // namespace alldiff::io
