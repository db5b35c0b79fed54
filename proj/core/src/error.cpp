#include "gjp/error.hpp"

namespace gjp {

ParseError::ParseError(ParseErrorKind kind, std::size_t line, std::size_t column, const std::string& reason)
    : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + reason),
      kind_(kind),
      line_(line),
      column_(column),
      reason_(reason) {}

}  // namespace gjp
