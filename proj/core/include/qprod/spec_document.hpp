#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qprod/qseries.hpp"

namespace qprod {

/// Parse failure with a 1-based character column into the joined document.
class SpecParseError : public std::invalid_argument {
 public:
  SpecParseError(std::size_t column, const std::string& message)
      : std::invalid_argument("column " + std::to_string(column) + ": " + message),
        column_(column) {}
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t column_;
};

/// Parses whitespace-separated `m:r:delta` triples, e.g. "5:2:-2 10:2:1 10:4:2".
ProductSpec parse_spec(std::string_view text);

/// Joins CLI tokens with single spaces before parsing.
ProductSpec parse_spec(const std::vector<std::string>& tokens);

}  // namespace qprod
