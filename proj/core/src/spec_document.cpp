#include "qprod/spec_document.hpp"

#include <charconv>
#include <cstdint>

namespace qprod {

namespace {

std::int64_t parse_int(std::string_view field, std::size_t column, const char* name) {
  std::int64_t v = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (!field.empty() && field.front() == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (field.empty() || ec != std::errc() || ptr != last) {
    throw SpecParseError(column, std::string("expected integer ") + name + ", got '" +
                                     std::string(field) + "'");
  }
  return v;
}

}  // namespace

ProductSpec parse_spec(std::string_view text) {
  std::vector<ProductFactor> factors;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == ' ' || text[i] == '\t' || text[i] == '\n' || text[i] == ',') {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && text[i] != ' ' && text[i] != '\t' && text[i] != '\n' &&
           text[i] != ',') {
      ++i;
    }
    const std::string_view token = text.substr(start, i - start);
    const std::size_t c1 = token.find(':');
    const std::size_t c2 = c1 == std::string_view::npos ? c1 : token.find(':', c1 + 1);
    if (c1 == std::string_view::npos || c2 == std::string_view::npos ||
        token.find(':', c2 + 1) != std::string_view::npos) {
      throw SpecParseError(start + 1, "expected m:r:delta, got '" + std::string(token) + "'");
    }
    ProductFactor f;
    f.m = parse_int(token.substr(0, c1), start + 1, "m");
    f.r = parse_int(token.substr(c1 + 1, c2 - c1 - 1), start + c1 + 2, "r");
    f.delta = parse_int(token.substr(c2 + 1), start + c2 + 2, "delta");
    if (f.m < 2) throw SpecParseError(start + 1, "m out of range (need m >= 2)");
    if (f.r < 1 || f.r >= f.m) {
      throw SpecParseError(start + c1 + 2, "r out of range (need 1 <= r < m, got r=" +
                                               std::to_string(f.r) + ", m=" + std::to_string(f.m) +
                                               ")");
    }
    if (f.delta == 0) throw SpecParseError(start + c2 + 2, "delta must be nonzero");
    factors.push_back(f);
  }
  if (factors.empty()) throw SpecParseError(1, "empty product specification");
  return ProductSpec(std::move(factors));
}

ProductSpec parse_spec(const std::vector<std::string>& tokens) {
  std::string joined;
  for (const auto& t : tokens) {
    if (!joined.empty()) joined += ' ';
    joined += t;
  }
  return parse_spec(std::string_view(joined));
}

}  // namespace qprod
