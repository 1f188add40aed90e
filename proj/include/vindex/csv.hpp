#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace vindex::csv {

/// Splits one RFC 4180 record. Quoted fields may contain commas and doubled
/// quotes; embedded newlines are not supported. A trailing '\r' is dropped.
/// Throws ParseError (with `line_number`) on an unterminated quote.
std::vector<std::string> split_record(std::string_view line, std::size_t line_number);

/// Quotes a field when it contains a comma, quote or leading/trailing space.
std::string escape(std::string_view field);

}  // namespace vindex::csv
