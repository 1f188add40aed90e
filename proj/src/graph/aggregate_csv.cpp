#include "vindex/aggregate_csv.hpp"

#include <charconv>
#include <istream>
#include <ostream>
#include <unordered_map>

#include "vindex/csv.hpp"
#include "vindex/error.hpp"

namespace vindex {
namespace {

Count parse_count(const std::string& text, const char* column, std::size_t line) {
  Count value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(std::string("column '") + column + "' must be a non-negative integer, got '" +
                         text + "'",
                     line);
  }
  return value;
}

void check_header(std::istream& in, std::size_t& line_number) {
  std::string header;
  if (!std::getline(in, header)) throw ParseError("missing header '" + std::string(kAggregateHeader) + "'", 1);
  ++line_number;
  if (!header.empty() && header.back() == '\r') header.pop_back();
  if (header != kAggregateHeader) {
    throw ParseError("header must be exactly '" + std::string(kAggregateHeader) + "', got '" +
                         header + "'",
                     line_number);
  }
}

AggregateRecord parse_row(const std::string& line, std::size_t line_number) {
  const auto fields = csv::split_record(line, line_number);
  if (fields.size() != 5) {
    throw ParseError("expected 5 fields, got " + std::to_string(fields.size()), line_number);
  }
  AggregateRecord rec;
  rec.entity_id = fields[0];
  rec.line = line_number;
  if (rec.entity_id.empty()) throw ParseError("empty entity_id", line_number);
  rec.counts.citable_documents = parse_count(fields[1], "cd", line_number);
  rec.counts.citations_total = parse_count(fields[2], "c", line_number);
  rec.counts.self_citations = parse_count(fields[3], "sc", line_number);
  rec.counts.h_index = parse_count(fields[4], "h", line_number);
  try {
    rec.counts.validate();
  } catch (const DomainError& e) {
    throw DomainError("entity '" + rec.entity_id + "': " + e.what(), line_number);
  }
  return rec;
}

bool is_blank(const std::string& line) {
  return line.find_first_not_of(" \t\r") == std::string::npos;
}

}  // namespace

std::vector<AggregateRecord> read_aggregate_csv(std::istream& in) {
  std::size_t line_number = 0;
  check_header(in, line_number);
  std::vector<AggregateRecord> out;
  std::unordered_map<std::string, std::size_t> seen;
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_blank(line)) continue;
    AggregateRecord rec = parse_row(line, line_number);
    auto [it, inserted] = seen.emplace(rec.entity_id, line_number);
    if (!inserted) {
      throw IntegrityError("duplicate entity_id '" + rec.entity_id + "' (first seen on line " +
                               std::to_string(it->second) + ")",
                           line_number);
    }
    out.push_back(std::move(rec));
  }
  return out;
}

void write_aggregate_csv(std::span<const EntityAggregate> aggregates, std::ostream& out) {
  out << kAggregateHeader << '\n';
  for (const EntityAggregate& a : aggregates) {
    out << csv::escape(a.entity_id) << ',' << a.cd << ',' << a.c << ',' << a.sc << ',' << a.h
        << '\n';
  }
}

ValidationReport validate_aggregate_csv(std::istream& in) {
  using Severity = Diagnostic::Severity;
  ValidationReport report;
  std::size_t line_number = 0;
  try {
    check_header(in, line_number);
  } catch (const ParseError& e) {
    report.diagnostics.push_back({Severity::error, e.line(), e.what()});
    return report;
  }
  std::unordered_map<std::string, std::size_t> seen;
  std::string line;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_blank(line)) continue;
    try {
      AggregateRecord rec = parse_row(line, line_number);
      auto [it, inserted] = seen.emplace(rec.entity_id, line_number);
      if (!inserted) {
        report.diagnostics.push_back({Severity::error, line_number,
                                      "duplicate entity_id '" + rec.entity_id +
                                          "' (first seen on line " +
                                          std::to_string(it->second) + ")"});
      }
    } catch (const Error& e) {
      report.diagnostics.push_back({Severity::error, e.line(), e.what()});
    }
  }
  return report;
}

}  // namespace vindex
