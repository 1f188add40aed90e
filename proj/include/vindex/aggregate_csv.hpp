#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "vindex/citation_graph.hpp"
#include "vindex/corpus.hpp"
#include "vindex/metrics.hpp"

namespace vindex {

/// Exact header of the aggregate CSV format.
inline constexpr const char* kAggregateHeader = "entity_id,cd,c,sc,h";

struct AggregateRecord {
  std::string entity_id;
  CitationCounts counts;
  std::size_t line = 0;
};

/// Reads an aggregate CSV. Throws ParseError for a wrong header, a wrong field
/// count or a non-integer field; DomainError (naming the entity) for sc > c or
/// h > cd; IntegrityError for a repeated entity_id. All carry the line.
std::vector<AggregateRecord> read_aggregate_csv(std::istream& in);

/// Writes the header and one row per aggregate (h_star is not part of the
/// format and is dropped).
void write_aggregate_csv(std::span<const EntityAggregate> aggregates, std::ostream& out);

/// Non-throwing scan reporting every bad row as an error.
ValidationReport validate_aggregate_csv(std::istream& in);

}  // namespace vindex
