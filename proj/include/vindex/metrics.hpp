#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "vindex/weight_function.hpp"

namespace vindex {

using Count = std::uint64_t;

/// Pre-aggregated citation statistics for one author, journal or country.
struct CitationCounts {
  Count citable_documents = 0;  // CD
  Count citations_total = 0;    // C
  Count self_citations = 0;     // SC
  Count h_index = 0;            // h

  /// Throws DomainError if sc > c or h > cd.
  void validate() const;

  friend bool operator==(const CitationCounts&, const CitationCounts&) = default;
};

/// Every derived metric for one entity. Reals are kept at full precision;
/// rounding happens only when a table is rendered.
struct MetricsRow {
  std::string entity_id;
  CitationCounts counts;
  double v_rate = 1.0;
  double c_p = 0.0;
  double v_p = 0.0;
  double v_index = 0.0;
  double ratio = 1.0;
  std::optional<Count> h_star;
};

/// Largest h such that at least h entries are >= h. Empty input gives 0.
Count h_index(std::span<const Count> citations_per_paper);

/// (c - sc) / c, or 1.0 when c = 0. Throws DomainError if sc > c.
double v_rate(Count c, Count sc);

/// h * sqrt(v_rate(c, sc)).
double v_index(Count h, Count c, Count sc);

/// f(v_rate) * h. Throws DomainError if v_rate is outside [0, 1].
double generalized_v_index(Count h, double v_rate, const WeightFunction& f);

/// C / CD. Throws DomainError if cd = 0.
double citations_per_publication(Count c, Count cd);

/// (C - SC) / CD, which equals C_P * V_rate.
double adjusted_citations_per_publication(Count c, Count sc, Count cd);

/// Assembles a full row; h_star is left empty.
MetricsRow metrics_row(std::string entity_id, const CitationCounts& counts,
                       const WeightFunction& f);

}  // namespace vindex
