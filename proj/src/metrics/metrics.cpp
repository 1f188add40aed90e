#include "vindex/metrics.hpp"

#include <cmath>
#include <vector>

#include "vindex/error.hpp"

namespace vindex {

void CitationCounts::validate() const {
  if (self_citations > citations_total) {
    throw DomainError("self_citations (" + std::to_string(self_citations) +
                      ") exceed citations_total (" + std::to_string(citations_total) + ")");
  }
  if (h_index > citable_documents) {
    throw DomainError("h_index (" + std::to_string(h_index) +
                      ") exceeds citable_documents (" +
                      std::to_string(citable_documents) + ")");
  }
}

Count h_index(std::span<const Count> citations_per_paper) {
  // Bucket counts: papers with >= n citations all land in bucket n.
  const std::size_t n = citations_per_paper.size();
  std::vector<Count> buckets(n + 1, 0);
  for (Count c : citations_per_paper) {
    ++buckets[c >= n ? n : static_cast<std::size_t>(c)];
  }
  Count at_least = 0;
  for (std::size_t h = n; h > 0; --h) {
    at_least += buckets[h];
    if (at_least >= h) return h;
  }
  return 0;
}

double v_rate(Count c, Count sc) {
  if (sc > c) {
    throw DomainError("self-citations (" + std::to_string(sc) +
                      ") exceed total citations (" + std::to_string(c) + ")");
  }
  if (c == 0) return 1.0;
  return static_cast<double>(c - sc) / static_cast<double>(c);
}

double v_index(Count h, Count c, Count sc) {
  return static_cast<double>(h) * std::sqrt(v_rate(c, sc));
}

double generalized_v_index(Count h, double rate, const WeightFunction& f) {
  if (!(rate >= 0.0 && rate <= 1.0)) {
    throw DomainError("virtuosity rate " + std::to_string(rate) + " outside [0, 1]");
  }
  return f(rate) * static_cast<double>(h);
}

double citations_per_publication(Count c, Count cd) {
  if (cd == 0) throw DomainError("entity has no citable documents (cd = 0)");
  return static_cast<double>(c) / static_cast<double>(cd);
}

double adjusted_citations_per_publication(Count c, Count sc, Count cd) {
  if (cd == 0) throw DomainError("entity has no citable documents (cd = 0)");
  if (sc > c) {
    throw DomainError("self-citations (" + std::to_string(sc) +
                      ") exceed total citations (" + std::to_string(c) + ")");
  }
  return static_cast<double>(c - sc) / static_cast<double>(cd);
}

MetricsRow metrics_row(std::string entity_id, const CitationCounts& counts,
                       const WeightFunction& f) {
  counts.validate();
  MetricsRow row;
  row.entity_id = std::move(entity_id);
  row.counts = counts;
  row.v_rate = v_rate(counts.citations_total, counts.self_citations);
  row.c_p = citations_per_publication(counts.citations_total, counts.citable_documents);
  row.v_p = adjusted_citations_per_publication(counts.citations_total, counts.self_citations,
                                               counts.citable_documents);
  row.v_index = generalized_v_index(counts.h_index, row.v_rate, f);
  row.ratio = counts.h_index > 0 ? row.v_index / static_cast<double>(counts.h_index) : 1.0;
  return row;
}

}  // namespace vindex
