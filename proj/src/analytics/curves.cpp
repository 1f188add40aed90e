#include "vindex/curves.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <ostream>

#include "vindex/error.hpp"

namespace vindex {

Count CitationCurves::area_g() const { return std::accumulate(g.begin(), g.end(), Count{0}); }
Count CitationCurves::area_f() const { return std::accumulate(f.begin(), f.end(), Count{0}); }

CitationCurves export_citation_curves(const EntityAggregate& aggregate) {
  if (aggregate.per_paper.empty()) {
    throw DomainError("entity '" + aggregate.entity_id + "' has no papers to plot");
  }
  CitationCurves curves;
  for (const PaperCitations& p : aggregate.per_paper) {
    curves.g.push_back(p.citations_received);
    curves.f.push_back(p.citations_received - p.self_citations_received);
  }
  std::sort(curves.g.begin(), curves.g.end(), std::greater<>());
  std::sort(curves.f.begin(), curves.f.end(), std::greater<>());
  return curves;
}

void write_curves_csv(const CitationCurves& curves, std::ostream& out) {
  out << "rank,g,f\n";
  for (std::size_t i = 0; i < curves.g.size(); ++i) {
    out << (i + 1) << ',' << curves.g[i] << ',' << curves.f[i] << '\n';
  }
}

}  // namespace vindex
