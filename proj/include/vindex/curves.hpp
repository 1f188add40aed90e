#pragma once

#include <iosfwd>
#include <vector>

#include "vindex/citation_graph.hpp"

namespace vindex {

/// Rank/citation curves for one entity. `g` holds citations received per
/// paper, `f` the same without self-citations; each is sorted descending on
/// its own, so position i of g and f may refer to different papers.
struct CitationCurves {
  std::vector<Count> g;
  std::vector<Count> f;

  Count area_g() const;
  Count area_f() const;
};

/// Throws DomainError if the aggregate has no papers.
CitationCurves export_citation_curves(const EntityAggregate& aggregate);

/// Plot-ready CSV: header "rank,g,f", one line per rank starting at 1.
void write_curves_csv(const CitationCurves& curves, std::ostream& out);

}  // namespace vindex
