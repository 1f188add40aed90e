#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vindex/corpus.hpp"
#include "vindex/metrics.hpp"

namespace vindex {

/// Which entity owns a paper: each of its authors, or its venue.
enum class EntityMode { author, journal };

std::string_view to_string(EntityMode mode);
/// Accepts "author" or "journal"; throws ParseError otherwise.
EntityMode parse_entity_mode(std::string_view text);

/// Edge label for one citation.
struct CitationClass {
  enum class Kind { self, genuine };

  std::string citing;
  std::string cited;
  Kind kind = Kind::genuine;
  EntityMode mode = EntityMode::author;
  /// Journal mode only: one endpoint had no venue, so the edge fell back to
  /// genuine. Callers tally this as a warning.
  bool missing_venue = false;

  bool is_self() const noexcept { return kind == Kind::self; }
  friend bool operator==(const CitationClass&, const CitationClass&) = default;
};

/// Author mode: self iff the author sets intersect (exact id equality).
/// Journal mode: self iff both venues are present and equal.
bool is_self_citation(const Paper& citing, const Paper& cited, EntityMode mode);

/// Classifies the edge citing -> cited. Throws LookupError if either id is
/// unknown or `cited` is not among `citing`'s refs.
CitationClass classify_citation(const Corpus& corpus, const std::string& citing,
                                const std::string& cited, EntityMode mode);

struct PaperCitations {
  std::string paper_id;
  Count citations_received = 0;
  Count self_citations_received = 0;

  friend bool operator==(const PaperCitations&, const PaperCitations&) = default;
};

/// Per-entity tallies computed from a closed citation graph.
struct EntityAggregate {
  std::string entity_id;
  EntityMode mode = EntityMode::author;
  Count cd = 0;
  Count c = 0;
  Count sc = 0;
  Count h = 0;
  Count h_star = 0;
  std::vector<PaperCitations> per_paper;

  CitationCounts counts() const { return {cd, c, sc, h}; }
  friend bool operator==(const EntityAggregate&, const EntityAggregate&) = default;
};

/// Tallies every paper of `entity_id`: citations received from inside the
/// corpus, the self-classified subset, and h / h* over those counts. An edge's
/// class is a property of the two papers, so a self-citation to a coauthored
/// paper counts for every owner of that paper. Throws LookupError if the
/// entity owns no paper.
EntityAggregate aggregate_entity(const Corpus& corpus, const std::string& entity_id,
                                 EntityMode mode);

/// One aggregate per distinct author (or venue), ordered by entity id.
std::vector<EntityAggregate> aggregate_all(const Corpus& corpus, EntityMode mode);

/// Corpus-wide edge counts under `mode`.
struct EdgeSummary {
  std::size_t edges = 0;
  std::size_t self_edges = 0;
  std::size_t missing_venue = 0;

  double self_fraction() const {
    return edges == 0 ? 0.0 : static_cast<double>(self_edges) / static_cast<double>(edges);
  }
};

EdgeSummary summarize_edges(const Corpus& corpus, EntityMode mode);

}  // namespace vindex
