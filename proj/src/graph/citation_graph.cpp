#include "vindex/citation_graph.hpp"

#include <algorithm>
#include <map>

#include "vindex/error.hpp"

namespace vindex {
namespace {

// (received, self) for every paper, indexed like corpus.papers().
std::vector<PaperCitations> paper_tallies(const Corpus& corpus, EntityMode mode) {
  const auto& papers = corpus.papers();
  std::vector<PaperCitations> tallies(papers.size());
  for (std::size_t q = 0; q < papers.size(); ++q) {
    tallies[q].paper_id = papers[q].id;
    for (std::size_t p : corpus.citers()[q]) {
      ++tallies[q].citations_received;
      if (is_self_citation(papers[p], papers[q], mode)) ++tallies[q].self_citations_received;
    }
  }
  return tallies;
}

EntityAggregate build_aggregate(std::string entity_id, EntityMode mode,
                                const std::vector<std::size_t>& owned,
                                const std::vector<PaperCitations>& tallies) {
  EntityAggregate agg;
  agg.entity_id = std::move(entity_id);
  agg.mode = mode;
  agg.cd = owned.size();
  std::vector<Count> all;
  std::vector<Count> genuine;
  all.reserve(owned.size());
  genuine.reserve(owned.size());
  for (std::size_t q : owned) {
    const PaperCitations& t = tallies[q];
    agg.per_paper.push_back(t);
    agg.c += t.citations_received;
    agg.sc += t.self_citations_received;
    all.push_back(t.citations_received);
    genuine.push_back(t.citations_received - t.self_citations_received);
  }
  agg.h = h_index(all);
  agg.h_star = h_index(genuine);
  return agg;
}

bool owns(const Paper& paper, const std::string& entity_id, EntityMode mode) {
  if (mode == EntityMode::journal) return paper.venue && *paper.venue == entity_id;
  return std::find(paper.authors.begin(), paper.authors.end(), entity_id) != paper.authors.end();
}

}  // namespace

std::string_view to_string(EntityMode mode) {
  return mode == EntityMode::author ? "author" : "journal";
}

EntityMode parse_entity_mode(std::string_view text) {
  if (text == "author") return EntityMode::author;
  if (text == "journal") return EntityMode::journal;
  throw ParseError("unknown entity mode '" + std::string(text) + "' (expected author or journal)");
}

bool is_self_citation(const Paper& citing, const Paper& cited, EntityMode mode) {
  if (mode == EntityMode::journal) {
    return citing.venue && cited.venue && *citing.venue == *cited.venue;
  }
  for (const std::string& a : citing.authors) {
    if (std::find(cited.authors.begin(), cited.authors.end(), a) != cited.authors.end()) {
      return true;
    }
  }
  return false;
}

CitationClass classify_citation(const Corpus& corpus, const std::string& citing,
                                const std::string& cited, EntityMode mode) {
  const Paper& p = corpus.at(citing);
  const Paper& q = corpus.at(cited);
  if (std::find(p.refs.begin(), p.refs.end(), cited) == p.refs.end()) {
    throw LookupError("paper '" + citing + "' does not cite '" + cited + "'");
  }
  CitationClass out;
  out.citing = citing;
  out.cited = cited;
  out.mode = mode;
  out.kind = is_self_citation(p, q, mode) ? CitationClass::Kind::self
                                          : CitationClass::Kind::genuine;
  out.missing_venue = mode == EntityMode::journal && (!p.venue || !q.venue);
  return out;
}

EntityAggregate aggregate_entity(const Corpus& corpus, const std::string& entity_id,
                                 EntityMode mode) {
  std::vector<std::size_t> owned;
  const auto& papers = corpus.papers();
  for (std::size_t i = 0; i < papers.size(); ++i) {
    if (owns(papers[i], entity_id, mode)) owned.push_back(i);
  }
  if (owned.empty()) {
    throw LookupError(std::string("unknown ") + std::string(to_string(mode)) + " '" +
                      entity_id + "'");
  }
  return build_aggregate(entity_id, mode, owned, paper_tallies(corpus, mode));
}

std::vector<EntityAggregate> aggregate_all(const Corpus& corpus, EntityMode mode) {
  std::map<std::string, std::vector<std::size_t>> owned;
  const auto& papers = corpus.papers();
  for (std::size_t i = 0; i < papers.size(); ++i) {
    if (mode == EntityMode::journal) {
      if (papers[i].venue) owned[*papers[i].venue].push_back(i);
    } else {
      for (const std::string& a : papers[i].authors) owned[a].push_back(i);
    }
  }
  const auto tallies = paper_tallies(corpus, mode);
  std::vector<EntityAggregate> out;
  out.reserve(owned.size());
  for (const auto& [entity, indices] : owned) {
    out.push_back(build_aggregate(entity, mode, indices, tallies));
  }
  return out;
}

EdgeSummary summarize_edges(const Corpus& corpus, EntityMode mode) {
  EdgeSummary s;
  const auto& papers = corpus.papers();
  for (std::size_t q = 0; q < papers.size(); ++q) {
    for (std::size_t p : corpus.citers()[q]) {
      ++s.edges;
      if (is_self_citation(papers[p], papers[q], mode)) ++s.self_edges;
      if (mode == EntityMode::journal && (!papers[p].venue || !papers[q].venue)) {
        ++s.missing_venue;
      }
    }
  }
  return s;
}

}  // namespace vindex
