#include "vindex/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <unordered_set>

#include "json.hpp"
#include "vindex/error.hpp"

namespace vindex {
namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& obj, const char* key, std::size_t line) {
  const json& value = obj.at(key);
  if (!value.is_array()) {
    throw ParseError(std::string("field '") + key + "' must be an array of strings", line);
  }
  std::vector<std::string> out;
  out.reserve(value.size());
  for (const json& item : value) {
    if (!item.is_string()) {
      throw ParseError(std::string("field '") + key + "' must contain only strings", line);
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

// Removes repeated entries in place, keeping first occurrences. Returns the
// number removed.
std::size_t dedupe_stable(std::vector<std::string>& items) {
  std::unordered_set<std::string> seen;
  const auto before = items.size();
  std::erase_if(items, [&](const std::string& s) { return !seen.insert(s).second; });
  return before - items.size();
}

bool is_blank(const std::string& line) {
  return std::all_of(line.begin(), line.end(),
                     [](unsigned char ch) { return std::isspace(ch) != 0; });
}

}  // namespace

Paper parse_paper_record(const std::string& line, std::size_t line_number) {
  json obj;
  try {
    obj = json::parse(line);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), line_number);
  }
  if (!obj.is_object()) throw ParseError("record is not a JSON object", line_number);

  Paper paper;
  if (!obj.contains("id")) throw ParseError("missing required field 'id'", line_number);
  if (!obj["id"].is_string()) throw ParseError("field 'id' must be a string", line_number);
  paper.id = obj["id"].get<std::string>();
  if (paper.id.empty()) throw ParseError("field 'id' must be non-empty", line_number);

  if (!obj.contains("authors")) {
    throw ParseError("missing required field 'authors'", line_number);
  }
  paper.authors = string_list(obj, "authors", line_number);

  if (obj.contains("venue") && !obj["venue"].is_null()) {
    if (!obj["venue"].is_string()) {
      throw ParseError("field 'venue' must be a string", line_number);
    }
    paper.venue = obj["venue"].get<std::string>();
  }
  if (obj.contains("year") && !obj["year"].is_null()) {
    if (!obj["year"].is_number_integer()) {
      throw ParseError("field 'year' must be an integer", line_number);
    }
    paper.year = obj["year"].get<int>();
  }
  if (obj.contains("refs")) paper.refs = string_list(obj, "refs", line_number);
  return paper;
}

Corpus::Corpus(std::vector<Paper> papers, IngestStats* stats) : papers_(std::move(papers)) {
  IngestStats local;
  index_.reserve(papers_.size());
  for (std::size_t i = 0; i < papers_.size(); ++i) {
    Paper& p = papers_[i];
    if (p.id.empty()) throw IntegrityError("paper with empty id");
    if (!index_.emplace(p.id, i).second) {
      throw IntegrityError("duplicate paper id '" + p.id + "'");
    }
    local.duplicate_authors_collapsed += dedupe_stable(p.authors);
    local.duplicate_refs_collapsed += dedupe_stable(p.refs);
    local.self_loops_stripped += std::erase(p.refs, p.id);
  }

  citers_.assign(papers_.size(), {});
  for (std::size_t i = 0; i < papers_.size(); ++i) {
    for (const std::string& ref : papers_[i].refs) {
      auto it = index_.find(ref);
      if (it == index_.end()) {
        ++dangling_refs_;
      } else {
        citers_[it->second].push_back(i);
      }
    }
  }
  if (stats) *stats = local;
}

std::optional<std::size_t> Corpus::find(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const Paper& Corpus::at(const std::string& id) const {
  auto idx = find(id);
  if (!idx) throw LookupError("unknown paper id '" + id + "'");
  return papers_[*idx];
}

Corpus ingest_corpus(std::istream& in, IngestStats* stats) {
  std::vector<Paper> papers;
  std::unordered_map<std::string, std::size_t> first_line;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_blank(line)) continue;
    Paper p = parse_paper_record(line, line_number);
    auto [it, inserted] = first_line.emplace(p.id, line_number);
    if (!inserted) {
      throw IntegrityError("duplicate paper id '" + p.id + "' (first seen on line " +
                               std::to_string(it->second) + ")",
                           line_number);
    }
    papers.push_back(std::move(p));
  }
  return Corpus(std::move(papers), stats);
}

void serialize_corpus(const Corpus& corpus, std::ostream& out) {
  for (const Paper& p : corpus.papers()) {
    nlohmann::ordered_json obj;
    obj["id"] = p.id;
    obj["authors"] = p.authors;
    if (p.venue) obj["venue"] = *p.venue;
    if (p.year) obj["year"] = *p.year;
    obj["refs"] = p.refs;
    out << obj.dump() << '\n';
  }
}

std::size_t ValidationReport::errors() const {
  return static_cast<std::size_t>(
      std::count_if(diagnostics.begin(), diagnostics.end(), [](const Diagnostic& d) {
        return d.severity == Diagnostic::Severity::error;
      }));
}

std::size_t ValidationReport::warnings() const {
  return diagnostics.size() - errors();
}

ValidationReport validate_corpus(std::istream& in, bool require_venues) {
  using Severity = Diagnostic::Severity;
  ValidationReport report;
  struct Loaded {
    Paper paper;
    std::size_t line;
  };
  std::vector<Loaded> loaded;
  std::unordered_map<std::string, std::size_t> first_line;

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (is_blank(line)) continue;
    try {
      Paper p = parse_paper_record(line, line_number);
      auto [it, inserted] = first_line.emplace(p.id, line_number);
      if (!inserted) {
        report.diagnostics.push_back({Severity::error, line_number,
                                      "duplicate paper id '" + p.id + "' (first seen on line " +
                                          std::to_string(it->second) + ")"});
        continue;
      }
      loaded.push_back({std::move(p), line_number});
    } catch (const ParseError& e) {
      report.diagnostics.push_back({Severity::error, e.line(), e.what()});
    }
  }

  for (auto& [paper, at_line] : loaded) {
    std::unordered_set<std::string> seen;
    for (const std::string& ref : paper.refs) {
      if (!seen.insert(ref).second) {
        report.diagnostics.push_back(
            {Severity::warning, at_line, "duplicate ref '" + ref + "' in paper '" + paper.id + "'"});
        continue;
      }
      if (ref == paper.id) {
        report.diagnostics.push_back(
            {Severity::warning, at_line, "paper '" + paper.id + "' cites itself"});
      } else if (!first_line.contains(ref)) {
        report.diagnostics.push_back({Severity::warning, at_line,
                                      "dangling ref '" + ref + "' in paper '" + paper.id + "'"});
      }
    }
    if (require_venues && !paper.venue) {
      report.diagnostics.push_back(
          {Severity::warning, at_line, "paper '" + paper.id + "' has no venue"});
    }
  }
  std::stable_sort(report.diagnostics.begin(), report.diagnostics.end(),
                   [](const Diagnostic& a, const Diagnostic& b) { return a.line < b.line; });
  return report;
}

}  // namespace vindex
