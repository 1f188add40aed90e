#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace vindex {

/// One publication node. `refs` are outgoing citations by paper id.
struct Paper {
  std::string id;
  std::vector<std::string> authors;
  std::optional<std::string> venue;
  std::optional<int> year;
  std::vector<std::string> refs;

  friend bool operator==(const Paper&, const Paper&) = default;
};

/// Counters for repairs applied while reading a corpus.
struct IngestStats {
  std::size_t self_loops_stripped = 0;
  std::size_t duplicate_refs_collapsed = 0;
  std::size_t duplicate_authors_collapsed = 0;
};

/// An immutable, validated set of papers. Papers keep their input order; ids
/// are unique. References to ids outside the corpus are kept on the paper
/// (so the corpus serializes losslessly) but never counted as citations.
class Corpus {
 public:
  Corpus() = default;

  /// Builds a corpus from already-normalized papers. Throws IntegrityError on
  /// a duplicate or empty id. Refs are deduplicated and self-loops stripped.
  explicit Corpus(std::vector<Paper> papers, IngestStats* stats = nullptr);

  const std::vector<Paper>& papers() const noexcept { return papers_; }
  std::size_t size() const noexcept { return papers_.size(); }
  bool empty() const noexcept { return papers_.empty(); }

  /// Index of the paper with this id, if any.
  std::optional<std::size_t> find(const std::string& id) const;
  /// Throws LookupError for unknown ids.
  const Paper& at(const std::string& id) const;

  std::size_t dangling_refs() const noexcept { return dangling_refs_; }

  /// Resolved, deduplicated incoming edges: citers()[q] lists the indices of
  /// papers in the corpus that cite paper q, in ascending order.
  const std::vector<std::vector<std::size_t>>& citers() const noexcept { return citers_; }

  friend bool operator==(const Corpus& a, const Corpus& b) {
    return a.papers_ == b.papers_ && a.dangling_refs_ == b.dangling_refs_;
  }

 private:
  std::vector<Paper> papers_;
  std::unordered_map<std::string, std::size_t> index_;
  std::vector<std::vector<std::size_t>> citers_;
  std::size_t dangling_refs_ = 0;
};

/// Parses one JSONL record. Throws ParseError (carrying `line_number`) when the
/// line is not an object, `id`/`authors` are missing, or a field has the wrong
/// type.
Paper parse_paper_record(const std::string& line, std::size_t line_number);

/// Reads a JSONL corpus. Blank lines are skipped. Throws ParseError with the
/// line number for malformed records and IntegrityError naming a duplicate id.
Corpus ingest_corpus(std::istream& in, IngestStats* stats = nullptr);

/// Writes one JSON object per paper, in corpus order, with keys in the order
/// id, authors, venue, year, refs. Absent optionals are omitted.
void serialize_corpus(const Corpus& corpus, std::ostream& out);

/// One finding from validate_corpus.
struct Diagnostic {
  enum class Severity { error, warning };
  Severity severity;
  std::size_t line;  // 0 when not tied to a line
  std::string message;
};

struct ValidationReport {
  std::vector<Diagnostic> diagnostics;
  std::size_t errors() const;
  std::size_t warnings() const;
};

/// Scans a JSONL corpus without stopping at the first problem. Errors:
/// malformed records, duplicate ids. Warnings: dangling refs, self-loops,
/// duplicate refs, and (when `require_venues`) papers without a venue.
ValidationReport validate_corpus(std::istream& in, bool require_venues);

}  // namespace vindex
