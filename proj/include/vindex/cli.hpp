#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vindex/citation_graph.hpp"
#include "vindex/ranking.hpp"
#include "vindex/report.hpp"
#include "vindex/weight_function.hpp"

namespace vindex::cli {

// Exit statuses.
inline constexpr int kOk = 0;
inline constexpr int kUsageOrIo = 1;  // bad flags, unreadable/unwritable files
inline constexpr int kDataError = 2;  // parse, integrity or domain errors in the input

enum class InputKind { corpus_jsonl, aggregate_csv };

struct RunConfig {
  std::filesystem::path input_path;
  InputKind input_kind = InputKind::corpus_jsonl;
  /// Unset means "author" for corpora; ignored (with a warning) for aggregates.
  std::optional<EntityMode> mode;
  WeightFunction weight = WeightFunction::canonical_sqrt();
  SortKey sort_key = SortKey::v_index;
  TableFormat output_format = TableFormat::csv;
  std::optional<std::filesystem::path> output_path;
};

struct SynthConfig {
  std::uint64_t seed = 1;
  std::size_t n_papers = 100;
  std::size_t n_authors = 20;
  double self_cite_bias = 0.0;
  std::optional<std::filesystem::path> output_path;
};

/// Loads the input, computes metrics rows, ranks and renders them.
int cmd_metrics(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Reports every problem in the input; exit 0 iff there are no errors.
int cmd_validate(const std::filesystem::path& input, InputKind kind,
                 std::optional<EntityMode> mode, std::ostream& out, std::ostream& err);

/// Writes a synthetic JSONL corpus and reports its self-citation fraction.
int cmd_synth(const SynthConfig& config, std::ostream& out, std::ostream& err);

/// Rank-shift report between two weightings; `config.weight` is unused.
int cmd_compare(const RunConfig& config, const WeightFunction& weight_a,
                const WeightFunction& weight_b, std::ostream& out, std::ostream& err);

/// Writes the rank,g,f curve CSV for one entity of a corpus.
int cmd_curves(const RunConfig& config, const std::string& entity_id, std::ostream& out,
               std::ostream& err);

/// Full command line: args[0] is the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vindex::cli
