#include "vindex/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "vindex/aggregate_csv.hpp"
#include "vindex/corpus.hpp"
#include "vindex/curves.hpp"
#include "vindex/error.hpp"
#include "vindex/synthetic.hpp"

namespace vindex::cli {
namespace {

namespace fs = std::filesystem;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "' for reading");
  return in;
}

int report(const fs::path& path, const Error& e, std::ostream& err) {
  err << path.string();
  if (e.line() != 0) err << ':' << e.line();
  err << ": " << e.kind() << ": " << e.what() << '\n';
  return kDataError;
}

int emit(const std::string& text, const std::optional<fs::path>& output, std::ostream& out,
         std::ostream& err) {
  if (!output) {
    out << text;
    out.flush();
    return kOk;
  }
  std::ofstream file(*output, std::ios::binary | std::ios::trunc);
  if (!file) {
    err << "error: cannot open '" << output->string() << "' for writing\n";
    return kUsageOrIo;
  }
  file << text;
  if (!file) {
    err << "error: failed writing '" << output->string() << "'\n";
    return kUsageOrIo;
  }
  return kOk;
}

void warn_ingest(const fs::path& path, const Corpus& corpus, const IngestStats& stats,
                 EntityMode mode, std::ostream& err) {
  const std::string where = path.string();
  if (stats.self_loops_stripped) {
    err << where << ": warning: stripped " << stats.self_loops_stripped << " self-citing ref(s)\n";
  }
  if (stats.duplicate_refs_collapsed) {
    err << where << ": warning: collapsed " << stats.duplicate_refs_collapsed
        << " duplicate ref(s)\n";
  }
  if (corpus.dangling_refs()) {
    err << where << ": warning: " << corpus.dangling_refs()
        << " ref(s) point outside the corpus and are not counted\n";
  }
  if (mode == EntityMode::journal) {
    const auto edges = summarize_edges(corpus, mode);
    if (edges.missing_venue) {
      err << where << ": warning: " << edges.missing_venue
          << " citation(s) involve a paper without venue and count as genuine\n";
    }
  }
}

Corpus load_corpus(const RunConfig& config, std::ostream& err) {
  auto in = open_input(config.input_path);
  IngestStats stats;
  Corpus corpus = ingest_corpus(in, &stats);
  warn_ingest(config.input_path, corpus, stats, config.mode.value_or(EntityMode::author), err);
  return corpus;
}

// Metrics rows for every entity in the input, unranked.
std::vector<MetricsRow> load_rows(const RunConfig& config, const WeightFunction& weight,
                                  std::ostream& err) {
  std::vector<MetricsRow> rows;
  if (config.input_kind == InputKind::aggregate_csv) {
    if (config.mode) {
      err << config.input_path.string() << ": warning: --mode is ignored for aggregate input\n";
    }
    auto in = open_input(config.input_path);
    for (const AggregateRecord& rec : read_aggregate_csv(in)) {
      try {
        rows.push_back(metrics_row(rec.entity_id, rec.counts, weight));
      } catch (const DomainError& e) {
        throw DomainError("entity '" + rec.entity_id + "': " + e.what(), rec.line);
      }
    }
    return rows;
  }

  const EntityMode mode = config.mode.value_or(EntityMode::author);
  const Corpus corpus = load_corpus(config, err);
  for (const EntityAggregate& agg : aggregate_all(corpus, mode)) {
    MetricsRow row = metrics_row(agg.entity_id, agg.counts(), weight);
    row.h_star = agg.h_star;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) {
    throw DomainError(std::string("corpus has no ") + std::string(to_string(mode)) +
                      " entities to report");
  }
  return rows;
}

template <typename Body>
int guarded(const fs::path& input, std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const IoError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrIo;
  } catch (const Error& e) {
    return report(input, e, err);
  }
}

std::string format_fraction(double value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", value);
  return buf;
}

}  // namespace

int cmd_metrics(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(config.input_path, err, [&] {
    const RankedTable table = rank(load_rows(config, config.weight, err), config.sort_key);
    return emit(render_table(table, config.output_format), config.output_path, out, err);
  });
}

int cmd_compare(const RunConfig& config, const WeightFunction& weight_a,
                const WeightFunction& weight_b, std::ostream& out, std::ostream& err) {
  return guarded(config.input_path, err, [&] {
    const auto rows = load_rows(config, WeightFunction::unity(), err);
    const auto shifts = compare_rankings(rows, weight_a, weight_b);
    return emit(render_rank_shifts(shifts, config.output_format), config.output_path, out, err);
  });
}

int cmd_curves(const RunConfig& config, const std::string& entity_id, std::ostream& out,
               std::ostream& err) {
  return guarded(config.input_path, err, [&] {
    if (config.input_kind != InputKind::corpus_jsonl) {
      err << "error: citation curves need a corpus (per-paper counts); got aggregate input\n";
      return kUsageOrIo;
    }
    const Corpus corpus = load_corpus(config, err);
    const auto agg = aggregate_entity(corpus, entity_id, config.mode.value_or(EntityMode::author));
    std::ostringstream text;
    write_curves_csv(export_citation_curves(agg), text);
    return emit(text.str(), config.output_path, out, err);
  });
}

int cmd_validate(const fs::path& input, InputKind kind, std::optional<EntityMode> mode,
                 std::ostream& out, std::ostream& err) {
  std::ifstream in(input, std::ios::binary);
  if (!in) {
    err << "error: cannot open '" << input.string() << "' for reading\n";
    return kUsageOrIo;
  }
  if (kind == InputKind::aggregate_csv && mode) {
    err << input.string() << ": warning: --mode is ignored for aggregate input\n";
  }
  const ValidationReport rep =
      kind == InputKind::corpus_jsonl
          ? validate_corpus(in, mode.value_or(EntityMode::author) == EntityMode::journal)
          : validate_aggregate_csv(in);
  for (const Diagnostic& d : rep.diagnostics) {
    err << input.string();
    if (d.line) err << ':' << d.line;
    err << ": " << (d.severity == Diagnostic::Severity::error ? "error" : "warning") << ": "
        << d.message << '\n';
  }
  const auto errors = rep.errors();
  const auto warnings = rep.warnings();
  out << errors << (errors == 1 ? " error, " : " errors, ") << warnings
      << (warnings == 1 ? " warning" : " warnings") << '\n';
  return errors == 0 ? kOk : kDataError;
}

int cmd_synth(const SynthConfig& config, std::ostream& out, std::ostream& err) {
  Corpus corpus;
  try {
    corpus = generate_synthetic_corpus(config.seed, config.n_papers, config.n_authors,
                                       config.self_cite_bias);
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrIo;
  }
  std::ostringstream text;
  serialize_corpus(corpus, text);
  if (int rc = emit(text.str(), config.output_path, out, err); rc != kOk) return rc;

  const EdgeSummary edges = summarize_edges(corpus, EntityMode::author);
  err << "self-citation fraction: " << format_fraction(edges.self_fraction()) << " ("
      << edges.self_edges << " of " << edges.edges << " citations)\n";
  return kOk;
}

namespace {

InputKind resolve_kind(const std::string& kind, const fs::path& input) {
  if (kind == "corpus") return InputKind::corpus_jsonl;
  if (kind == "aggregate") return InputKind::aggregate_csv;
  const auto ext = input.extension().string();
  if (ext == ".jsonl" || ext == ".json") return InputKind::corpus_jsonl;
  if (ext == ".csv") return InputKind::aggregate_csv;
  throw ParseError("cannot infer --kind from '" + input.string() +
                   "'; pass --kind corpus or --kind aggregate");
}

struct InputFlags {
  std::string input;
  std::string kind;
  std::string mode;
  std::string sort = "v";
  std::string format = "csv";
  std::string output;

  void attach(CLI::App* cmd, bool ranked) {
    cmd->add_option("--input", input, "Corpus (.jsonl) or aggregate (.csv) file")->required();
    cmd->add_option("--kind", kind, "Input kind")->check(CLI::IsMember({"corpus", "aggregate"}));
    cmd->add_option("--mode", mode, "Entity mode for corpora")
        ->check(CLI::IsMember({"author", "journal"}));
    if (ranked) {
      cmd->add_option("--sort", sort, "Sort key")->check(CLI::IsMember({"v", "h", "cd"}));
      cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"csv", "md"}));
    }
    cmd->add_option("--output", output, "Output path (default: standard output)");
  }

  RunConfig config() const {
    RunConfig c;
    c.input_path = input;
    c.input_kind = resolve_kind(kind, c.input_path);
    if (!mode.empty()) c.mode = parse_entity_mode(mode);
    c.sort_key = parse_sort_key(sort);
    c.output_format = parse_table_format(format);
    if (!output.empty()) c.output_path = output;
    return c;
  }
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Self-citation-aware impact metrics (h, h*, V-index family)", "vindex"};
  app.require_subcommand(1);

  InputFlags metrics_flags;
  std::string weight = "sqrt";
  auto* metrics = app.add_subcommand("metrics", "Compute and rank metrics for every entity");
  metrics_flags.attach(metrics, true);
  metrics->add_option("--weight", weight, "sqrt | unity | linear | x^N | x^(1/N)");

  InputFlags validate_flags;
  auto* validate = app.add_subcommand("validate", "Report problems in an input file");
  validate->add_option("--input", validate_flags.input, "Input file")->required();
  validate->add_option("--kind", validate_flags.kind, "Input kind")
      ->check(CLI::IsMember({"corpus", "aggregate"}));
  validate->add_option("--mode", validate_flags.mode, "journal also checks venues")
      ->check(CLI::IsMember({"author", "journal"}));

  SynthConfig synth_config;
  std::string synth_output;
  auto* synth = app.add_subcommand("synth", "Generate a reproducible synthetic corpus");
  synth->add_option("--seed", synth_config.seed, "Random seed");
  synth->add_option("--papers", synth_config.n_papers, "Number of papers")->required();
  synth->add_option("--authors", synth_config.n_authors, "Number of distinct authors")->required();
  synth->add_option("--bias", synth_config.self_cite_bias, "Self-citation bias in [0, 1]");
  synth->add_option("--output", synth_output, "Output path (default: standard output)");

  InputFlags compare_flags;
  std::string weight_a = "unity";
  std::string weight_b = "sqrt";
  auto* compare = app.add_subcommand("compare", "Rank shifts between two weight functions");
  compare_flags.attach(compare, true);
  compare->add_option("--weight-a", weight_a, "Baseline weight (default unity)");
  compare->add_option("--weight-b", weight_b, "Compared weight (default sqrt)");

  InputFlags curves_flags;
  std::string entity;
  auto* curves = app.add_subcommand("curves", "Export rank/citation curves for one entity");
  curves_flags.attach(curves, false);
  curves->add_option("--entity", entity, "Author or venue id")->required();

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageOrIo;
  }

  try {
    if (*metrics) {
      RunConfig config = metrics_flags.config();
      config.weight = WeightFunction::parse(weight);
      return cmd_metrics(config, out, err);
    }
    if (*validate) {
      const fs::path input = validate_flags.input;
      std::optional<EntityMode> mode;
      if (!validate_flags.mode.empty()) mode = parse_entity_mode(validate_flags.mode);
      return cmd_validate(input, resolve_kind(validate_flags.kind, input), mode, out, err);
    }
    if (*synth) {
      if (!synth_output.empty()) synth_config.output_path = synth_output;
      return cmd_synth(synth_config, out, err);
    }
    if (*compare) {
      return cmd_compare(compare_flags.config(), WeightFunction::parse(weight_a),
                         WeightFunction::parse(weight_b), out, err);
    }
    if (*curves) return cmd_curves(curves_flags.config(), entity, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageOrIo;
  }
  return kUsageOrIo;
}

}  // namespace vindex::cli
