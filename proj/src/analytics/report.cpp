#include "vindex/report.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "vindex/csv.hpp"
#include "vindex/error.hpp"

namespace vindex {
namespace {

constexpr std::size_t kColumns = 14;

std::vector<std::string> row_cells(const RankedRow& r) {
  const MetricsRow& m = r.metrics;
  return {m.entity_id,
          std::to_string(m.counts.citable_documents),
          std::to_string(r.rank_cd),
          std::to_string(m.counts.citations_total),
          std::to_string(m.counts.self_citations),
          format_fixed3(m.c_p),
          std::to_string(m.counts.h_index),
          std::to_string(r.rank_h),
          m.h_star ? std::to_string(*m.h_star) : std::string(),
          format_fixed3(m.v_rate),
          format_fixed3(m.v_p),
          format_fixed3(m.v_index),
          std::to_string(r.rank_v),
          format_fixed3(m.ratio)};
}

std::vector<std::string> split_plain(std::string_view header) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto comma = header.find(',', start);
    out.emplace_back(header.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string markdown_escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    if (ch == '|') out.push_back('\\');
    out.push_back(ch);
  }
  return out;
}

// `numeric[i]` marks right-aligned columns.
std::string render_markdown(const std::vector<std::string>& header,
                            const std::vector<std::vector<std::string>>& rows,
                            const std::vector<bool>& numeric) {
  std::ostringstream out;
  out << '|';
  for (const auto& h : header) out << ' ' << h << " |";
  out << "\n|";
  for (std::size_t i = 0; i < header.size(); ++i) out << (numeric[i] ? "---:|" : "---|");
  out << '\n';
  for (const auto& row : rows) {
    out << '|';
    for (const auto& cell : row) out << ' ' << markdown_escape(cell) << " |";
    out << '\n';
  }
  return out.str();
}

std::string render_csv(const std::vector<std::string>& header,
                       const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream out;
  for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
  out << '\n';
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv::escape(row[i]);
    out << '\n';
  }
  return out.str();
}

template <typename T>
T parse_number(const std::string& text, const char* column, std::size_t line) {
  T value{};
  const char* first = text.data();
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc() || ptr != last) {
    throw ParseError(std::string("bad value '") + text + "' in column " + column, line);
  }
  return value;
}

}  // namespace

TableFormat parse_table_format(std::string_view text) {
  if (text == "csv") return TableFormat::csv;
  if (text == "md" || text == "markdown") return TableFormat::markdown;
  throw ParseError("unknown output format '" + std::string(text) + "' (expected csv or md)");
}

std::string format_fixed3(double value) {
  if (!std::isfinite(value)) return std::isnan(value) ? "nan" : (value > 0 ? "inf" : "-inf");
  // std::round rounds half away from zero.
  const long long scaled = static_cast<long long>(std::round(std::abs(value) * 1000.0));
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s%lld.%03lld", (value < 0 && scaled != 0) ? "-" : "",
                scaled / 1000, scaled % 1000);
  return buf;
}

std::string render_table(const RankedTable& table, TableFormat format) {
  const auto header = split_plain(kTableHeader);
  std::vector<std::vector<std::string>> rows;
  rows.reserve(table.rows.size());
  for (const RankedRow& r : table.rows) rows.push_back(row_cells(r));
  if (format == TableFormat::csv) return render_csv(header, rows);
  std::vector<bool> numeric(header.size(), true);
  numeric[0] = false;
  return render_markdown(header, rows, numeric);
}

std::vector<TableRecord> parse_table_csv(std::string_view text) {
  std::vector<TableRecord> out;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_number = 0;
  if (!std::getline(in, line)) throw ParseError("missing table header", 1);
  ++line_number;
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kTableHeader) {
    throw ParseError("unexpected table header '" + line + "'", line_number);
  }
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty() || line == "\r") continue;
    const auto f = csv::split_record(line, line_number);
    if (f.size() != kColumns) {
      throw ParseError("expected " + std::to_string(kColumns) + " fields, got " +
                           std::to_string(f.size()),
                       line_number);
    }
    TableRecord r;
    r.entity_id = f[0];
    r.cd = parse_number<Count>(f[1], "CD", line_number);
    r.pos_cd = parse_number<std::size_t>(f[2], "pos_cd", line_number);
    r.c = parse_number<Count>(f[3], "C", line_number);
    r.sc = parse_number<Count>(f[4], "SC", line_number);
    r.c_p = parse_number<double>(f[5], "C_P", line_number);
    r.h = parse_number<Count>(f[6], "h", line_number);
    r.pos_h = parse_number<std::size_t>(f[7], "pos_h", line_number);
    if (!f[8].empty()) r.h_star = parse_number<Count>(f[8], "h_star", line_number);
    r.v_rate = parse_number<double>(f[9], "V_rate", line_number);
    r.v_p = parse_number<double>(f[10], "V_P", line_number);
    r.v_index = parse_number<double>(f[11], "V_index", line_number);
    r.pos_v = parse_number<std::size_t>(f[12], "pos_v", line_number);
    r.ratio = parse_number<double>(f[13], "ratio", line_number);
    out.push_back(std::move(r));
  }
  return out;
}

std::string render_rank_shifts(const std::vector<RankShift>& shifts, TableFormat format) {
  const std::vector<std::string> header{"entity_id", "rank_a", "rank_b", "delta"};
  std::vector<std::vector<std::string>> rows;
  rows.reserve(shifts.size());
  for (const RankShift& s : shifts) {
    rows.push_back({s.entity_id, std::to_string(s.rank_a), std::to_string(s.rank_b),
                    (s.delta > 0 ? "+" : "") + std::to_string(s.delta)});
  }
  if (format == TableFormat::csv) return render_csv(header, rows);
  return render_markdown(header, rows, {false, true, true, true});
}

}  // namespace vindex
