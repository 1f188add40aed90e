#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vindex/metrics.hpp"
#include "vindex/ranking.hpp"

namespace vindex {

enum class TableFormat { csv, markdown };

/// Accepts "csv" or "md"/"markdown". Throws ParseError otherwise.
TableFormat parse_table_format(std::string_view text);

/// Header of the rendered metrics table, in column order.
inline constexpr const char* kTableHeader =
    "entity_id,CD,pos_cd,C,SC,C_P,h,pos_h,h_star,V_rate,V_P,V_index,pos_v,ratio";

/// Fixed three-decimal text, rounding half away from zero.
std::string format_fixed3(double value);

/// Renders rows in table order. h_star is blank when absent.
std::string render_table(const RankedTable& table, TableFormat format);

/// One data row of a rendered CSV table, read back as numbers.
struct TableRecord {
  std::string entity_id;
  Count cd = 0;
  std::size_t pos_cd = 0;
  Count c = 0;
  Count sc = 0;
  double c_p = 0.0;
  Count h = 0;
  std::size_t pos_h = 0;
  std::optional<Count> h_star;
  double v_rate = 0.0;
  double v_p = 0.0;
  double v_index = 0.0;
  std::size_t pos_v = 0;
  double ratio = 0.0;
};

/// Parses CSV text in the render_table layout (header included). Throws
/// ParseError with the line number on malformed input.
std::vector<TableRecord> parse_table_csv(std::string_view text);

/// Renders a compare_rankings result with header entity_id,rank_a,rank_b,delta.
std::string render_rank_shifts(const std::vector<RankShift>& shifts, TableFormat format);

}  // namespace vindex
