#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "vindex/metrics.hpp"
#include "vindex/weight_function.hpp"

namespace vindex {

enum class SortKey { v_index, h_index, cd };

/// Accepts the CLI spellings "v", "h", "cd". Throws ParseError otherwise.
SortKey parse_sort_key(std::string_view text);

struct RankedRow {
  MetricsRow metrics;
  std::size_t rank_cd = 0;
  std::size_t rank_h = 0;
  std::size_t rank_v = 0;
};

struct RankedTable {
  std::vector<RankedRow> rows;
  SortKey sort_key = SortKey::v_index;
};

/// Orders rows by `key` descending and fills all three rank columns.
///
/// Ranks are 1..n without gaps. Ties on a criterion fall back to descending
/// h, then descending CD, then ascending entity_id, so every row gets a
/// distinct position. Throws DomainError on empty input.
RankedTable rank(std::vector<MetricsRow> rows, SortKey key);

/// One entity's movement between two weightings.
struct RankShift {
  std::string entity_id;
  std::size_t rank_a = 0;
  std::size_t rank_b = 0;
  long delta = 0;  // rank_b - rank_a
};

/// Ranks the same entities by generalized V-index under two weight functions.
/// Output is sorted by |delta| descending, then entity_id.
std::vector<RankShift> compare_rankings(const std::vector<MetricsRow>& rows,
                                        const WeightFunction& weight_a,
                                        const WeightFunction& weight_b);

}  // namespace vindex
