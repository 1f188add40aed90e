#include "vindex/ranking.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <unordered_map>

#include "vindex/error.hpp"

namespace vindex {
namespace {

// Three-way comparison on a single criterion; positive means `a` ranks first.
int compare_on(const MetricsRow& a, const MetricsRow& b, SortKey key) {
  switch (key) {
    case SortKey::v_index:
      if (a.v_index != b.v_index) return a.v_index > b.v_index ? 1 : -1;
      return 0;
    case SortKey::h_index:
      if (a.counts.h_index != b.counts.h_index) return a.counts.h_index > b.counts.h_index ? 1 : -1;
      return 0;
    case SortKey::cd:
      if (a.counts.citable_documents != b.counts.citable_documents) {
        return a.counts.citable_documents > b.counts.citable_documents ? 1 : -1;
      }
      return 0;
  }
  return 0;
}

bool ranks_before(const MetricsRow& a, const MetricsRow& b, SortKey key) {
  for (SortKey k : {key, SortKey::h_index, SortKey::cd}) {
    if (int c = compare_on(a, b, k); c != 0) return c > 0;
  }
  return a.entity_id < b.entity_id;
}

std::vector<std::size_t> order_by(const std::vector<MetricsRow>& rows, SortKey key) {
  std::vector<std::size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return ranks_before(rows[a], rows[b], key);
  });
  return order;
}

std::vector<std::size_t> positions(const std::vector<MetricsRow>& rows, SortKey key) {
  const auto order = order_by(rows, key);
  std::vector<std::size_t> pos(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i + 1;
  return pos;
}

}  // namespace

SortKey parse_sort_key(std::string_view text) {
  if (text == "v") return SortKey::v_index;
  if (text == "h") return SortKey::h_index;
  if (text == "cd") return SortKey::cd;
  throw ParseError("unknown sort key '" + std::string(text) + "' (expected v, h or cd)");
}

RankedTable rank(std::vector<MetricsRow> rows, SortKey key) {
  if (rows.empty()) throw DomainError("cannot rank an empty set of rows");
  const auto pos_cd = positions(rows, SortKey::cd);
  const auto pos_h = positions(rows, SortKey::h_index);
  const auto pos_v = positions(rows, SortKey::v_index);

  RankedTable table;
  table.sort_key = key;
  table.rows.reserve(rows.size());
  for (std::size_t i : order_by(rows, key)) {
    table.rows.push_back({std::move(rows[i]), pos_cd[i], pos_h[i], pos_v[i]});
  }
  return table;
}

std::vector<RankShift> compare_rankings(const std::vector<MetricsRow>& rows,
                                        const WeightFunction& weight_a,
                                        const WeightFunction& weight_b) {
  if (rows.empty()) throw DomainError("cannot compare an empty set of rows");
  auto reweighted = [&](const WeightFunction& w) {
    std::vector<MetricsRow> out;
    out.reserve(rows.size());
    for (const MetricsRow& r : rows) out.push_back(metrics_row(r.entity_id, r.counts, w));
    return positions(out, SortKey::v_index);
  };
  const auto pos_a = reweighted(weight_a);
  const auto pos_b = reweighted(weight_b);

  std::vector<RankShift> shifts;
  shifts.reserve(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    shifts.push_back({rows[i].entity_id, pos_a[i], pos_b[i],
                      static_cast<long>(pos_b[i]) - static_cast<long>(pos_a[i])});
  }
  std::sort(shifts.begin(), shifts.end(), [](const RankShift& a, const RankShift& b) {
    if (std::labs(a.delta) != std::labs(b.delta)) return std::labs(a.delta) > std::labs(b.delta);
    return a.entity_id < b.entity_id;
  });
  return shifts;
}

}  // namespace vindex
