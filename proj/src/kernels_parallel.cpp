#include <atomic>
#include <cstdint>
#include <limits>

#include "zeroapn/kernels.hpp"

namespace zapn::kernels::parallel {

std::vector<std::uint32_t> power_table(const FieldContext& ctx, std::uint64_t d) {
  if (!ctx.has_tables()) return serial::power_table(ctx, d);
  const std::uint64_t order = ctx.group_order();
  const std::uint64_t dn = d % order;
  const auto& antilog = ctx.antilog_table();
  std::vector<std::uint32_t> out(ctx.size(), 0);
  const auto count = static_cast<std::int64_t>(order);
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < count; ++i) {
    const auto ui = static_cast<std::uint64_t>(i);
    out[antilog[ui]] = antilog[(dn * ui) % order];
  }
  return out;
}

CriterionScan zero_apn_scan(const FieldContext& ctx, std::uint64_t d) {
  if (!ctx.has_tables()) return serial::zero_apn_scan(ctx, d);
  const std::uint64_t order = ctx.group_order();
  const std::uint64_t dn = d % order;
  const auto& antilog = ctx.antilog_table();
  const auto& log = ctx.log_table();
  std::uint32_t first = std::numeric_limits<std::uint32_t>::max();
  const auto count = static_cast<std::int64_t>(order);
  // x = g^i for i >= 1 covers every element outside F_2.
#pragma omp parallel for schedule(static) reduction(min : first)
  for (std::int64_t i = 1; i < count; ++i) {
    const auto ui = static_cast<std::uint64_t>(i);
    const std::uint32_t x = antilog[ui];
    const std::uint64_t log_x1 = log[x ^ 1U];
    const std::uint32_t lhs = antilog[(dn * ui) % order] ^ antilog[(dn * log_x1) % order];
    if (lhs == 1U && x < first) first = x;
  }
  if (first == std::numeric_limits<std::uint32_t>::max()) return {};
  return {false, FieldElement{first}};
}

std::vector<std::uint32_t> derivative_histogram(const FieldContext& ctx, std::uint64_t d) {
  if (!ctx.has_tables()) return serial::derivative_histogram(ctx, d);
  const std::uint64_t order = ctx.group_order();
  const std::uint64_t dn = d % order;
  const auto& antilog = ctx.antilog_table();
  const auto& log = ctx.log_table();
  std::vector<std::uint32_t> counts(ctx.size(), 0);
  // x = 0 and x = 1 both give b = 1 under the 0^d = 0 convention.
  counts[1] = ctx.size() >= 2 ? 2 : 0;
  const auto count = static_cast<std::int64_t>(order);
#pragma omp parallel
  {
    std::vector<std::uint32_t> local(ctx.size(), 0);
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 1; i < count; ++i) {
      const auto ui = static_cast<std::uint64_t>(i);
      const std::uint32_t x = antilog[ui];
      const std::uint64_t log_x1 = log[x ^ 1U];
      ++local[antilog[(dn * ui) % order] ^ antilog[(dn * log_x1) % order]];
    }
#pragma omp critical
    for (std::size_t b = 0; b < local.size(); ++b) counts[b] += local[b];
  }
  return counts;
}

bool x0_apn(std::span<const std::uint32_t> table, std::uint32_t x0) {
  const auto size = static_cast<std::int64_t>(table.size());
  std::atomic<bool> violated{false};
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t su = 0; su < size; ++su) {
    if (violated.load(std::memory_order_relaxed)) continue;
    const auto u = static_cast<std::uint32_t>(su);
    if (u == x0) continue;
    const std::uint32_t base = table[x0] ^ table[u];
    for (std::uint32_t v = u + 1; v < static_cast<std::uint32_t>(size); ++v) {
      if (v == x0) continue;
      // The relation is symmetric in (u, v), so v > u suffices.
      if ((base ^ table[v] ^ table[x0 ^ u ^ v]) == 0) {
        violated.store(true, std::memory_order_relaxed);
        break;
      }
    }
  }
  return !violated.load();
}

}  // namespace zapn::kernels::parallel
