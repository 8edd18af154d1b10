#include "zeroapn/kernels.hpp"

namespace zapn::kernels::serial {

std::vector<std::uint32_t> power_table(const FieldContext& ctx, std::uint64_t d) {
  std::vector<std::uint32_t> out(ctx.size());
  for (std::uint64_t x = 0; x < ctx.size(); ++x) out[x] = ctx.pow_slow({static_cast<std::uint32_t>(x)}, d).bits;
  return out;
}

CriterionScan zero_apn_scan(const FieldContext& ctx, std::uint64_t d) {
  for (std::uint64_t x = 2; x < ctx.size(); ++x) {
    const FieldElement e{static_cast<std::uint32_t>(x)};
    const auto lhs = ctx.pow_slow(FieldContext::add(e, FieldContext::one()), d).bits ^ ctx.pow_slow(e, d).bits;
    if (lhs == 1U) return {false, e};
  }
  return {};
}

std::vector<std::uint32_t> derivative_histogram(const FieldContext& ctx, std::uint64_t d) {
  std::vector<std::uint32_t> counts(ctx.size(), 0);
  for (std::uint64_t x = 0; x < ctx.size(); ++x) {
    const FieldElement e{static_cast<std::uint32_t>(x)};
    ++counts[ctx.pow_slow(FieldContext::add(e, FieldContext::one()), d).bits ^ ctx.pow_slow(e, d).bits];
  }
  return counts;
}

bool x0_apn(std::span<const std::uint32_t> table, std::uint32_t x0) {
  const auto size = static_cast<std::uint32_t>(table.size());
  for (std::uint32_t u = 0; u < size; ++u) {
    for (std::uint32_t v = 0; v < size; ++v) {
      if (u == x0 || v == x0 || u == v) continue;
      if ((table[x0] ^ table[u] ^ table[v] ^ table[x0 ^ u ^ v]) == 0) return false;
    }
  }
  return true;
}

}  // namespace zapn::kernels::serial
