#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "zeroapn/finite_field.hpp"

// Field-scan kernels behind diff-analysis. `serial` is the plain reference
// (element-order loops over FieldContext::pow); `parallel` works in the log
// domain and splits the element space across OpenMP threads. Both must agree
// exactly, including the reported witness.
namespace zapn::kernels {

struct CriterionScan {
  bool holds = true;  // no x outside F_2 solves (x+1)^d + x^d + 1 = 0
  std::optional<FieldElement> witness;  // smallest solution by integer encoding
};

namespace serial {

/// values[x] = x^d for every x in the field.
std::vector<std::uint32_t> power_table(const FieldContext& ctx, std::uint64_t d);
CriterionScan zero_apn_scan(const FieldContext& ctx, std::uint64_t d);
/// counts[b] = #{x : (x+1)^d + x^d = b}.
std::vector<std::uint32_t> derivative_histogram(const FieldContext& ctx, std::uint64_t d);
/// Definition-level x0-APN check on an arbitrary value table.
bool x0_apn(std::span<const std::uint32_t> table, std::uint32_t x0);

}  // namespace serial

namespace parallel {

std::vector<std::uint32_t> power_table(const FieldContext& ctx, std::uint64_t d);
CriterionScan zero_apn_scan(const FieldContext& ctx, std::uint64_t d);
std::vector<std::uint32_t> derivative_histogram(const FieldContext& ctx, std::uint64_t d);
bool x0_apn(std::span<const std::uint32_t> table, std::uint32_t x0);

}  // namespace parallel

}  // namespace zapn::kernels
