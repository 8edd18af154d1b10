#include "zeroapn/diff_analysis.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "zeroapn/kernels.hpp"

namespace zapn {

namespace {

std::uint64_t group_order_of(unsigned n) {
  if (n == 0 || n > 62) throw std::out_of_range("cyclotomic: n out of range");
  return (std::uint64_t{1} << n) - 1;
}

DifferentialSpectrum spectrum_from_counts(unsigned n, std::uint64_t d, std::vector<std::uint32_t> counts) {
  DifferentialSpectrum s;
  s.n = n;
  s.d = d;
  s.counts = std::move(counts);
  s.delta = s.counts.empty() ? 0 : *std::max_element(s.counts.begin(), s.counts.end());
  return s;
}

ApnClassification classify_with(const FieldContext& ctx, std::uint64_t d, bool parallel) {
  const Exponent e(static_cast<std::int64_t>(d), ctx.n());
  ApnClassification row;
  row.n = ctx.n();
  row.d = e.value();
  row.class_size = cyclotomic_class(ctx.n(), e.value()).members.size();
  const auto scan = parallel ? kernels::parallel::zero_apn_scan(ctx, e.value())
                             : kernels::serial::zero_apn_scan(ctx, e.value());
  row.is_zero_apn = scan.holds;
  row.witness = scan.witness;
  const auto spectrum = spectrum_from_counts(ctx.n(), e.value(),
                                             parallel ? kernels::parallel::derivative_histogram(ctx, e.value())
                                                      : kernels::serial::derivative_histogram(ctx, e.value()));
  row.delta = spectrum.delta;
  row.is_apn = spectrum.delta == 2;
  row.is_one_apn = is_one_apn(ctx, e, spectrum);
  return row;
}

}  // namespace

std::map<std::uint32_t, std::uint64_t> DifferentialSpectrum::multiset() const {
  std::map<std::uint32_t, std::uint64_t> out;
  for (auto c : counts) ++out[c];
  return out;
}

bool CyclotomicClass::contains(std::uint64_t d) const {
  return std::binary_search(members.begin(), members.end(), d);
}

DifferentialSpectrum differential_spectrum(const FieldContext& ctx, const Exponent& d) {
  return spectrum_from_counts(ctx.n(), d.value(), kernels::parallel::derivative_histogram(ctx, d.value()));
}

ZeroApnResult is_zero_apn_power(const FieldContext& ctx, const Exponent& d) {
  const auto scan = kernels::parallel::zero_apn_scan(ctx, d.value());
  return {scan.holds, scan.witness};
}

bool is_apn(const FieldContext& ctx, const Exponent& d) { return differential_spectrum(ctx, d).delta == 2; }

bool is_one_apn(const FieldContext& ctx, const Exponent& d, const DifferentialSpectrum& spectrum) {
  if (spectrum.counts.size() != ctx.size()) throw std::invalid_argument("spectrum does not match the field");
  for (std::uint64_t u = 0; u < ctx.size(); ++u) {
    if (u == 1) continue;
    const FieldElement ue{static_cast<std::uint32_t>(u)};
    const FieldElement a = FieldContext::add(ue, FieldContext::one());
    const FieldElement b = FieldContext::add(FieldContext::one(), ctx.pow(ue, d));
    const FieldElement scaled = ctx.mul(b, ctx.inv(ctx.pow(a, d)));
    if (spectrum.counts[scaled.bits] != 2) return false;
  }
  return true;
}

std::vector<std::uint32_t> power_table(const FieldContext& ctx, const Exponent& d) {
  return kernels::parallel::power_table(ctx, d.value());
}

bool is_x0_apn(const FieldContext& ctx, std::span<const std::uint32_t> table, FieldElement x0) {
  if (table.size() != ctx.size())
    throw std::invalid_argument("function table has " + std::to_string(table.size()) + " entries, field has " +
                                std::to_string(ctx.size()));
  if (!ctx.contains(x0)) throw std::invalid_argument("x0 is not a field element");
  return kernels::parallel::x0_apn(table, x0.bits);
}

CyclotomicClass cyclotomic_class(unsigned n, std::uint64_t d) {
  const std::uint64_t order = group_order_of(n);
  CyclotomicClass c;
  c.n = n;
  std::uint64_t m = d % order;
  for (unsigned i = 0; i < n; ++i) {
    c.members.push_back(m);
    m = (2 * m) % order;
  }
  std::sort(c.members.begin(), c.members.end());
  c.members.erase(std::unique(c.members.begin(), c.members.end()), c.members.end());
  c.canonical = c.members.front();
  if (auto inv = inverse_mod_group_order(n, c.canonical)) c.inverse_canonical = cyclotomic_canonical(n, *inv);
  return c;
}

std::uint64_t cyclotomic_canonical(unsigned n, std::uint64_t d) {
  const std::uint64_t order = group_order_of(n);
  std::uint64_t m = d % order;
  std::uint64_t best = m;
  for (unsigned i = 1; i < n; ++i) {
    m = (2 * m) % order;
    best = std::min(best, m);
  }
  return best;
}

std::vector<std::uint64_t> cyclotomic_representatives(unsigned n) {
  const std::uint64_t order = group_order_of(n);
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 0; d < order; ++d)
    if (cyclotomic_canonical(n, d) == d) out.push_back(d);
  return out;
}

std::optional<std::uint64_t> inverse_mod_group_order(unsigned n, std::uint64_t d) {
  const auto order = static_cast<std::int64_t>(group_order_of(n));
  if (order == 1) return std::nullopt;
  std::int64_t old_r = static_cast<std::int64_t>(d) % order;
  std::int64_t r = order;
  std::int64_t old_s = 1;
  std::int64_t s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) return std::nullopt;
  std::int64_t inv = old_s % order;
  if (inv < 0) inv += order;
  return static_cast<std::uint64_t>(inv);
}

ApnClassification classify_exponent(const FieldContext& ctx, std::uint64_t d) { return classify_with(ctx, d, true); }

std::vector<ApnClassification> classify_all_exponents(const FieldContext& ctx, const ClassifyOptions& options) {
  if (ctx.n() > options.max_n)
    throw std::out_of_range("full classification capped at n = " + std::to_string(options.max_n));
  const auto reps = cyclotomic_representatives(ctx.n());
  std::vector<ApnClassification> rows(reps.size());
  const auto count = static_cast<std::int64_t>(reps.size());
  if (options.parallel) {
    // Each slot is written by exactly one iteration, so row order is fixed.
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = classify_with(ctx, reps[static_cast<std::size_t>(i)], true);
  } else {
    for (std::int64_t i = 0; i < count; ++i) rows[static_cast<std::size_t>(i)] = classify_with(ctx, reps[static_cast<std::size_t>(i)], false);
  }
  return rows;
}

}  // namespace zapn
