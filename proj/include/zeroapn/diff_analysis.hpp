#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "zeroapn/finite_field.hpp"

namespace zapn {

/// N_F(1, b) for every b, for F(x) = x^d over F_{2^n}. For power maps the
/// a = 1 row determines the whole difference table: N(a, b) = N(1, b / a^d).
struct DifferentialSpectrum {
  unsigned n = 0;
  std::uint64_t d = 0;
  std::vector<std::uint32_t> counts;  // indexed by b
  std::uint32_t delta = 0;

  /// Count value -> number of b attaining it.
  std::map<std::uint32_t, std::uint64_t> multiset() const;
};

struct ZeroApnResult {
  bool zero_apn = true;
  std::optional<FieldElement> witness;
};

struct ApnClassification {
  unsigned n = 0;
  std::uint64_t d = 0;
  std::size_t class_size = 1;
  bool is_apn = false;
  bool is_zero_apn = false;
  bool is_one_apn = false;
  std::uint32_t delta = 0;
  std::optional<FieldElement> witness;  // present iff !is_zero_apn
};

struct CyclotomicClass {
  unsigned n = 0;
  std::vector<std::uint64_t> members;  // ascending
  std::uint64_t canonical = 0;
  std::optional<std::uint64_t> inverse_canonical;

  bool contains(std::uint64_t d) const;
};

DifferentialSpectrum differential_spectrum(const FieldContext& ctx, const Exponent& d);
ZeroApnResult is_zero_apn_power(const FieldContext& ctx, const Exponent& d);
bool is_apn(const FieldContext& ctx, const Exponent& d);
/// x0 = 1 check derived from the spectrum: for every u != 1 the pair
/// {1, u} must be the only solution set of D_{1+u}F(v) = 1 + F(u).
bool is_one_apn(const FieldContext& ctx, const Exponent& d, const DifferentialSpectrum& spectrum);

/// Value table of x -> x^d.
std::vector<std::uint32_t> power_table(const FieldContext& ctx, const Exponent& d);
/// Definition-level check for an arbitrary function given by its table.
/// Throws std::invalid_argument if the table size is not 2^n.
bool is_x0_apn(const FieldContext& ctx, std::span<const std::uint32_t> table, FieldElement x0);

CyclotomicClass cyclotomic_class(unsigned n, std::uint64_t d);
std::uint64_t cyclotomic_canonical(unsigned n, std::uint64_t d);
/// Canonical representatives of all classes in [0, 2^n - 2], ascending.
std::vector<std::uint64_t> cyclotomic_representatives(unsigned n);
/// d^{-1} mod 2^n - 1 when it exists.
std::optional<std::uint64_t> inverse_mod_group_order(unsigned n, std::uint64_t d);

ApnClassification classify_exponent(const FieldContext& ctx, std::uint64_t d);

struct ClassifyOptions {
  bool parallel = true;
  /// Refuse full scans above this degree.
  unsigned max_n = 16;
};

/// One row per cyclotomic class, ordered by canonical exponent. Output is
/// identical for serial and parallel runs.
std::vector<ApnClassification> classify_all_exponents(const FieldContext& ctx, const ClassifyOptions& options = {});

}  // namespace zapn
