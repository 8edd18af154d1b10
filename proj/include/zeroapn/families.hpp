#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zeroapn/finite_field.hpp"

namespace zapn {

/// What the family is indexed by: k for the (k -> d, k -> n) families, or n
/// directly for the constant exponent -9.
enum class FamilyParameter { k, n };

struct SideCondition {
  std::string description;  // e.g. "3 does not divide k"
  std::function<bool(std::int64_t k, unsigned n)> admits;
};

struct ExplainedPair {
  std::int64_t d;
  unsigned n;
};

/// One infinite class of 0-APN power maps x^d over F_{2^n}.
struct FamilyDescriptor {
  std::string id;             // T1..T7
  std::string theorem;        // TH1..TH7
  std::string exponent_form;  // integer expression in k, e.g. "3*2^k-7"
  std::string degree_form;    // integer expression in k, e.g. "2k+1"; empty when parameter is n
  FamilyParameter parameter = FamilyParameter::k;
  std::int64_t min_parameter = 1;
  std::vector<SideCondition> side_conditions;
  std::vector<ExplainedPair> explained_pairs;
};

struct FamilyCandidate {
  std::string family;
  std::optional<std::int64_t> k;  // empty for n-indexed families
  unsigned n = 0;
  Exponent d;
  std::optional<std::string> rejection;  // failing side condition, if any

  bool admissible() const { return !rejection.has_value(); }
};

const std::vector<FamilyDescriptor>& families();
/// Looks up by family id (T1..T7) or theorem label (TH1..TH7), case-insensitive.
const FamilyDescriptor& find_family(std::string_view id);

/// The (d, n) pair for one parameter value, with any side-condition rejection.
FamilyCandidate evaluate_family(const FamilyDescriptor& family, std::int64_t parameter);
/// All candidates with n in [n_lo, n_hi], admissible or not, ordered by n.
std::vector<FamilyCandidate> family_candidates(const FamilyDescriptor& family, unsigned n_lo, unsigned n_hi);
/// Admissible instances for parameter values in [lo, hi].
std::vector<FamilyCandidate> enumerate_family(const FamilyDescriptor& family, std::int64_t lo, std::int64_t hi);
/// Admissible instances with n in [n_lo, n_hi].
std::vector<FamilyCandidate> enumerate_family_by_n(const FamilyDescriptor& family, unsigned n_lo, unsigned n_hi);

/// One row of the reference table of unexplained 0-APN exponents.
struct ReferenceTableRow {
  unsigned n;
  std::vector<std::int64_t> exponents;
};

/// Transcription of the published list for n = 9, 10, 11.
const std::vector<ReferenceTableRow>& reference_table1();
const ReferenceTableRow* reference_row(unsigned n);

}  // namespace zapn
