#include "zeroapn/families.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "zeroapn/int_expr.hpp"

namespace zapn {

namespace {

SideCondition not_congruent(std::int64_t residue, std::int64_t modulus) {
  return {"k != " + std::to_string(residue) + " (mod " + std::to_string(modulus) + ")",
          [residue, modulus](std::int64_t k, unsigned) { return k % modulus != residue; }};
}

std::vector<FamilyDescriptor> build_families() {
  std::vector<FamilyDescriptor> out;
  out.push_back({"T1", "TH6", "3*2^k-7", "2k+1", FamilyParameter::k, 1, {}, {{89, 11}}});
  out.push_back({"T2", "TH4", "2^(2k+1)-2^(k+1)-2^k+1", "3k+1", FamilyParameter::k, 1, {}, {{105, 10}}});
  out.push_back({"T3",
                 "TH2",
                 "3(2^k-1)",
                 "2k",
                 FamilyParameter::k,
                 1,
                 {{"3 does not divide k", [](std::int64_t k, unsigned) { return k % 3 != 0; }}},
                 {{93, 10}}});
  // The theorem statement's exponent; the summary table prints
  // 5(2^(k+1)+2^k+1), which does not produce (125, 9) or (245, 11).
  out.push_back({"T4", "TH7", "5(2^k+2^(k-1)+1)", "2k+1", FamilyParameter::k, 1, {not_congruent(2, 5)},
                 {{125, 9}, {245, 11}}});
  out.push_back({"T5", "TH3", "3(2^k-1)", "2k+1", FamilyParameter::k, 1, {not_congruent(13, 27)},
                 {{45, 9}, {93, 11}}});
  out.push_back({"T6", "TH5", "3(2^(k+1)+1)", "3k+1", FamilyParameter::k, 1, {not_congruent(9, 14)}, {{51, 10}}});
  out.push_back({"T7",
                 "TH1",
                 "-9",
                 "",
                 FamilyParameter::n,
                 1,
                 {{"9 does not divide n", [](std::int64_t, unsigned n) { return n % 9 != 0; }}},
                 {{447, 10}}});
  return out;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

unsigned degree_of(const FamilyDescriptor& family, std::int64_t parameter) {
  if (family.parameter == FamilyParameter::n) return static_cast<unsigned>(parameter);
  return static_cast<unsigned>(evaluate_int_expression(family.degree_form, {{'k', parameter}}));
}

}  // namespace

const std::vector<FamilyDescriptor>& families() {
  static const std::vector<FamilyDescriptor> kFamilies = build_families();
  return kFamilies;
}

const FamilyDescriptor& find_family(std::string_view id) {
  const std::string key = upper(id);
  for (const auto& f : families()) {
    if (f.id == key || f.theorem == key) return f;
  }
  throw std::invalid_argument("unknown family or theorem id: " + std::string(id));
}

FamilyCandidate evaluate_family(const FamilyDescriptor& family, std::int64_t parameter) {
  if (parameter < family.min_parameter)
    throw std::out_of_range(family.id + ": parameter below " + std::to_string(family.min_parameter));
  const unsigned n = degree_of(family, parameter);
  if (n < 1 || n > FieldContext::kMaxDegree) throw std::out_of_range(family.id + ": field degree out of range");
  const char var = family.parameter == FamilyParameter::k ? 'k' : 'n';
  const auto raw = evaluate_int_expression(family.exponent_form, {{var, parameter}});
  FamilyCandidate c{family.id, std::nullopt, n, Exponent(raw, n, family.exponent_form), std::nullopt};
  if (family.parameter == FamilyParameter::k) c.k = parameter;
  for (const auto& cond : family.side_conditions) {
    if (!cond.admits(parameter, n)) {
      c.rejection = cond.description;
      break;
    }
  }
  return c;
}

std::vector<FamilyCandidate> family_candidates(const FamilyDescriptor& family, unsigned n_lo, unsigned n_hi) {
  std::vector<FamilyCandidate> out;
  n_hi = std::min(n_hi, FieldContext::kMaxDegree);
  for (std::int64_t p = family.min_parameter;; ++p) {
    const unsigned n = degree_of(family, p);
    if (n > n_hi) break;
    if (n >= n_lo) out.push_back(evaluate_family(family, p));
  }
  return out;
}

std::vector<FamilyCandidate> enumerate_family(const FamilyDescriptor& family, std::int64_t lo, std::int64_t hi) {
  std::vector<FamilyCandidate> out;
  for (std::int64_t p = std::max(lo, family.min_parameter); p <= hi; ++p) {
    auto c = evaluate_family(family, p);
    if (c.admissible()) out.push_back(std::move(c));
  }
  return out;
}

std::vector<FamilyCandidate> enumerate_family_by_n(const FamilyDescriptor& family, unsigned n_lo, unsigned n_hi) {
  auto all = family_candidates(family, n_lo, n_hi);
  std::erase_if(all, [](const FamilyCandidate& c) { return !c.admissible(); });
  return all;
}

const std::vector<ReferenceTableRow>& reference_table1() {
  static const std::vector<ReferenceTableRow> kRows = {
      {9, {45, 125}},
      {10, {51, 93, 105, 351, 447}},
      {11, {59, 93, 169, 243, 303, 507, 245, 447, 89, 445}},
  };
  return kRows;
}

const ReferenceTableRow* reference_row(unsigned n) {
  for (const auto& row : reference_table1())
    if (row.n == n) return &row;
  return nullptr;
}

}  // namespace zapn
