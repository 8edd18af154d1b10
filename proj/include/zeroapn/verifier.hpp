#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zeroapn/artifacts.hpp"
#include "zeroapn/diff_analysis.hpp"
#include "zeroapn/families.hpp"

namespace zapn {

struct InstanceCheck {
  std::string family;
  std::optional<std::int64_t> k;
  unsigned n = 0;
  std::int64_t d_raw = 0;
  std::uint64_t d = 0;
  std::optional<std::string> rejection;
  /// True for admissible instances; false where the family claims an iff and
  /// the side condition fails; empty when the theorem says nothing.
  std::optional<bool> expected_zero_apn;
  bool zero_apn = false;
  std::optional<FieldElement> witness;
  double seconds = 0;

  bool passed() const { return !expected_zero_apn || *expected_zero_apn == zero_apn; }
};

struct FamilyReport {
  std::string family;
  std::string theorem;
  std::vector<InstanceCheck> instances;

  bool passed() const;
};

/// Brute-force 0-APN check of every instance with n_min <= n <= n_max.
/// Instances run one after another; each scan is itself parallel.
FamilyReport verify_family_bruteforce(const FamilyDescriptor& family, unsigned n_max, unsigned n_min = 3,
                                      const FieldOptions& field = {});

struct ApnCheck {
  std::string source;  // family id, or "gold" for the control
  unsigned n = 0;
  std::uint64_t d = 0;
  bool expected_apn = false;
  bool apn = false;
  std::uint32_t delta = 0;

  bool passed() const { return apn == expected_apn; }
};

/// Admissible instances with n <= n_max whose class appears in the reference
/// table must not be APN.
std::vector<ApnCheck> verify_negative_apn(const FamilyDescriptor& family, unsigned n_max = 11);
/// x^3 must be APN for every n in [n_lo, n_hi].
std::vector<ApnCheck> gold_control(unsigned n_lo = 5, unsigned n_hi = 11);

struct FactorRoots {
  BinaryPolynomial factor;
  std::size_t roots_in_field = 0;
  std::vector<FieldElement> criterion_solutions;  // roots that solve the criterion
};

struct SubfieldReport {
  std::string theorem;
  unsigned n = 0;
  std::uint64_t d = 0;
  std::vector<FactorRoots> factors;  // nontrivial factors only
  /// False where the side condition fails and the theorem claims an iff.
  bool expect_exclusion = true;

  bool excluded() const;
  bool passed() const { return excluded() == expect_exclusion; }
};

/// For every factor other than x and x+1: no root in F_{2^n}, or no root
/// that satisfies (x+1)^d + x^d + 1 = 0 for the family exponent at this n.
SubfieldReport verify_subfield_exclusion(const ProofArtifact& artifact, const Factorization& factorization,
                                         unsigned n);
SubfieldReport verify_subfield_exclusion(const ProofArtifact& artifact, unsigned n);

struct Table1Class {
  std::uint64_t canonical = 0;
  std::size_t class_size = 0;
  std::uint32_t delta = 0;
  std::vector<std::string> explained_by;  // "T5 (k=4)" style
  bool in_reference = false;
};

struct Table1Row {
  unsigned n = 0;
  bool has_reference = false;
  std::vector<Table1Class> classes;       // 0-APN, not APN, by canonical exponent
  std::vector<std::int64_t> missing;      // reference exponents with no computed class
  std::vector<std::uint64_t> extra;       // computed classes absent from the reference

  bool matches_reference() const { return has_reference && missing.empty() && extra.empty(); }
};

struct TheoremVerification {
  std::string theorem;
  std::string family;
  std::vector<TranscriptionCheck> transcription;
  std::optional<ReplayResult> replay;
  std::string replay_error;
  FamilyReport bruteforce;
  std::vector<SubfieldReport> subfield;
  std::vector<ApnCheck> negative_apn;

  bool transcription_passed() const;
  bool replay_passed() const;
  bool bruteforce_passed() const { return bruteforce.passed(); }
  bool subfield_passed() const;
  bool negative_apn_passed() const;
  bool passed() const;
};

/// Everything checkable for one theorem: transcription, elimination replay,
/// brute force up to n_max, subfield exclusion at every brute-forced n, and
/// the not-APN check against the reference table.
TheoremVerification verify_theorem(const ProofArtifact& artifact, unsigned n_max, const FieldOptions& field = {});

std::vector<Table1Row> reproduce_table1(const std::vector<unsigned>& n_set = {9, 10, 11},
                                        const FieldOptions& field = {});

}  // namespace zapn
