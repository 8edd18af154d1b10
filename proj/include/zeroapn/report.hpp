#pragma once

#include <string>
#include <vector>

#include "zeroapn/diff_analysis.hpp"
#include "zeroapn/verifier.hpp"

namespace zapn {

/// Version tag carried by every JSON document as its "schema" field.
inline constexpr const char* kJsonSchema = "zeroapn/1";

// Classification table. CSV header:
//   n,canonical_d,class_size,is_apn,is_zero_apn,is_one_apn,witness
// Booleans are 0/1; witness is the field element in hex, empty when 0-APN.
std::string classification_csv(const std::vector<ApnClassification>& rows);
std::string classification_json(unsigned n, const std::vector<ApnClassification>& rows);
std::string classification_text(unsigned n, const std::vector<ApnClassification>& rows);

std::string table1_json(const std::vector<Table1Row>& rows);
std::string table1_text(const std::vector<Table1Row>& rows);

std::string verification_json(const std::vector<TheoremVerification>& runs);
std::string verification_text(const std::vector<TheoremVerification>& runs);

}  // namespace zapn
