#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include <json.hpp>
#include <omp.h>

#include "zeroapn/report.hpp"

using namespace zapn;

TEST_CASE("classification CSV") {
  const auto rows = classify_all_exponents(FieldContext(3));
  const auto csv = classification_csv(rows);
  std::istringstream in(csv);
  std::string line;
  std::getline(in, line);
  CHECK(line == "n,canonical_d,class_size,is_apn,is_zero_apn,is_one_apn,witness");
  std::size_t count = 0;
  while (std::getline(in, line)) {
    ++count;
    CHECK(std::count(line.begin(), line.end(), ',') == 6);
  }
  CHECK(count == rows.size());
  CHECK(csv.find("3,3,3,1,1,1,\n") != std::string::npos);
}

TEST_CASE("classification JSON round-trips") {
  const FieldContext ctx(7);
  const auto rows = classify_all_exponents(ctx);
  const auto doc = nlohmann::json::parse(classification_json(7, rows));
  CHECK(doc["schema"] == kJsonSchema);
  CHECK(doc["n"] == 7);
  REQUIRE(doc["rows"].size() == rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& j = doc["rows"][i];
    CHECK(j["canonical_d"].get<std::uint64_t>() == rows[i].d);
    CHECK(j["is_zero_apn"].get<bool>() == rows[i].is_zero_apn);
    CHECK(j["witness"].is_null() == !rows[i].witness.has_value());
  }
  CHECK(classification_text(7, rows).find("cyclotomic classes") != std::string::npos);
}

TEST_CASE("output is the same at any thread count") {
  const FieldContext ctx(9);
  omp_set_num_threads(1);
  const auto one = classification_csv(classify_all_exponents(ctx));
  omp_set_num_threads(4);
  const auto four = classification_csv(classify_all_exponents(ctx));
  CHECK(one == four);
}

TEST_CASE("table and verification JSON carry the schema tag") {
  const auto t = nlohmann::json::parse(table1_json(reproduce_table1({9})));
  CHECK(t["schema"] == kJsonSchema);
  CHECK(t["rows"][0]["missing"].empty());
  const auto v = nlohmann::json::parse(verification_json({verify_theorem(load_artifact("TH1"), 10)}));
  CHECK(v["schema"] == kJsonSchema);
  CHECK(v["theorems"][0]["passed"] == true);
  CHECK(verification_text({verify_theorem(load_artifact("TH3"), 9)}).find("FAIL") == std::string::npos);
}
