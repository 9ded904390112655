#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>

#include "tenadic/record_io.hpp"
#include "tenadic/verify.hpp"

using tenadic::RunRecord;

TEST_CASE("record round trip is content-identical") {
  const RunRecord record = tenadic::run(3, 12);
  const std::string text = tenadic::record_to_string(record);
  const RunRecord back = tenadic::record_from_string(text);
  CHECK(tenadic::record_to_string(back) == text);
  CHECK(back.digits == record.digits);
  CHECK(back.gaps == record.gaps);
  CHECK(back.representatives == record.representatives);
  CHECK(back.classes.size() == record.classes.size());
  for (std::size_t i = 0; i < back.classes.size(); ++i) {
    CHECK(back.classes[i] == record.classes[i]);
  }
  CHECK(back.p1 == record.p1);
  CHECK_FALSE(back.incomplete);
}

TEST_CASE("schema fields and big integers as decimal strings") {
  const RunRecord record = tenadic::run(3, 4);
  const auto j = tenadic::record_to_json(record);
  CHECK(j["schema_version"] == 1);
  CHECK(j["p1"] == 3);
  CHECK(j["digits"].size() == 4);
  CHECK(j["digits"][1]["b"] == 3);
  CHECK(j["digits"][1]["d"] == 3);
  CHECK(j["gaps"] == nlohmann::ordered_json({2, 2, 6, 4}));
  CHECK(j["representatives"][3] == "607414603");
  CHECK(j["classes"][3]["residue"] == "607414603");
  CHECK(j["classes"][3]["level"] == 13);
  CHECK(j["incomplete"] == false);
}

TEST_CASE("file save and load") {
  const RunRecord record = tenadic::run(903, 8);
  const auto path = std::filesystem::temp_directory_path() /
                    "tenadic_record_io_test.json";
  tenadic::save_record(record, path);
  const RunRecord back = tenadic::load_record(path);
  CHECK(tenadic::record_to_string(back) == tenadic::record_to_string(record));
  std::filesystem::remove(path);
  CHECK_THROWS(tenadic::load_record(path));
}

TEST_CASE("malformed records are rejected") {
  CHECK_THROWS(tenadic::record_from_string("{}"));
  CHECK_THROWS(tenadic::record_from_string("[1,2,3]"));
  CHECK_THROWS(tenadic::record_from_string("{\"schema_version\": 2}"));
}

TEST_CASE("verification passes on engine output") {
  const RunRecord record = tenadic::run(3, 30);
  tenadic::VerifyOptions options;
  options.check_corollaries = false;
  const auto summary = tenadic::verify_record(record, options);
  CHECK(summary.pass);
}

TEST_CASE("verification catches corruption") {
  // An even digit injected into the record must trip the oddness check.
  RunRecord bad = tenadic::run(3, 10);
  bad.digits[4].value = 4;
  tenadic::VerifyOptions options;
  options.check_corollaries = false;
  const auto summary = tenadic::verify_record(bad, options);
  CHECK_FALSE(summary.pass);
  bool theorem1_failed = false;
  for (const auto& c : summary.checks) {
    if (c.name == "committed-digits-odd") theorem1_failed = !c.pass;
  }
  CHECK(theorem1_failed);

  // A corrupted representative must trip the reconstruction check.
  RunRecord bad2 = tenadic::run(3, 10);
  bad2.representatives[2] += bad2.classes[2].modulus();
  const auto summary2 = tenadic::verify_record(bad2, options);
  CHECK_FALSE(summary2.pass);

  // A gap inconsistent with the positions must be flagged.
  RunRecord bad3 = tenadic::run(3, 10);
  bad3.gaps[1] += 1;
  CHECK_FALSE(tenadic::verify_record(bad3, options).pass);
}

TEST_CASE("fresh verification with corollaries") {
  tenadic::RunConfig cfg;
  cfg.p1 = 3;
  cfg.target_digits = 25;
  const auto summary = tenadic::verify_fresh(cfg);
  CHECK(summary.pass);
}
