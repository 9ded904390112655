#include "tenadic/record_io.hpp"

#include <fstream>
#include <stdexcept>

namespace tenadic {

nlohmann::ordered_json record_to_json(const RunRecord& record) {
  nlohmann::ordered_json j;
  j["schema_version"] = 1;
  j["p1"] = record.p1;
  nlohmann::ordered_json digits = nlohmann::ordered_json::array();
  for (const PinnedDigit& d : record.digits) {
    digits.push_back({{"b", d.value}, {"d", d.position}});
  }
  j["digits"] = digits;
  j["gaps"] = record.gaps;
  nlohmann::ordered_json classes = nlohmann::ordered_json::array();
  for (const ExponentClass& c : record.classes) {
    classes.push_back(
        {{"residue", c.residue().str()}, {"level", c.level()}});
  }
  j["classes"] = classes;
  nlohmann::ordered_json reps = nlohmann::ordered_json::array();
  for (const BigUint& r : record.representatives) reps.push_back(r.str());
  j["representatives"] = reps;
  j["incomplete"] = record.incomplete;
  return j;
}

RunRecord record_from_json(const nlohmann::json& j) {
  if (!j.is_object() || j.value("schema_version", 0) != 1) {
    throw std::runtime_error("unsupported run record schema");
  }
  RunRecord record;
  record.p1 = j.at("p1").get<std::uint64_t>();
  for (const auto& d : j.at("digits")) {
    record.digits.push_back(
        PinnedDigit{d.at("b").get<int>(), d.at("d").get<int>()});
  }
  record.gaps = j.at("gaps").get<std::vector<int>>();
  for (const auto& c : j.at("classes")) {
    record.classes.emplace_back(BigUint(c.at("residue").get<std::string>()),
                                c.at("level").get<int>());
  }
  for (const auto& r : j.at("representatives")) {
    record.representatives.emplace_back(r.get<std::string>());
  }
  record.incomplete = j.value("incomplete", false);
  return record;
}

std::string record_to_string(const RunRecord& record) {
  return record_to_json(record).dump(2) + "\n";
}

RunRecord record_from_string(const std::string& text) {
  return record_from_json(nlohmann::json::parse(text));
}

void save_record(const RunRecord& record, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open record file for writing: " +
                             path.string());
  }
  out << record_to_string(record);
  if (!out) {
    throw std::runtime_error("failed to write record file: " + path.string());
  }
}

RunRecord load_record(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open record file: " + path.string());
  }
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return record_from_string(text);
}

}  // namespace tenadic
