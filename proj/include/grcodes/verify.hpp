#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "grcodes/codes.hpp"

namespace grcodes {

/// One comparison: passes iff the two renderings are identical.
struct CheckRecord {
  std::string id;
  std::string anchor;  // which statement the check exercises
  std::string predicted;
  std::string observed;
  bool pass = false;
};

struct VerificationReport {
  std::string suite;
  nlohmann::ordered_json instance = nlohmann::ordered_json::object();
  nlohmann::ordered_json info = nlohmann::ordered_json::object();
  std::vector<CheckRecord> checks;
  std::optional<double> wall_seconds;  // only when timing was requested

  void add(std::string id, std::string anchor, std::string predicted, std::string observed);
  std::size_t passed() const;
  std::size_t failed() const { return checks.size() - passed(); }
  bool ok() const { return failed() == 0 && !checks.empty(); }

  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
  std::string to_text() const;
};

enum class Suite {
  GaussClosedForm,
  GaussMagnitude,
  Structure,
  ComponentCounts,
  CompleteWeightTable,
  CodeParameters,
  HomWeightFormula,
  HomWeightTable,
  GrayImage,
};

std::string suite_name(Suite s);
/// Accepts suite names and the numbered aliases 2.1, 3.1, 3.3, 3.4, 4.4, 4.5, 4.6.
std::optional<Suite> parse_suite(std::string_view text);
std::vector<Suite> all_suites();
/// Whether the suite runs on a code (otherwise on the base ring or tower alone).
bool suite_needs_code(Suite s);

struct SuiteInput {
  std::shared_ptr<const RingTower> tower;
  std::shared_ptr<const CodeContext> code;  // required when suite_needs_code
  unsigned threads = 1;
};

/// Runs one suite. Table suites throw PreconditionViolated outside their setting.
VerificationReport run_suite(Suite s, const SuiteInput& in);

nlohmann::ordered_json describe_tower(const RingTower& tw);
nlohmann::ordered_json describe_code(const CodeContext& ctx);

}  // namespace grcodes
