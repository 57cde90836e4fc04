#pragma once

#include <json.hpp>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace minlin::cli {

enum class Status { Pass, Fail, Skip };

struct ReportItem {
  std::string suite;
  std::string anchor;   // the identity being checked
  std::string subject;  // which named objects it was checked on
  Status status = Status::Pass;
  bool expected_failure = false;  // failure caused by a declared hypothesis violation
  std::string detail;
};

struct Report {
  std::uint64_t seed = 0;
  std::string header;
  std::vector<ReportItem> items;

  std::size_t count(Status status) const;
  std::size_t expected_failures() const;
  bool all_passed() const { return count(Status::Fail) == 0; }

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
};

}  // namespace minlin::cli
