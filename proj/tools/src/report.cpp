#include "minlin/cli/report.hpp"

#include <algorithm>
#include <sstream>

namespace minlin::cli {

namespace {

const char* status_tag(Status s) {
  switch (s) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Skip:
      return "SKIP";
  }
  return "????";
}

}  // namespace

std::size_t Report::count(Status status) const {
  return static_cast<std::size_t>(std::count_if(
      items.begin(), items.end(), [&](const ReportItem& i) { return i.status == status; }));
}

std::size_t Report::expected_failures() const {
  return static_cast<std::size_t>(std::count_if(items.begin(), items.end(), [](const ReportItem& i) {
    return i.status == Status::Fail && i.expected_failure;
  }));
}

std::string Report::to_text() const {
  std::ostringstream out;
  out << header << " (seed " << seed << ")\n";
  for (const auto& item : items) {
    out << "[" << status_tag(item.status) << "] " << item.suite << " | " << item.anchor << " | "
        << item.subject;
    if (!item.detail.empty()) out << " | " << item.detail;
    out << "\n";
  }
  out << "summary: " << count(Status::Pass) << " passed, " << count(Status::Fail) << " failed ("
      << expected_failures() << " expected), " << count(Status::Skip) << " skipped\n";
  return out.str();
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["header"] = header;
  j["seed"] = seed;
  j["items"] = nlohmann::ordered_json::array();
  for (const auto& item : items) {
    j["items"].push_back({{"suite", item.suite},
                          {"anchor", item.anchor},
                          {"subject", item.subject},
                          {"status", status_tag(item.status)},
                          {"expected_failure", item.expected_failure},
                          {"detail", item.detail}});
  }
  j["summary"] = {{"passed", count(Status::Pass)},
                  {"failed", count(Status::Fail)},
                  {"expected_failures", expected_failures()},
                  {"skipped", count(Status::Skip)}};
  j["all_passed"] = all_passed();
  return j;
}

}  // namespace minlin::cli
