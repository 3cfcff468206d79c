// SPDX-License-Identifier: Apache-2.0
#include "polycount/report.hpp"

#include <algorithm>

namespace polycount {

const char* to_string(Status s) {
  switch (s) {
    case Status::pass:
      return "pass";
    case Status::fail:
      return "fail";
    case Status::unchecked:
      return "unchecked";
  }
  return "unknown";
}

void Report::add(std::string name, std::vector<std::pair<std::string, std::string>> inputs, std::string expected,
                 std::string actual, bool ok) {
  checks.push_back(CheckRecord{std::move(name), std::move(inputs), std::move(expected), std::move(actual),
                               ok ? Status::pass : Status::fail, {}});
}

void Report::merge(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  skipped += other.skipped;
}

std::size_t Report::count(Status s) const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [s](const CheckRecord& c) { return c.status == s; }));
}

std::vector<const CheckRecord*> Report::failures() const {
  std::vector<const CheckRecord*> out;
  for (const auto& c : checks)
    if (c.status == Status::fail) out.push_back(&c);
  return out;
}

}  // namespace polycount
