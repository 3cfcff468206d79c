// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace polycount {

enum class Status { pass, fail, unchecked };

const char* to_string(Status s);

struct CheckRecord {
  std::string name;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string expected;
  std::string actual;
  Status status = Status::pass;
  std::string detail;
};

struct Report {
  std::string title;
  std::vector<CheckRecord> checks;
  // Points skipped because of a pole or an inapplicable condition.
  std::size_t skipped = 0;

  void add(CheckRecord rec) { checks.push_back(std::move(rec)); }
  void add(std::string name, std::vector<std::pair<std::string, std::string>> inputs, std::string expected,
           std::string actual, bool ok);
  void merge(const Report& other);

  std::size_t count(Status s) const;
  bool ok() const { return count(Status::fail) == 0; }
  std::vector<const CheckRecord*> failures() const;
};

}  // namespace polycount
