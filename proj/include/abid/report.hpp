#pragma once

#include <string>
#include <vector>

namespace abid {

struct CheckRow {
  std::string name;      // "A3/counts/total" style
  std::string expected;
  std::string computed;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<CheckRow> rows;

  bool pass() const {
    for (const auto& r : rows)
      if (!r.pass) return false;
    return true;
  }
  void add(std::string name, std::string expected, std::string computed) {
    const bool ok = expected == computed;
    rows.push_back(CheckRow{std::move(name), std::move(expected), std::move(computed), ok});
  }
  void add_bool(std::string name, bool ok) {
    rows.push_back(CheckRow{std::move(name), "true", ok ? "true" : "false", ok});
  }
  void absorb(const Report& other) {
    rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  }
};

}  // namespace abid
