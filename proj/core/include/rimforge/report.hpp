#pragma once

#include <string>
#include <variant>
#include <vector>

#include "rimforge/common.hpp"

namespace rimforge {

/// A deterministic, ordered key/value report. Values render identically for
/// identical inputs and budgets; nothing time- or address-dependent belongs
/// here unless the caller opts in explicitly.
class Report {
 public:
  enum class Status { ok, indeterminate, err };
  using Value = std::variant<std::string, Int, bool, std::vector<std::string>>;

  std::string command;
  Status status = Status::ok;

  void put(std::string key, std::string value);
  void put(std::string key, const char* value);
  void put(std::string key, Int value);
  void put(std::string key, long value);
  void put(std::string key, bool value);
  void put(std::string key, std::vector<std::string> value);

  const std::vector<std::pair<std::string, Value>>& items() const { return items_; }

  std::string render_text() const;
  std::string render_json() const;
  /// 0 for OK, 2 for INDETERMINATE, 1 for ERROR.
  int exit_code() const;

 private:
  std::vector<std::pair<std::string, Value>> items_;
};

}  // namespace rimforge
