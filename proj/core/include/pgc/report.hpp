#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace pgc {

struct ReportItem {
  std::string item;
  std::string description;
  bool pass = false;
  /// Offending vector/matrix (or supporting data) for the item; null when
  /// there is nothing to show.
  nlohmann::json witness;
};

/// An ordered list of labelled pass/fail checks.
class Report {
 public:
  explicit Report(std::string title) : title_(std::move(title)) {}

  void add(std::string item, std::string description, bool pass, nlohmann::json witness = nullptr);

  const std::string& title() const noexcept { return title_; }
  const std::vector<ReportItem>& items() const noexcept { return items_; }
  const ReportItem* find(std::string_view item) const;
  bool all_pass() const noexcept;

  /// [{item, description, pass, witness}, ...]
  nlohmann::json to_json() const;
  std::string to_text() const;

 private:
  std::string title_;
  std::vector<ReportItem> items_;
};

}  // namespace pgc
