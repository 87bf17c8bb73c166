#include "pgc/report.hpp"

#include <algorithm>
#include <sstream>

namespace pgc {

void Report::add(std::string item, std::string description, bool pass, nlohmann::json witness) {
  items_.push_back({std::move(item), std::move(description), pass, std::move(witness)});
}

const ReportItem* Report::find(std::string_view item) const {
  auto it = std::find_if(items_.begin(), items_.end(), [&](const ReportItem& r) { return r.item == item; });
  return it == items_.end() ? nullptr : &*it;
}

bool Report::all_pass() const noexcept {
  return std::all_of(items_.begin(), items_.end(), [](const ReportItem& r) { return r.pass; });
}

nlohmann::json Report::to_json() const {
  auto out = nlohmann::json::array();
  for (const auto& r : items_) {
    out.push_back({{"item", r.item}, {"description", r.description}, {"pass", r.pass}, {"witness", r.witness}});
  }
  return out;
}

std::string Report::to_text() const {
  std::ostringstream os;
  os << title_ << '\n';
  for (const auto& r : items_) {
    os << "  [" << (r.pass ? "PASS" : "FAIL") << "] " << r.item << ": " << r.description << '\n';
    if (!r.pass && !r.witness.is_null()) os << "         witness: " << r.witness.dump() << '\n';
  }
  return os.str();
}

}  // namespace pgc
