#include "qweyl/report.hpp"

#include <algorithm>
#include <cstdio>

namespace qweyl {

void Report::add(std::string suite, std::string case_id, double residual, bool pass, std::string witness) {
  records_.push_back({std::move(suite), std::move(case_id), residual, pass, std::move(witness)});
}

void Report::merge(const Report& other) {
  records_.insert(records_.end(), other.records_.begin(), other.records_.end());
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(records_.begin(), records_.end(), [](const ReportRecord& r) { return !r.pass; }));
}

double Report::max_residual() const {
  double m = 0.0;
  for (const auto& r : records_) m = std::max(m, r.residual);
  return m;
}

std::string format_record(const ReportRecord& r) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", r.residual);
  std::string line = "suite=" + r.suite + ", case=" + r.case_id + ", residual=" + buf + ", pass=" + (r.pass ? "true" : "false");
  if (!r.pass && !r.witness.empty()) line += ", witness=" + r.witness;
  return line;
}

std::string Report::to_lines() const {
  std::vector<const ReportRecord*> order;
  order.reserve(records_.size());
  for (const auto& r : records_) order.push_back(&r);
  std::stable_sort(order.begin(), order.end(), [](const ReportRecord* a, const ReportRecord* b) { return a->suite < b->suite; });
  std::string out;
  for (const ReportRecord* r : order) out += format_record(*r) + "\n";
  return out;
}

}  // namespace qweyl
