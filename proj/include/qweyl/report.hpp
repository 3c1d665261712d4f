#pragma once

// Line-oriented verification reports: `suite=..., case=..., residual=..., pass=...`.

#include <string>
#include <vector>

namespace qweyl {

struct ReportRecord {
  std::string suite;
  std::string case_id;  ///< no commas
  double residual = 0.0;
  bool pass = false;
  std::string witness;  ///< optional, printed only for failures
};

class Report {
 public:
  void add(std::string suite, std::string case_id, double residual, bool pass, std::string witness = {});
  void merge(const Report& other);

  const std::vector<ReportRecord>& records() const { return records_; }
  std::size_t size() const { return records_.size(); }
  std::size_t failures() const;
  bool all_pass() const { return failures() == 0; }
  /// Largest residual over all records (0 for an empty report).
  double max_residual() const;

  /// One line per record; records are stably ordered by suite name.
  std::string to_lines() const;

 private:
  std::vector<ReportRecord> records_;
};

std::string format_record(const ReportRecord& r);

}  // namespace qweyl
