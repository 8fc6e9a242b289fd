#pragma once

#include <string>
#include <utility>
#include <vector>

#include "ncalg/growth.hpp"

namespace ncalg {

// A table of exact values, rendered identically into text and JSON.
struct ReportTable {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
};

// Result of one CLI subcommand (or one acceptance check): an echo of the
// command, key/value facts, tables, expected discrepancies (flagged but not
// fatal), and failed assertions (fatal: they flip the exit status).
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<ReportTable> tables;
  std::vector<std::string> discrepancies;
  std::vector<std::string> failures;

  void fact(std::string key, std::string value);
  void require(bool condition, const std::string& description);
  bool ok() const { return failures.empty(); }

  std::string to_text() const;
  std::string to_json() const;  // versioned with "schema": 1
};

ReportTable series_table(std::string name, const DimensionSeries& series);
std::string to_csv(const DimensionSeries& series);  // columns: degree,count

}  // namespace ncalg
