#include "ncalg/report.hpp"

#include <algorithm>
#include "json.hpp"

namespace ncalg {

void Report::fact(std::string key, std::string value) {
  facts.emplace_back(std::move(key), std::move(value));
}

void Report::require(bool condition, const std::string& description) {
  if (!condition) failures.push_back(description);
}

std::string Report::to_text() const {
  std::string out = "# " + command + "\n";
  for (const auto& [key, value] : facts) out += key + ": " + value + "\n";
  for (const ReportTable& table : tables) {
    out += "\n[" + table.name + "]\n";
    std::vector<std::size_t> widths(table.columns.size());
    for (std::size_t c = 0; c < table.columns.size(); ++c)
      widths[c] = table.columns[c].size();
    for (const auto& row : table.rows)
      for (std::size_t c = 0; c < row.size() && c < widths.size(); ++c)
        widths[c] = std::max(widths[c], row[c].size());
    auto emit_row = [&](const std::vector<std::string>& row) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (c) out += "  ";
        out += row[c];
        if (c + 1 < row.size()) out += std::string(widths[c] - row[c].size(), ' ');
      }
      out += "\n";
    };
    emit_row(table.columns);
    for (const auto& row : table.rows) emit_row(row);
  }
  if (!tables.empty() || !discrepancies.empty() || !failures.empty()) out += "\n";
  for (const std::string& note : discrepancies) out += "discrepancy: " + note + "\n";
  for (const std::string& failure : failures) out += "FAIL: " + failure + "\n";
  out += std::string("ok: ") + (ok() ? "true" : "false") + "\n";
  return out;
}

std::string Report::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["command"] = command;
  j["facts"] = nlohmann::json::array();
  for (const auto& [key, value] : facts)
    j["facts"].push_back({{"key", key}, {"value", value}});
  j["tables"] = nlohmann::json::array();
  for (const ReportTable& table : tables)
    j["tables"].push_back(
        {{"name", table.name}, {"columns", table.columns}, {"rows", table.rows}});
  j["discrepancies"] = discrepancies;
  j["failures"] = failures;
  j["ok"] = ok();
  return j.dump(2) + "\n";
}

ReportTable series_table(std::string name, const DimensionSeries& series) {
  ReportTable table;
  table.name = std::move(name);
  table.columns = {"degree", "count"};
  for (long long d = 0; d <= series.max_degree(); ++d)
    table.rows.push_back({std::to_string(d), to_string(series.at(d))});
  return table;
}

std::string to_csv(const DimensionSeries& series) {
  std::string out = "degree,count\n";
  for (long long d = 0; d <= series.max_degree(); ++d)
    out += std::to_string(d) + "," + to_string(series.at(d)) + "\n";
  return out;
}

}  // namespace ncalg
