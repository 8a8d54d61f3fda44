#include "carpetdim/carpet.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

namespace carpetdim {

namespace {

constexpr double kSumTol = 1e-12;
constexpr double kAssumptionTol = 1e-12;

std::string describe_cell(const Cell& c) {
  std::ostringstream os;
  os << "[" << c.col << "," << c.row << "]";
  return os.str();
}

void check_ratios(const std::vector<double>& v, const char* name, bool allow_gaps,
                  ValidationReport& report) {
  if (v.empty()) {
    report.violations.push_back(std::string(name) + ": list is empty");
    return;
  }
  double sum = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!(v[i] > 0.0) || !(v[i] < 1.0) || !std::isfinite(v[i])) {
      std::ostringstream os;
      os << name << "[" << i << "] = " << v[i] << " is outside (0,1)";
      report.violations.push_back(os.str());
    }
    sum += v[i];
  }
  if (allow_gaps) {
    if (sum > 1.0 + kSumTol) {
      std::ostringstream os;
      os << name << " sum " << sum << " exceeds 1";
      report.violations.push_back(os.str());
    }
  } else if (std::fabs(sum - 1.0) > kSumTol) {
    std::ostringstream os;
    os << name << " sum " << sum << " != 1 (set allow_gaps to permit a shortfall)";
    report.violations.push_back(os.str());
  }
}

}  // namespace

ValidationReport validate(const CarpetSpec& spec) {
  ValidationReport report;
  check_ratios(spec.widths, "widths", spec.allow_gaps, report);
  check_ratios(spec.heights, "heights", spec.allow_gaps, report);

  const int d = spec.map_count();
  if (d < 2) report.violations.push_back("cells: need at least 2 selected cells");

  std::set<Cell> seen;
  bool indices_ok = true;
  for (int l = 0; l < d; ++l) {
    const Cell& c = spec.cells[static_cast<std::size_t>(l)];
    if (c.col < 0 || c.col >= static_cast<int>(spec.widths.size()) || c.row < 0 ||
        c.row >= static_cast<int>(spec.heights.size())) {
      report.violations.push_back("cells: index out of range at " + describe_cell(c));
      indices_ok = false;
      continue;
    }
    if (!seen.insert(c).second)
      report.violations.push_back("cells: duplicate cell " + describe_cell(c));
  }

  if (indices_ok && report.violations.empty()) {
    std::set<int> cols, rows;
    for (const Cell& c : spec.cells) {
      cols.insert(c.col);
      rows.insert(c.row);
    }
    if (cols.size() < 2)
      report.violations.push_back(
          "assumption: all cells share one column (carpet lies in a vertical line)");
    if (rows.size() < 2)
      report.violations.push_back(
          "assumption: all cells share one row (carpet lies in a horizontal line)");

    bool some_unequal = false;
    for (int l = 0; l < d; ++l)
      if (std::fabs(spec.cell_width(l) - spec.cell_height(l)) > kAssumptionTol)
        some_unequal = true;
    if (!some_unequal) {
      report.self_similar_degenerate = true;
      report.warnings.push_back(
          "self-similar degenerate: width equals height on every cell; "
          "all dimensions coincide and the carpet is Ahlfors regular");
    }
  }
  return report;
}

IndexSets index_sets(const CarpetSpec& spec) {
  IndexSets out;
  for (int l = 0; l < spec.map_count(); ++l) {
    const Cell& c = spec.cells[static_cast<std::size_t>(l)];
    out.columns[c.col].push_back(l);
    out.rows[c.row].push_back(l);
  }
  return out;
}

std::vector<int> IndexSets::occupied_columns() const {
  std::vector<int> v;
  v.reserve(columns.size());
  for (const auto& [i, _] : columns) v.push_back(i);
  return v;
}

std::vector<int> IndexSets::occupied_rows() const {
  std::vector<int> v;
  v.reserve(rows.size());
  for (const auto& [j, _] : rows) v.push_back(j);
  return v;
}

bool IndexSets::is_product(int map_count) const {
  return static_cast<std::size_t>(map_count) == columns.size() * rows.size();
}

TypeReport classify_type(const CarpetSpec& spec) {
  bool all_wide = true;   // width >= height everywhere
  bool all_tall = true;   // height >= width everywhere
  for (int l = 0; l < spec.map_count(); ++l) {
    const double a = spec.cell_width(l);
    const double b = spec.cell_height(l);
    if (a < b) all_wide = false;
    if (b < a) all_tall = false;
  }
  TypeReport out;
  out.self_similar_degenerate = all_wide && all_tall;
  if (all_wide)
    out.type = CarpetType::Horizontal;
  else if (all_tall)
    out.type = CarpetType::Vertical;
  else
    out.type = CarpetType::Mixed;
  return out;
}

const char* to_string(CarpetType type) {
  switch (type) {
    case CarpetType::Horizontal: return "horizontal";
    case CarpetType::Vertical: return "vertical";
    case CarpetType::Mixed: return "mixed";
  }
  return "?";
}

}  // namespace carpetdim
