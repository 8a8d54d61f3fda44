#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace carpetdim {

/// The two grid directions. X indexes columns (widths, projection to the
/// x-axis, vertical fibres); Y indexes rows (heights, projection to the
/// y-axis, horizontal fibres).
enum class Axis { X = 1, Y = 2 };

struct Cell {
  int col = 0;  // 0-based column index, column 0 is the left strip
  int row = 0;  // 0-based row index, row 0 is the bottom strip

  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A diagonal self-affine carpet on the unit square: the square is cut into
/// column strips of the given widths and row strips of the given heights,
/// and one contraction is kept per selected cell. Cell order fixes the map
/// index l = 0..d-1; every vector over cells uses this order.
struct CarpetSpec {
  std::vector<double> widths;   // a_i in (0,1), left to right
  std::vector<double> heights;  // b_j in (0,1), bottom to top
  std::vector<Cell> cells;      // distinct selected cells, d = cells.size()
  bool allow_gaps = false;      // if true, ratio sums may fall short of 1

  int map_count() const { return static_cast<int>(cells.size()); }
  double cell_width(int l) const { return widths[static_cast<std::size_t>(cells[static_cast<std::size_t>(l)].col)]; }
  double cell_height(int l) const { return heights[static_cast<std::size_t>(cells[static_cast<std::size_t>(l)].row)]; }

  friend bool operator==(const CarpetSpec&, const CarpetSpec&) = default;
};

struct ValidationReport {
  std::vector<std::string> violations;  // each names the invariant it breaks
  std::vector<std::string> warnings;
  bool self_similar_degenerate = false;  // a == b on every cell

  bool ok() const { return violations.empty(); }
};

/// Checks every structural invariant of a candidate spec. Malformed input is
/// reported, never repaired. The self-similar degenerate case (equal width
/// and height on every cell) is a warning: all formulas stay computable.
ValidationReport validate(const CarpetSpec& spec);

/// Occupied columns/rows and the partition of map indices among them.
struct IndexSets {
  std::map<int, std::vector<int>> columns;  // occupied column -> map indices in it
  std::map<int, std::vector<int>> rows;     // occupied row -> map indices in it

  std::vector<int> occupied_columns() const;
  std::vector<int> occupied_rows() const;
  // true iff the selected cells are exactly the product of the occupied lines
  bool is_product(int map_count) const;
};

IndexSets index_sets(const CarpetSpec& spec);

enum class CarpetType { Horizontal, Vertical, Mixed };

struct TypeReport {
  CarpetType type = CarpetType::Mixed;
  bool self_similar_degenerate = false;
};

/// Horizontal: every cell at least as wide as tall. Vertical: every cell at
/// least as tall as wide. Mixed: both strict comparisons occur. Comparisons
/// are exact; when all cells are square the label is Horizontal with the
/// degenerate flag set.
TypeReport classify_type(const CarpetSpec& spec);

const char* to_string(CarpetType type);

// --- carpet file format -----------------------------------------------------
//
// {"widths":[...], "heights":[...], "cells":[[col,row],...], "allow_gaps":bool}
//
// Numbers are decimal literals; cells are 0-based [column,row] pairs; row 0 is
// the bottom strip, column 0 the left strip. "allow_gaps" defaults to false.

/// Parses a spec from JSON text. Throws std::runtime_error with a message
/// naming the offending field.
CarpetSpec carpet_from_json(const std::string& text);

std::string carpet_to_json(const CarpetSpec& spec);

/// Reads and parses a carpet file. Throws std::runtime_error on I/O or parse
/// failure.
CarpetSpec load_carpet_file(const std::string& path);

}  // namespace carpetdim
