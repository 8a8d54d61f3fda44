#include "carpetdim/random.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "carpetdim/conditions.hpp"
#include "carpetdim/roots.hpp"

namespace carpetdim {

namespace {

std::vector<double> random_ratios(std::mt19937_64& rng, int n) {
  std::uniform_real_distribution<double> u(0.5, 2.0);
  std::vector<double> v(static_cast<std::size_t>(n));
  double sum = 0;
  for (double& x : v) {
    x = u(rng);
    sum += x;
  }
  for (double& x : v) x /= sum;
  return v;
}

int draw_int(std::mt19937_64& rng, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  return d(rng);
}

void transpose(CarpetSpec& spec) {
  std::swap(spec.widths, spec.heights);
  for (Cell& c : spec.cells) std::swap(c.col, c.row);
}

// Distinct random cells covering at least two columns and two rows.
bool draw_cells(std::mt19937_64& rng, int r, int s, int d, std::vector<Cell>& out) {
  std::vector<Cell> all;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < s; ++j) all.push_back(Cell{i, j});
  for (int attempt = 0; attempt < 32; ++attempt) {
    std::shuffle(all.begin(), all.end(), rng);
    out.assign(all.begin(), all.begin() + d);
    std::set<int> cols, rows;
    for (const Cell& c : out) {
      cols.insert(c.col);
      rows.insert(c.row);
    }
    if (cols.size() >= 2 && rows.size() >= 2) {
      std::sort(out.begin(), out.end());
      return true;
    }
  }
  return false;
}

// Fully random ratios and cells.
bool draw_generic(std::mt19937_64& rng, const RandomCarpetOptions& o, CarpetSpec& spec) {
  const int r = draw_int(rng, 2, o.max_columns);
  const int s = draw_int(rng, 2, o.max_rows);
  const int hi = std::max(2, std::min(o.max_cells, r * s));
  const int lo = std::min(std::min(4, r * s), hi);
  const int d = draw_int(rng, lo, hi);
  spec.widths = random_ratios(rng, r);
  spec.heights = random_ratios(rng, s);
  spec.allow_gaps = false;
  return draw_cells(rng, r, s, d, spec.cells);
}

// Equal heights and an equal per-column cell count force uniform vertical
// fibres without forcing a product.
bool draw_uniform_vertical(std::mt19937_64& rng, const RandomCarpetOptions& o, CarpetSpec& spec) {
  const int r = draw_int(rng, 2, o.max_columns);
  const int s = std::max(2, draw_int(rng, 2, o.max_rows));
  const int per_col = draw_int(rng, 1, std::min(s, std::max(1, o.max_cells / r)));
  spec.widths = random_ratios(rng, r);
  spec.heights.assign(static_cast<std::size_t>(s), 1.0 / s);
  spec.allow_gaps = false;
  spec.cells.clear();
  std::vector<int> rows(static_cast<std::size_t>(s));
  std::iota(rows.begin(), rows.end(), 0);
  for (int i = 0; i < r; ++i) {
    std::shuffle(rows.begin(), rows.end(), rng);
    for (int k = 0; k < per_col; ++k) spec.cells.push_back(Cell{i, rows[static_cast<std::size_t>(k)]});
  }
  std::sort(spec.cells.begin(), spec.cells.end());
  std::set<int> used_rows;
  for (const Cell& c : spec.cells) used_rows.insert(c.row);
  return spec.cells.size() >= 2 && used_rows.size() >= 2;
}

// The occupied lines fully crossed.
bool draw_product(std::mt19937_64& rng, const RandomCarpetOptions& o, CarpetSpec& spec) {
  const int r = draw_int(rng, 2, o.max_columns);
  const int s = draw_int(rng, 2, o.max_rows);
  int use_cols = draw_int(rng, 2, r);
  int use_rows = draw_int(rng, 2, s);
  while (use_cols * use_rows > o.max_cells && use_cols * use_rows > 4) {
    if (use_cols > use_rows && use_cols > 2)
      --use_cols;
    else if (use_rows > 2)
      --use_rows;
    else
      break;
  }
  spec.widths = random_ratios(rng, r);
  spec.heights = random_ratios(rng, s);
  spec.allow_gaps = false;
  std::vector<int> cols(static_cast<std::size_t>(r)), rows(static_cast<std::size_t>(s));
  std::iota(cols.begin(), cols.end(), 0);
  std::iota(rows.begin(), rows.end(), 0);
  std::shuffle(cols.begin(), cols.end(), rng);
  std::shuffle(rows.begin(), rows.end(), rng);
  spec.cells.clear();
  for (int i = 0; i < use_cols; ++i)
    for (int j = 0; j < use_rows; ++j)
      spec.cells.push_back(Cell{cols[static_cast<std::size_t>(i)], rows[static_cast<std::size_t>(j)]});
  std::sort(spec.cells.begin(), spec.cells.end());
  return true;
}

// One cell per column and per row with widths == heights: both fibre
// directions are trivially uniform, the projections agree, and the
// lower-type condition holds on a mixed-type carpet.
bool draw_permutation(std::mt19937_64& rng, const RandomCarpetOptions& o, CarpetSpec& spec) {
  const int n = draw_int(rng, 2, std::min(o.max_columns, o.max_rows));
  spec.widths = random_ratios(rng, n);
  spec.heights = spec.widths;
  spec.allow_gaps = false;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::shuffle(perm.begin(), perm.end(), rng);
    bool identity = true;
    for (int i = 0; i < n; ++i)
      if (perm[static_cast<std::size_t>(i)] != i) identity = false;
    if (!identity) break;
  }
  spec.cells.clear();
  for (int i = 0; i < n; ++i) spec.cells.push_back(Cell{i, perm[static_cast<std::size_t>(i)]});
  std::sort(spec.cells.begin(), spec.cells.end());
  for (const Cell& c : spec.cells)
    if (c.col == c.row) return false;  // rejects square cells and the identity
  return true;
}

// Every cell strictly wider than tall (heights shrunk below the narrowest
// column), with optionally forced uniform vertical fibres.
bool draw_horizontal_type(std::mt19937_64& rng, const RandomCarpetOptions& o, CarpetSpec& spec,
                          bool force_uniform) {
  const int r = draw_int(rng, 2, o.max_columns);
  const int s = draw_int(rng, 2, o.max_rows);
  spec.widths = random_ratios(rng, r);
  const double min_width = *std::min_element(spec.widths.begin(), spec.widths.end());

  if (force_uniform) {
    const double h = std::min(0.8 * min_width, 1.0 / s * 0.9);
    spec.heights.assign(static_cast<std::size_t>(s), h);
    spec.allow_gaps = true;
    const int per_col = draw_int(rng, 1, std::min(s, std::max(1, o.max_cells / r)));
    spec.cells.clear();
    std::vector<int> rows(static_cast<std::size_t>(s));
    std::iota(rows.begin(), rows.end(), 0);
    for (int i = 0; i < r; ++i) {
      std::shuffle(rows.begin(), rows.end(), rng);
      for (int k = 0; k < per_col; ++k)
        spec.cells.push_back(Cell{i, rows[static_cast<std::size_t>(k)]});
    }
  } else {
    spec.heights = random_ratios(rng, s);
    const double max_height = *std::max_element(spec.heights.begin(), spec.heights.end());
    const double scale = 0.8 * min_width / max_height;
    if (scale < 1.0) {
      for (double& h : spec.heights) h *= scale;
      spec.allow_gaps = true;
    }
    const int d = draw_int(rng, std::min(4, r * s), std::min(o.max_cells, r * s));
    if (!draw_cells(rng, r, s, d, spec.cells)) return false;
  }
  std::sort(spec.cells.begin(), spec.cells.end());
  std::set<int> cols, rows_used;
  for (const Cell& c : spec.cells) {
    cols.insert(c.col);
    rows_used.insert(c.row);
  }
  return cols.size() >= 2 && rows_used.size() >= 2;
}

// A margin passes when it is either a structural tie or clearly decided.
bool margin_ok(double value, const RandomCarpetOptions& o) {
  const double m = std::fabs(value);
  return m <= o.tie_floor || m > o.margin;
}

bool margins_ok(const CarpetSpec& spec, const RandomCarpetOptions& o) {
  const ExponentProfile profile = assouad_lower_profile(spec);
  const FibreReport fibres = fibre_uniformity(spec, o.tie_floor);
  const HausdorffResult hd = hausdorff_dimension(spec, o.maximize, o.tie_floor);
  const DimensionSummary dims = dimensions(spec, profile, hd);

  if (!margin_ok(hd.branch1.value - hd.branch2.value, o)) return false;
  if (!margin_ok(profile.D1 - profile.D2, o)) return false;
  if (!margin_ok(profile.E1 - profile.E2, o)) return false;
  if (!margin_ok(profile.F1 - profile.F2, o)) return false;
  if (!margin_ok(fibres.S1_spread, o)) return false;
  if (!margin_ok(fibres.S2_spread, o)) return false;
  if (!margin_ok(dims.hausdorff - dims.box, o)) return false;
  if (!margin_ok(dims.box - dims.assouad, o)) return false;
  if (!margin_ok(dims.lower - dims.hausdorff, o)) return false;
  for (int l = 0; l < spec.map_count(); ++l)
    if (!margin_ok(spec.cell_width(l) - spec.cell_height(l), o)) return false;
  return true;
}

}  // namespace

CarpetSpec random_carpet(const RandomCarpetOptions& opts) {
  if (opts.max_columns < 2 || opts.max_rows < 2)
    throw std::invalid_argument("random_carpet: need room for at least 2 columns and 2 rows");
  std::mt19937_64 rng(opts.seed ^ 0xc2b2ae3d27d4eb4fULL);

  for (int attempt = 0; attempt < 10000; ++attempt) {
    CarpetSpec spec;
    bool drawn = false;
    const int mode = draw_int(rng, 0, 99);
    if (mode < 40) {
      drawn = draw_generic(rng, opts, spec);
    } else if (mode < 52) {
      drawn = draw_uniform_vertical(rng, opts, spec);
    } else if (mode < 64) {
      drawn = draw_uniform_vertical(rng, opts, spec);
      if (drawn) transpose(spec);
    } else if (mode < 72) {
      drawn = draw_product(rng, opts, spec);
    } else if (mode < 82) {
      drawn = draw_permutation(rng, opts, spec);
    } else {
      drawn = draw_horizontal_type(rng, opts, spec, mode >= 91);
      if (drawn && draw_int(rng, 0, 1) == 1) transpose(spec);
    }
    if (!drawn) continue;
    if (!validate(spec).ok()) continue;
    if (opts.enforce_margins && !margins_ok(spec, opts)) continue;
    return spec;
  }
  throw std::runtime_error("random_carpet: no viable spec after 10000 attempts (generator bug)");
}

}  // namespace carpetdim
