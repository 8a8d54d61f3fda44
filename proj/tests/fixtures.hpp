#pragma once

// Shared carpet fixtures for the unit and acceptance suites.

#include "carpetdim/carpet.hpp"

namespace fixtures {

// Three uneven columns, three equal rows of height 0.2904, two cells per
// column; the strips leave gaps. Uniform vertical fibres, mixed type.
inline carpetdim::CarpetSpec gapped_three_column() {
  carpetdim::CarpetSpec spec;
  spec.widths = {0.0765, 0.2298, 0.499};
  spec.heights = {0.2904, 0.2904, 0.2904};
  spec.cells = {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 2}};
  spec.allow_gaps = true;
  return spec;
}

// Eight cells on a 4x4 grid of sixths and thirds; every row solves the same
// fibre equation (uniform horizontal fibres) while the columns disagree.
inline carpetdim::CarpetSpec sixths_thirds_eight_cell() {
  carpetdim::CarpetSpec spec;
  const double sixth = 1.0 / 6.0;
  const double third = 1.0 / 3.0;
  spec.widths = {sixth, third, third, sixth};
  spec.heights = {sixth, sixth, third, third};
  spec.cells = {{0, 0}, {0, 1}, {1, 0}, {1, 2}, {2, 1}, {2, 3}, {3, 2}, {3, 3}};
  spec.allow_gaps = false;
  return spec;
}

inline carpetdim::CarpetSpec product_2x2() {
  carpetdim::CarpetSpec spec;
  spec.widths = {0.35, 0.65};
  spec.heights = {0.55, 0.45};
  spec.cells = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  return spec;
}

// Two equal columns, three equal rows, two cells in the first column and one
// in the second.
inline carpetdim::CarpetSpec bedford_mcmullen() {
  carpetdim::CarpetSpec spec;
  spec.widths = {0.5, 0.5};
  spec.heights = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  spec.cells = {{0, 0}, {0, 1}, {1, 2}};
  spec.allow_gaps = true;
  return spec;
}

// A Bedford-McMullen style carpet with two cells in each column: uniform
// vertical fibres without a product structure.
inline carpetdim::CarpetSpec bedford_mcmullen_uniform() {
  carpetdim::CarpetSpec spec;
  spec.widths = {0.5, 0.5};
  spec.heights = {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0};
  spec.cells = {{0, 0}, {0, 1}, {1, 1}, {1, 2}};
  spec.allow_gaps = true;
  return spec;
}

// All four cells of the half-ratio grid: the full unit square.
inline carpetdim::CarpetSpec quarter_square() {
  carpetdim::CarpetSpec spec;
  spec.widths = {0.5, 0.5};
  spec.heights = {0.5, 0.5};
  spec.cells = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  return spec;
}

}  // namespace fixtures
