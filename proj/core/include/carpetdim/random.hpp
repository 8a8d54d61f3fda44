#pragma once

#include <cstdint>

#include "carpetdim/carpet.hpp"
#include "carpetdim/variational.hpp"

namespace carpetdim {

struct RandomCarpetOptions {
  int max_columns = 3;
  int max_rows = 3;
  std::uint64_t seed = 0;
  int max_cells = 8;
  /// Margins the property suites branch on must either be structural ties
  /// (below tie_floor) or clear this gap; candidates in between resample.
  double margin = 1e-6;
  double tie_floor = 5e-8;
  bool enforce_margins = true;
  MaximizeOptions maximize;  // configuration used for the margin measurements
};

/// Draws a valid random carpet, deterministic in the seed. The draw mixes
/// structural families (generic, forced uniform fibres in either direction,
/// full products, permutation carpets, horizontal/vertical type) so every
/// condition branch occurs with positive frequency, and resamples until all
/// decision margins are either structural ties or exceed the margin floor.
/// Throws std::runtime_error after 1e4 failed attempts.
CarpetSpec random_carpet(const RandomCarpetOptions& opts);

inline CarpetSpec random_carpet(int max_columns, int max_rows, std::uint64_t seed) {
  RandomCarpetOptions opts;
  opts.max_columns = max_columns;
  opts.max_rows = max_rows;
  opts.seed = seed;
  return random_carpet(opts);
}

}  // namespace carpetdim
