#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "carpetdim/carpet.hpp"
#include "carpetdim/variational.hpp"

namespace carpetdim {

/// A finite word over the cell alphabet {0..d-1}.
using Word = std::vector<int>;

struct Rect {
  double x = 0, y = 0, w = 1, h = 1;

  double x2() const { return x + w; }
  double y2() const { return y + h; }
};

/// Width and height products of a word prefix and its cylinder rectangle.
/// Strip origins are the partial sums of the ratio lists, so with gaps the
/// slack sits at the right/top; dimensions are unaffected by strip placement.
struct WordGeometry {
  double width = 1;   // product of cell widths along the word
  double height = 1;  // product of cell heights
  Rect rect;

  double longer_side() const { return width > height ? width : height; }
};

WordGeometry word_geometry(const CarpetSpec& spec, const Word& word);

/// The near-square region built from a cylinder by cutting the two sides at
/// independent depths k1 (width) and k2 (height): the deeper cut is taken on
/// the longer side so both sides land in [delta, delta/rho_min).
struct ApproximateSquare {
  Word base;  // the first max(k1,k2) letters of the defining word
  int k1 = 0;
  int k2 = 0;
  int type = 1;  // 1 when k1 >= k2, else 2
  Rect rect;
  double delta = 0;

  int k_min() const { return k1 < k2 ? k1 : k2; }
  int k_max() const { return k1 > k2 ? k1 : k2; }
};

/// Builds the approximate square of radius delta around the word's cylinder.
/// Requires delta in (0,1) and a word long enough that both side products
/// have dropped below delta; throws std::invalid_argument otherwise.
ApproximateSquare approximate_square(const CarpetSpec& spec, const Word& word, double delta);

/// Self-affine measure of an approximate square under an interior q: the
/// cylinder mass down to the shallow cut times the column (1-type) or row
/// (2-type) masses for the remaining letters.
double square_mass(const CarpetSpec& spec, const SimplexPoint& q, const ApproximateSquare& sq);

/// Independent check of square_mass: enumerates every word of length k_max
/// whose rectangle lies inside the square and sums their Bernoulli masses.
/// Guarded to k_max <= 12 and d^k_max <= 1e8.
double brute_mass_oracle(const CarpetSpec& spec, const SimplexPoint& q,
                         const ApproximateSquare& sq);

/// The antichain of minimal words whose longer side is <= delta; their
/// rectangles cover the attractor. delta = 1 yields the empty word alone.
/// Guards: delta >= 2^-14 and at most 1e7 words.
std::vector<Word> stopping_set(const CarpetSpec& spec, double delta);

/// Streaming variant used by the counting paths; fn receives each stopping
/// word's geometry.
void for_each_stopping_rect(const CarpetSpec& spec, double delta,
                            const std::function<void(const Word&, const WordGeometry&)>& fn);

struct BoxCountFit {
  std::vector<double> deltas;
  std::vector<std::uint64_t> counts;  // mesh cells touching the stopping cover
  double slope = 0;                   // least-squares slope of log N vs log(1/delta)
  double slope_stderr = 0;
};

/// Counts 2^-k mesh cells meeting the stopping-rectangle cover for
/// k = min_exp..max_exp and fits the box dimension. Exponents limited to
/// [0, 14].
BoxCountFit box_count_estimate(const CarpetSpec& spec, int min_exp, int max_exp);

struct AhlforsProbe {
  double dimension = 0;       // exponent the ratios are measured against
  double slope = 0;           // drift of mean log-ratio against log delta
  double min_log_ratio = 0;   // over all sampled squares
  double max_log_ratio = 0;
  double ratio_spread = 0;    // exp(max_log_ratio - min_log_ratio)
  std::uint64_t samples = 0;
};

/// Diagnostic two-sided regularity probe: samples random words, builds
/// approximate squares across delta = 2^-min_exp .. 2^-max_exp, and measures
/// mass(Q)/delta^dim for the natural measure of the carpet's type (the
/// x-branch maximizer, the y-branch maximizer, or their average when mixed).
/// Bounded ratios and near-zero slope are expected exactly when the
/// lower-type uniform fibre condition holds.
AhlforsProbe ahlfors_probe(const CarpetSpec& spec, int samples, int min_exp, int max_exp,
                           std::uint64_t seed);

}  // namespace carpetdim
