#include "carpetdim/symbolic.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "carpetdim/conditions.hpp"

namespace carpetdim {

namespace {

struct StripOffsets {
  std::vector<double> x;  // left edge of each column strip
  std::vector<double> y;  // bottom edge of each row strip

  explicit StripOffsets(const CarpetSpec& spec) {
    x.resize(spec.widths.size());
    y.resize(spec.heights.size());
    double acc = 0;
    for (std::size_t i = 0; i < spec.widths.size(); ++i) {
      x[i] = acc;
      acc += spec.widths[i];
    }
    acc = 0;
    for (std::size_t j = 0; j < spec.heights.size(); ++j) {
      y[j] = acc;
      acc += spec.heights[j];
    }
  }
};

struct Affine {
  double ox = 0, oy = 0, sx = 1, sy = 1;

  void compose(const CarpetSpec& spec, const StripOffsets& off, int letter) {
    const Cell& c = spec.cells[static_cast<std::size_t>(letter)];
    ox += sx * off.x[static_cast<std::size_t>(c.col)];
    oy += sy * off.y[static_cast<std::size_t>(c.row)];
    sx *= spec.widths[static_cast<std::size_t>(c.col)];
    sy *= spec.heights[static_cast<std::size_t>(c.row)];
  }

  Rect rect() const { return Rect{ox, oy, sx, sy}; }
};

constexpr double kInsideEps = 1e-12;
constexpr double kMinStoppingDelta = 6.103515625e-05;  // 2^-14
constexpr std::uint64_t kMaxStoppingWords = 10'000'000;

}  // namespace

WordGeometry word_geometry(const CarpetSpec& spec, const Word& word) {
  const StripOffsets off(spec);
  Affine af;
  for (int letter : word) {
    if (letter < 0 || letter >= spec.map_count())
      throw std::invalid_argument("word_geometry: letter outside the cell alphabet");
    af.compose(spec, off, letter);
  }
  WordGeometry g;
  g.width = af.sx;
  g.height = af.sy;
  g.rect = af.rect();
  return g;
}

ApproximateSquare approximate_square(const CarpetSpec& spec, const Word& word, double delta) {
  if (!(delta > 0.0) || !(delta < 1.0))
    throw std::invalid_argument("approximate_square: delta must be in (0,1)");

  const StripOffsets off(spec);
  Affine cur;
  // deepest prefixes whose width/height product still reaches delta; the
  // empty prefix always does, so both cut depths start at 0
  int k1 = 0, k2 = 0;
  bool k1_final = false, k2_final = false;
  double x_cut = 0, w_cut = 1, y_cut = 0, h_cut = 1;
  for (std::size_t m = 0; m < word.size() && !(k1_final && k2_final); ++m) {
    const int letter = word[m];
    if (letter < 0 || letter >= spec.map_count())
      throw std::invalid_argument("approximate_square: letter outside the cell alphabet");
    cur.compose(spec, off, letter);
    if (!k1_final) {
      if (cur.sx >= delta) {
        k1 = static_cast<int>(m) + 1;
        x_cut = cur.ox;
        w_cut = cur.sx;
      } else {
        k1_final = true;
      }
    }
    if (!k2_final) {
      if (cur.sy >= delta) {
        k2 = static_cast<int>(m) + 1;
        y_cut = cur.oy;
        h_cut = cur.sy;
      } else {
        k2_final = true;
      }
    }
  }
  if (!k1_final || !k2_final)
    throw std::invalid_argument(
        "approximate_square: word too short for both sides to drop below delta");

  ApproximateSquare sq;
  sq.k1 = k1;
  sq.k2 = k2;
  sq.type = k1 >= k2 ? 1 : 2;
  sq.delta = delta;
  sq.base.assign(word.begin(), word.begin() + sq.k_max());
  sq.rect = Rect{x_cut, y_cut, w_cut, h_cut};
  return sq;
}

double square_mass(const CarpetSpec& spec, const SimplexPoint& q, const ApproximateSquare& sq) {
  if (q.size() != spec.map_count())
    throw std::invalid_argument("square_mass: simplex point has wrong dimension");
  if (!q.interior())
    throw std::invalid_argument("square_mass: the product formula needs an interior q");

  const EntropyStats st = entropy_stats(spec, q);
  double mass = 1;
  for (int m = 0; m < sq.k_min(); ++m)
    mass *= q.q[static_cast<std::size_t>(sq.base[static_cast<std::size_t>(m)])];
  for (int m = sq.k_min(); m < sq.k_max(); ++m) {
    const Cell& c = spec.cells[static_cast<std::size_t>(sq.base[static_cast<std::size_t>(m)])];
    mass *= sq.type == 1 ? st.R.at(c.col) : st.S.at(c.row);
  }
  return mass;
}

double brute_mass_oracle(const CarpetSpec& spec, const SimplexPoint& q,
                         const ApproximateSquare& sq) {
  if (q.size() != spec.map_count())
    throw std::invalid_argument("brute_mass_oracle: simplex point has wrong dimension");
  const int kmax = sq.k_max();
  if (kmax > 12) throw std::runtime_error("brute_mass_oracle: k_max exceeds the depth guard (12)");
  if (std::pow(static_cast<double>(spec.map_count()), kmax) > 1e8)
    throw std::runtime_error("brute_mass_oracle: enumeration would exceed 1e8 words");

  const StripOffsets off(spec);
  const Rect target = sq.rect;
  double total = 0;

  // enumerate every depth-kmax cylinder overlapping the square; sum the
  // Bernoulli masses of those whose rectangle lies inside it
  auto dfs = [&](auto&& self, int depth, double mass, const Affine& af) -> void {
    const Rect r = af.rect();
    if (r.x >= target.x2() || r.x2() <= target.x || r.y >= target.y2() || r.y2() <= target.y)
      return;
    if (depth == kmax) {
      if (r.x >= target.x - kInsideEps && r.x2() <= target.x2() + kInsideEps &&
          r.y >= target.y - kInsideEps && r.y2() <= target.y2() + kInsideEps)
        total += mass;
      return;
    }
    for (int l = 0; l < spec.map_count(); ++l) {
      Affine next = af;
      next.compose(spec, off, l);
      self(self, depth + 1, mass * q.q[static_cast<std::size_t>(l)], next);
    }
  };
  dfs(dfs, 0, 1.0, Affine{});
  return total;
}

void for_each_stopping_rect(const CarpetSpec& spec, double delta,
                            const std::function<void(const Word&, const WordGeometry&)>& fn) {
  if (!(delta >= kMinStoppingDelta) || !(delta <= 1.0))
    throw std::invalid_argument("stopping set: delta must lie in [2^-14, 1]");
  const StripOffsets off(spec);
  std::uint64_t emitted = 0;
  Word word;
  auto dfs = [&](auto&& self, const Affine& af) -> void {
    if (std::max(af.sx, af.sy) <= delta) {
      if (++emitted > kMaxStoppingWords)
        throw std::runtime_error("stopping set: word count exceeds 1e7");
      WordGeometry g;
      g.width = af.sx;
      g.height = af.sy;
      g.rect = af.rect();
      fn(word, g);
      return;
    }
    for (int l = 0; l < spec.map_count(); ++l) {
      Affine next = af;
      next.compose(spec, off, l);
      word.push_back(l);
      self(self, next);
      word.pop_back();
    }
  };
  dfs(dfs, Affine{});
}

std::vector<Word> stopping_set(const CarpetSpec& spec, double delta) {
  std::vector<Word> out;
  for_each_stopping_rect(spec, delta,
                         [&](const Word& w, const WordGeometry&) { out.push_back(w); });
  return out;
}

namespace {

struct SlopeFit {
  double slope = 0;
  double stderr_slope = 0;
};

SlopeFit fit_slope(const std::vector<double>& xs, const std::vector<double>& ys) {
  const std::size_t m = xs.size();
  double xbar = 0, ybar = 0;
  for (std::size_t i = 0; i < m; ++i) {
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= static_cast<double>(m);
  ybar /= static_cast<double>(m);
  double sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < m; ++i) {
    sxx += (xs[i] - xbar) * (xs[i] - xbar);
    sxy += (xs[i] - xbar) * (ys[i] - ybar);
  }
  SlopeFit fit;
  fit.slope = sxy / sxx;
  if (m > 2) {
    const double icept = ybar - fit.slope * xbar;
    double rss = 0;
    for (std::size_t i = 0; i < m; ++i) {
      const double r = ys[i] - (icept + fit.slope * xs[i]);
      rss += r * r;
    }
    fit.stderr_slope = std::sqrt(rss / static_cast<double>(m - 2) / sxx);
  }
  return fit;
}

}  // namespace

BoxCountFit box_count_estimate(const CarpetSpec& spec, int min_exp, int max_exp) {
  if (min_exp < 0 || max_exp > 14 || min_exp > max_exp)
    throw std::invalid_argument("box_count_estimate: exponent range must sit inside [0, 14]");

  BoxCountFit out;
  for (int k = min_exp; k <= max_exp; ++k) {
    const double delta = std::ldexp(1.0, -k);
    const int grid = 1 << k;
    std::vector<std::uint8_t> hit(static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid), 0);
    for_each_stopping_rect(spec, delta, [&](const Word&, const WordGeometry& g) {
      // closed rectangles: a boundary sitting exactly on a mesh line touches
      // the next cell too
      auto clamp_idx = [grid](double v) {
        int i = static_cast<int>(std::floor(v));
        return std::clamp(i, 0, grid - 1);
      };
      const int ix0 = clamp_idx(g.rect.x / delta);
      const int ix1 = clamp_idx(g.rect.x2() / delta);
      const int iy0 = clamp_idx(g.rect.y / delta);
      const int iy1 = clamp_idx(g.rect.y2() / delta);
      for (int ix = ix0; ix <= ix1; ++ix)
        for (int iy = iy0; iy <= iy1; ++iy)
          hit[static_cast<std::size_t>(iy) * static_cast<std::size_t>(grid) +
              static_cast<std::size_t>(ix)] = 1;
    });
    std::uint64_t n = 0;
    for (std::uint8_t h : hit) n += h;
    out.deltas.push_back(delta);
    out.counts.push_back(n);
  }

  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < out.deltas.size(); ++i) {
    xs.push_back(std::log(1.0 / out.deltas[i]));
    ys.push_back(std::log(static_cast<double>(out.counts[i])));
  }
  if (xs.size() >= 2) {
    const SlopeFit fit = fit_slope(xs, ys);
    out.slope = fit.slope;
    out.slope_stderr = fit.stderr_slope;
  }
  return out;
}

AhlforsProbe ahlfors_probe(const CarpetSpec& spec, int samples, int min_exp, int max_exp,
                           std::uint64_t seed) {
  if (min_exp < 1 || max_exp > 14 || min_exp > max_exp)
    throw std::invalid_argument("ahlfors_probe: exponent range must sit inside [1, 14]");
  if (samples < 1) throw std::invalid_argument("ahlfors_probe: need at least one sample");

  const ExponentProfile profile = assouad_lower_profile(spec);
  const HausdorffResult hd = hausdorff_dimension(spec);
  const double dim = dimensions(spec, profile, hd).hausdorff;
  const CarpetType type = profile.type;

  const int d = spec.map_count();
  SimplexPoint q1, q2;
  q1.q.resize(static_cast<std::size_t>(d));
  q2.q.resize(static_cast<std::size_t>(d));
  for (int l = 0; l < d; ++l) {
    const double a = spec.cell_width(l);
    const double b = spec.cell_height(l);
    q1.q[static_cast<std::size_t>(l)] = std::pow(a, profile.t1) * std::pow(b, profile.D1 - profile.t1);
    q2.q[static_cast<std::size_t>(l)] = std::pow(b, profile.t2) * std::pow(a, profile.D2 - profile.t2);
  }

  const double delta_min = std::ldexp(1.0, -max_exp);
  double rho_max = 0;
  for (int l = 0; l < d; ++l)
    rho_max = std::max({rho_max, spec.cell_width(l), spec.cell_height(l)});
  const int word_len = static_cast<int>(std::ceil(std::log(delta_min) / std::log(rho_max))) + 2;

  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> pick(0, d - 1);

  AhlforsProbe out;
  out.dimension = dim;
  out.min_log_ratio = std::numeric_limits<double>::infinity();
  out.max_log_ratio = -std::numeric_limits<double>::infinity();

  const int levels = max_exp - min_exp + 1;
  std::vector<double> level_sum(static_cast<std::size_t>(levels), 0.0);

  for (int s = 0; s < samples; ++s) {
    Word word(static_cast<std::size_t>(word_len));
    for (int& letter : word) letter = pick(rng);
    for (int e = min_exp; e <= max_exp; ++e) {
      const double delta = std::ldexp(1.0, -e);
      const ApproximateSquare sq = approximate_square(spec, word, delta);
      double mass;
      switch (type) {
        case CarpetType::Horizontal: mass = square_mass(spec, q1, sq); break;
        case CarpetType::Vertical: mass = square_mass(spec, q2, sq); break;
        case CarpetType::Mixed:
        default:
          mass = 0.5 * (square_mass(spec, q1, sq) + square_mass(spec, q2, sq));
          break;
      }
      const double lr = std::log(mass) - dim * std::log(delta);
      out.min_log_ratio = std::min(out.min_log_ratio, lr);
      out.max_log_ratio = std::max(out.max_log_ratio, lr);
      level_sum[static_cast<std::size_t>(e - min_exp)] += lr;
      ++out.samples;
    }
  }

  std::vector<double> xs, ys;
  for (int e = min_exp; e <= max_exp; ++e) {
    xs.push_back(-static_cast<double>(e) * std::log(2.0));  // log delta
    ys.push_back(level_sum[static_cast<std::size_t>(e - min_exp)] / samples);
  }
  out.slope = xs.size() >= 2 ? fit_slope(xs, ys).slope : 0.0;
  out.ratio_spread = std::exp(out.max_log_ratio - out.min_log_ratio);
  return out;
}

}  // namespace carpetdim
