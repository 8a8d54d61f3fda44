#include "carpetdim/roots.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <stdexcept>

namespace carpetdim {

namespace {

// Root of a strictly decreasing smooth f with f(0) >= 0, refined by Newton
// once bisection has pinned the bracket. The initial bracket [0,4] covers
// every exponent of interest; it doubles when a fibre solve with ratios near
// 1 pushes the root beyond it.
double solve_decreasing(const std::function<double(double)>& f,
                        const std::function<double(double)>& df, double tol) {
  double lo = 0.0;
  double flo = f(lo);
  if (flo < 0)
    throw std::runtime_error("exponent solve: no root at or above 0 (sum below 1 at t=0)");
  if (flo == 0) return 0.0;

  double hi = 4.0;
  int expand = 0;
  while (f(hi) > 0) {
    lo = hi;
    hi *= 2.0;
    if (++expand > 60) throw std::runtime_error("exponent solve: bracket expansion failed");
  }

  for (int i = 0; i < 200 && hi - lo > 1e-15 * (1.0 + hi); ++i) {
    const double mid = 0.5 * (lo + hi);
    if (f(mid) >= 0)
      lo = mid;
    else
      hi = mid;
  }
  double t = 0.5 * (lo + hi);
  for (int i = 0; i < 3; ++i) {
    const double ft = f(t);
    if (std::fabs(ft) <= tol * 0.01) break;
    const double dft = df(t);
    if (dft == 0) break;
    const double next = t - ft / dft;
    if (next < lo || next > hi) break;
    t = next;
  }
  if (std::fabs(f(t)) > std::max(tol, 1e-13))
    throw std::runtime_error("exponent solve: residual above tolerance");
  return t;
}

double fibre_solve(const std::vector<double>& ratios, double tol) {
  if (ratios.size() == 1) return 0.0;  // single cell: r^0 = 1 exactly
  auto f = [&](double t) {
    double s = 0;
    for (double r : ratios) s += std::pow(r, t);
    return s - 1.0;
  };
  auto df = [&](double t) {
    double s = 0;
    for (double r : ratios) s += std::pow(r, t) * std::log(r);
    return s;
  };
  return solve_decreasing(f, df, tol);
}

}  // namespace

double partition_exponent(std::span<const double> ratios, double tol) {
  if (ratios.empty()) throw std::invalid_argument("partition_exponent: empty ratio list");
  for (double r : ratios)
    if (!(r > 0.0) || !(r < 1.0))
      throw std::invalid_argument("partition_exponent: ratio outside (0,1)");
  auto f = [&](double t) {
    double s = 0;
    for (double r : ratios) s += std::pow(r, t);
    return s - 1.0;
  };
  auto df = [&](double t) {
    double s = 0;
    for (double r : ratios) s += std::pow(r, t) * std::log(r);
    return s;
  };
  return solve_decreasing(f, df, tol);
}

double box_exponent(const CarpetSpec& spec, double t, Axis axis, double tol) {
  const int d = spec.map_count();
  // primary ratio: raised to the fixed exponent t; secondary: carries D - t
  std::vector<double> primary(static_cast<std::size_t>(d)), secondary(static_cast<std::size_t>(d));
  for (int l = 0; l < d; ++l) {
    const double a = spec.cell_width(l);
    const double b = spec.cell_height(l);
    primary[static_cast<std::size_t>(l)] = axis == Axis::X ? a : b;
    secondary[static_cast<std::size_t>(l)] = axis == Axis::X ? b : a;
  }
  auto f = [&](double D) {
    double s = 0;
    for (int l = 0; l < d; ++l)
      s += std::pow(primary[static_cast<std::size_t>(l)], t) *
           std::pow(secondary[static_cast<std::size_t>(l)], D - t);
    return s - 1.0;
  };
  auto df = [&](double D) {
    double s = 0;
    for (int l = 0; l < d; ++l)
      s += std::pow(primary[static_cast<std::size_t>(l)], t) *
           std::pow(secondary[static_cast<std::size_t>(l)], D - t) *
           std::log(secondary[static_cast<std::size_t>(l)]);
    return s;
  };
  // The defining sum evaluated at D = 0 must be >= 1 for a bracketed root;
  // anything else signals an invalid spec.
  if (f(0.0) < 0) throw std::runtime_error("box_exponent: no bracketing root (invalid spec?)");
  return solve_decreasing(f, df, tol);
}

FibreExponents fibre_exponents(const CarpetSpec& spec, double tol) {
  const IndexSets idx = index_sets(spec);
  FibreExponents out;
  for (const auto& [i, members] : idx.columns) {
    std::vector<double> heights;
    heights.reserve(members.size());
    for (int l : members) heights.push_back(spec.cell_height(l));
    out.per_column[i] = fibre_solve(heights, tol);
  }
  for (const auto& [j, members] : idx.rows) {
    std::vector<double> widths;
    widths.reserve(members.size());
    for (int l : members) widths.push_back(spec.cell_width(l));
    out.per_row[j] = fibre_solve(widths, tol);
  }
  return out;
}

namespace {

double map_max(const std::map<int, double>& m) {
  double v = -std::numeric_limits<double>::infinity();
  for (const auto& [_, x] : m) v = std::max(v, x);
  return v;
}

double map_min(const std::map<int, double>& m) {
  double v = std::numeric_limits<double>::infinity();
  for (const auto& [_, x] : m) v = std::min(v, x);
  return v;
}

}  // namespace

double ExponentProfile::S1_spread() const { return map_max(S1) - map_min(S1); }
double ExponentProfile::S2_spread() const { return map_max(S2) - map_min(S2); }

ExponentProfile assouad_lower_profile(const CarpetSpec& spec, double tol) {
  const IndexSets idx = index_sets(spec);

  std::vector<double> col_widths, row_heights;
  for (const auto& [i, _] : idx.columns) col_widths.push_back(spec.widths[static_cast<std::size_t>(i)]);
  for (const auto& [j, _] : idx.rows) row_heights.push_back(spec.heights[static_cast<std::size_t>(j)]);

  ExponentProfile p;
  p.t1 = partition_exponent(col_widths, tol);
  p.t2 = partition_exponent(row_heights, tol);
  p.D1 = box_exponent(spec, p.t1, Axis::X, tol);
  p.D2 = box_exponent(spec, p.t2, Axis::Y, tol);

  const FibreExponents fib = fibre_exponents(spec, tol);
  p.S1 = fib.per_column;
  p.S2 = fib.per_row;

  p.E1_tilde = p.t1 + map_max(p.S1);
  p.E2_tilde = p.t2 + map_max(p.S2);
  p.F1_tilde = p.t1 + map_min(p.S1);
  p.F2_tilde = p.t2 + map_min(p.S2);

  p.type = classify_type(spec).type;
  switch (p.type) {
    case CarpetType::Horizontal:
      p.E1 = p.E1_tilde;
      p.E2 = -1.0;
      p.F1 = p.F1_tilde;
      p.F2 = 3.0;
      break;
    case CarpetType::Vertical:
      p.E1 = -1.0;
      p.E2 = p.E2_tilde;
      p.F1 = 3.0;
      p.F2 = p.F2_tilde;
      break;
    case CarpetType::Mixed:
      p.E1 = p.E1_tilde;
      p.E2 = p.E2_tilde;
      p.F1 = p.F1_tilde;
      p.F2 = p.F2_tilde;
      break;
  }
  return p;
}

}  // namespace carpetdim
