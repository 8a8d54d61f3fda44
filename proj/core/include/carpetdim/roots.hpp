#pragma once

#include <map>
#include <span>

#include "carpetdim/carpet.hpp"

namespace carpetdim {

inline constexpr double kDefaultRootTol = 1e-13;

/// Root t >= 0 of sum_i ratios[i]^t = 1 for ratios in (0,1). The sum is
/// strictly decreasing in t, so the root is unique. Throws on an empty list
/// or a ratio outside (0,1).
double partition_exponent(std::span<const double> ratios, double tol = kDefaultRootTol);

/// Box-exponent root. Axis::X solves sum_l a_l^t b_l^(D-t) = 1 with t the
/// x-projection exponent; Axis::Y swaps the roles of widths and heights.
double box_exponent(const CarpetSpec& spec, double t, Axis axis, double tol = kDefaultRootTol);

/// Per-column and per-row fibre exponents: the column exponent solves
/// sum over the column's cells of height^S = 1 (a single-cell column gives
/// exactly 0), and the row exponent is the mirrored solve over widths.
struct FibreExponents {
  std::map<int, double> per_column;  // occupied column -> S
  std::map<int, double> per_row;     // occupied row -> S
};

FibreExponents fibre_exponents(const CarpetSpec& spec, double tol = kDefaultRootTol);

/// Every implicit exponent of a carpet plus the Assouad/lower candidates.
/// E and F carry the type-dependent sentinels -1 and 3, which can never win
/// the max/min against genuine candidates in [0,2]. The tilde fields are the
/// type-independent forms t + max S and t + min S.
struct ExponentProfile {
  double t1 = 0, t2 = 0;  // projection dimensions (x, y)
  double D1 = 0, D2 = 0;  // box-dimension candidates
  std::map<int, double> S1;  // per occupied column
  std::map<int, double> S2;  // per occupied row
  double E1 = 0, E2 = 0;  // Assouad candidates (sentinel -1)
  double F1 = 0, F2 = 0;  // lower candidates (sentinel 3)
  double E1_tilde = 0, E2_tilde = 0;
  double F1_tilde = 0, F2_tilde = 0;
  CarpetType type = CarpetType::Mixed;

  double dim_box() const { return D1 > D2 ? D1 : D2; }
  double dim_assouad() const { return E1 > E2 ? E1 : E2; }
  double dim_lower() const { return F1 < F2 ? F1 : F2; }
  double S1_spread() const;
  double S2_spread() const;
};

ExponentProfile assouad_lower_profile(const CarpetSpec& spec, double tol = kDefaultRootTol);

}  // namespace carpetdim
