#include "carpetdim/conditions.hpp"

#include <algorithm>
#include <cmath>

namespace carpetdim {

FibreReport fibre_uniformity(const CarpetSpec& spec, double tol) {
  const FibreExponents fib = fibre_exponents(spec);
  FibreReport out;
  out.tolerance = tol;
  for (const auto& [_, s] : fib.per_column) out.S1.push_back(s);
  for (const auto& [_, s] : fib.per_row) out.S2.push_back(s);
  const auto [min1, max1] = std::minmax_element(out.S1.begin(), out.S1.end());
  const auto [min2, max2] = std::minmax_element(out.S2.begin(), out.S2.end());
  out.S1_spread = *max1 - *min1;
  out.S2_spread = *max2 - *min2;
  out.vertical_uniform = out.S1_spread <= tol;
  out.horizontal_uniform = out.S2_spread <= tol;
  if (out.vertical_uniform) out.vertical_exponent = out.S1.front();
  if (out.horizontal_uniform) out.horizontal_exponent = out.S2.front();
  return out;
}

namespace {

// Shared branch shape for the G/D/E comparisons. tie_both: a tie demands both
// fibre directions (Hausdorff type); otherwise either direction suffices.
bool directional_flag(double margin, double tol, bool vertical, bool horizontal, bool tie_both,
                      std::string& branch) {
  if (margin > tol) {
    branch = "first-branch wins: needs uniform vertical fibres";
    return vertical;
  }
  if (margin < -tol) {
    branch = "second-branch wins: needs uniform horizontal fibres";
    return horizontal;
  }
  if (tie_both) {
    branch = "tie: needs both fibre directions uniform";
    return vertical && horizontal;
  }
  branch = "tie: either fibre direction suffices";
  return vertical || horizontal;
}

}  // namespace

ConditionReport condition_flags(const CarpetSpec& spec, const ExponentProfile& profile,
                                const HausdorffResult& hausdorff, const FibreReport& fibres,
                                double tol) {
  ConditionReport out;
  out.tolerance = tol;
  out.fibres = fibres;
  out.margin_G = hausdorff.branch1.value - hausdorff.branch2.value;
  out.margin_D = profile.D1 - profile.D2;
  out.margin_E = profile.E1 - profile.E2;
  out.margin_F = profile.F1 - profile.F2;
  out.product = index_sets(spec).is_product(spec.map_count());

  if (out.product) {
    // the occupied lines are fully crossed: both fibre directions are
    // uniform and every condition holds
    out.ufH = out.ufB = out.ufA = out.ufL = true;
    out.branch_H = out.branch_B = out.branch_A = out.branch_L = "product carpet";
    return out;
  }

  const bool vert = fibres.vertical_uniform;
  const bool horiz = fibres.horizontal_uniform;
  out.ufH = directional_flag(out.margin_G, tol, vert, horiz, /*tie_both=*/true, out.branch_H);
  out.ufB = directional_flag(out.margin_D, tol, vert, horiz, /*tie_both=*/false, out.branch_B);
  out.ufA = directional_flag(out.margin_E, tol, vert, horiz, /*tie_both=*/false, out.branch_A);

  switch (profile.type) {
    case CarpetType::Horizontal:
      out.ufL = vert;
      out.branch_L = "horizontal type: needs uniform vertical fibres";
      break;
    case CarpetType::Vertical:
      out.ufL = horiz;
      out.branch_L = "vertical type: needs uniform horizontal fibres";
      break;
    case CarpetType::Mixed:
      out.ufL = vert && horiz && std::fabs(out.margin_F) <= tol;
      out.branch_L = "mixed type: needs both directions uniform and F1 = F2";
      break;
  }
  return out;
}

ConditionReport condition_flags(const CarpetSpec& spec, double tol, const MaximizeOptions& opts) {
  const ExponentProfile profile = assouad_lower_profile(spec);
  const HausdorffResult hd = hausdorff_dimension(spec, opts, tol);
  const FibreReport fibres = fibre_uniformity(spec, tol);
  return condition_flags(spec, profile, hd, fibres, tol);
}

const char* to_string(MeasureClass m) {
  return m == MeasureClass::PositiveFinite ? "positive_finite" : "infinite";
}

DimensionSummary dimensions(const CarpetSpec& spec, const ExponentProfile& profile,
                            const HausdorffResult& hausdorff) {
  DimensionSummary out;
  if (index_sets(spec).is_product(spec.map_count())) {
    out.hausdorff = profile.t1 + profile.t2;
    out.box = out.hausdorff;
    out.hausdorff_attained_by = 3;
  } else {
    out.hausdorff = hausdorff.value;
    out.box = profile.dim_box();
    out.hausdorff_attained_by = hausdorff.attained_by;
  }
  out.assouad = profile.dim_assouad();
  out.lower = profile.dim_lower();
  return out;
}

namespace {

char case_letter(bool eq_LH, bool eq_HB, bool eq_BA) {
  // the eight chain patterns in order: (=,=,=) -> a ... (<,<,<) -> h
  const int idx = (eq_LH ? 0 : 4) + (eq_HB ? 0 : 2) + (eq_BA ? 0 : 1);
  return static_cast<char>('a' + idx);
}

}  // namespace

Classification classify(const CarpetSpec& spec, const ExponentProfile& profile,
                        const HausdorffResult& hausdorff, const ConditionReport& conditions,
                        double tol) {
  Classification out;
  out.measure = conditions.ufH ? MeasureClass::PositiveFinite : MeasureClass::Infinite;
  out.equal_HB = conditions.ufB;
  out.equal_BA = conditions.ufA;
  out.equal_HA = conditions.ufA;
  out.equal_LH = conditions.ufL;
  out.equal_LA = conditions.ufL;
  out.ahlfors_regular = conditions.ufL;

  const DimensionSummary dims = dimensions(spec, profile, hausdorff);
  const bool eq_LH = std::fabs(dims.lower - dims.hausdorff) <= tol;
  const bool eq_HB = std::fabs(dims.hausdorff - dims.box) <= tol;
  const bool eq_BA = std::fabs(dims.box - dims.assouad) <= tol;
  out.ordering_case = case_letter(eq_LH, eq_HB, eq_BA);

  const char flag_case = conditions.ufL   ? 'a'
                         : conditions.ufA ? 'e'
                         : conditions.ufB ? 'f'
                                          : 'h';
  if (flag_case != out.ordering_case) {
    out.diagnostic = std::string("numeric ordering case '") + out.ordering_case +
                     "' disagrees with condition flags (expected '" + flag_case +
                     "'); margins sit at the tolerance boundary";
  }
  return out;
}

Classification classify(const CarpetSpec& spec, double tol, const MaximizeOptions& opts) {
  const ExponentProfile profile = assouad_lower_profile(spec);
  const HausdorffResult hd = hausdorff_dimension(spec, opts, tol);
  const FibreReport fibres = fibre_uniformity(spec, tol);
  const ConditionReport cond = condition_flags(spec, profile, hd, fibres, tol);
  return classify(spec, profile, hd, cond, tol);
}

}  // namespace carpetdim
