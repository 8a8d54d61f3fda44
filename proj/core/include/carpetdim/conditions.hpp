#pragma once

#include <optional>
#include <string>
#include <vector>

#include "carpetdim/carpet.hpp"
#include "carpetdim/roots.hpp"
#include "carpetdim/variational.hpp"

namespace carpetdim {

struct FibreReport {
  std::vector<double> S1;  // per occupied column, ascending column order
  std::vector<double> S2;  // per occupied row, ascending row order
  double S1_spread = 0;    // max - min
  double S2_spread = 0;
  bool vertical_uniform = false;    // all column exponents coincide
  bool horizontal_uniform = false;  // all row exponents coincide
  double tolerance = 0;
  std::optional<double> vertical_exponent;    // the shared exponent when uniform
  std::optional<double> horizontal_exponent;
};

FibreReport fibre_uniformity(const CarpetSpec& spec, double tol = 1e-9);

/// The four uniform-fibre conditions, decided from the computable margins.
/// The Hausdorff-type condition is decided through its G1/G2 reformulation:
/// a G1 win requires uniform vertical fibres, a G2 win uniform horizontal
/// fibres, and a tie requires both. The box/Assouad conditions follow the
/// same shape on D and E but a tie accepts either fibre direction. The
/// lower-type condition depends on the carpet type; the mixed case needs
/// both directions uniform and F1 = F2. A full product of the occupied
/// lines short-circuits every condition to true.
struct ConditionReport {
  bool ufH = false;
  bool ufB = false;
  bool ufA = false;
  bool ufL = false;
  double margin_G = 0;  // G1 - G2
  double margin_D = 0;  // D1 - D2
  double margin_E = 0;  // E1 - E2
  double margin_F = 0;  // F1 - F2
  std::string branch_H, branch_B, branch_A, branch_L;  // which leg decided each flag
  bool product = false;
  double tolerance = 0;
  FibreReport fibres;
};

ConditionReport condition_flags(const CarpetSpec& spec, double tol = 1e-9,
                                const MaximizeOptions& opts = {});

/// Variant that reuses already-computed pieces.
ConditionReport condition_flags(const CarpetSpec& spec, const ExponentProfile& profile,
                                const HausdorffResult& hausdorff, const FibreReport& fibres,
                                double tol);

enum class MeasureClass { PositiveFinite, Infinite };

const char* to_string(MeasureClass m);

struct DimensionSummary {
  double hausdorff = 0;
  double box = 0;
  double assouad = 0;
  double lower = 0;
  int hausdorff_attained_by = 1;  // 1, 2, or 3 for a tie
};

/// Assembles the four dimensions. A full product of the occupied lines pins
/// the Hausdorff and box dimensions to t1 + t2 exactly, bypassing maximizer
/// tie noise.
DimensionSummary dimensions(const CarpetSpec& spec, const ExponentProfile& profile,
                            const HausdorffResult& hausdorff);

struct Classification {
  MeasureClass measure = MeasureClass::Infinite;
  bool equal_HB = false;  // Hausdorff == box
  bool equal_BA = false;  // box == Assouad
  bool equal_HA = false;  // Hausdorff == Assouad
  bool equal_LH = false;  // lower == Hausdorff
  bool equal_LA = false;  // lower == Assouad
  bool ahlfors_regular = false;
  char ordering_case = 'h';  // 'a'..'h' pattern of the dimension chain
  std::string diagnostic;    // nonempty when numeric and flag pictures disagree
};

/// Full classification: measure dichotomy, coincidence flags, Ahlfors
/// regularity, and the dimension-ordering case. The ordering case comes from
/// the numeric dimension comparisons at the given tolerance and is
/// cross-checked against the condition flags; a mismatch is reported in the
/// diagnostic, never silently resolved.
Classification classify(const CarpetSpec& spec, double tol = 1e-9,
                        const MaximizeOptions& opts = {});

Classification classify(const CarpetSpec& spec, const ExponentProfile& profile,
                        const HausdorffResult& hausdorff, const ConditionReport& conditions,
                        double tol);

}  // namespace carpetdim
