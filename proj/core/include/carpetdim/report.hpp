#pragma once

#include <string>

#include "carpetdim/carpet.hpp"
#include "carpetdim/conditions.hpp"
#include "carpetdim/roots.hpp"
#include "carpetdim/variational.hpp"

namespace carpetdim {

struct AnalyzeOptions {
  double tol_eq = 1e-9;     // tie tolerance for every equality branch
  double tol_root = 1e-13;  // residual tolerance of the exponent solvers
  MaximizeOptions maximize;
};

/// Everything the analysis produces for one carpet, plus the configuration
/// that produced it.
struct AnalysisReport {
  CarpetSpec spec;
  ValidationReport validation;
  TypeReport type;
  ExponentProfile profile;
  HausdorffResult hausdorff;
  DimensionSummary dims;
  FibreReport fibres;
  ConditionReport conditions;
  Classification classification;
  AnalyzeOptions options;
  bool dimension_chain_ok = false;  // lower <= Hausdorff <= box <= Assouad
  bool residuals_ok = false;        // all defining sums returned to 1
  double residual_max = 0;
  struct Timings {
    double roots_ms = 0;
    double maximize_ms = 0;
    double conditions_ms = 0;
    double total_ms = 0;
  } timings;
};

/// Runs the full pipeline. The spec must validate; throws
/// std::invalid_argument otherwise.
AnalysisReport analyze(const CarpetSpec& spec, const AnalyzeOptions& opts = {});

/// Serializes the report as a JSON document with stable key order and all
/// floats rounded to 12 significant digits, so identical inputs and options
/// give byte-identical output (the timings block is the one run-dependent
/// part).
std::string report_to_json(const AnalysisReport& report, int indent = 2);

/// Round to the given number of significant decimal digits.
double round_sig(double value, int digits = 12);

}  // namespace carpetdim
