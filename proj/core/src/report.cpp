#include "carpetdim/report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace carpetdim {

double round_sig(double value, int digits) {
  if (!std::isfinite(value) || value == 0.0) return value;
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

namespace {

double ms_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
      .count();
}

double worst_residual(const CarpetSpec& spec, const ExponentProfile& p) {
  const IndexSets idx = index_sets(spec);
  double worst = 0;
  auto track = [&worst](double sum) { worst = std::max(worst, std::fabs(sum - 1.0)); };

  double s = 0;
  for (const auto& [i, _] : idx.columns) s += std::pow(spec.widths[static_cast<std::size_t>(i)], p.t1);
  track(s);
  s = 0;
  for (const auto& [j, _] : idx.rows) s += std::pow(spec.heights[static_cast<std::size_t>(j)], p.t2);
  track(s);
  s = 0;
  for (int l = 0; l < spec.map_count(); ++l)
    s += std::pow(spec.cell_width(l), p.t1) * std::pow(spec.cell_height(l), p.D1 - p.t1);
  track(s);
  s = 0;
  for (int l = 0; l < spec.map_count(); ++l)
    s += std::pow(spec.cell_height(l), p.t2) * std::pow(spec.cell_width(l), p.D2 - p.t2);
  track(s);
  for (const auto& [i, members] : idx.columns) {
    if (members.size() == 1) continue;
    s = 0;
    for (int l : members) s += std::pow(spec.cell_height(l), p.S1.at(i));
    track(s);
  }
  for (const auto& [j, members] : idx.rows) {
    if (members.size() == 1) continue;
    s = 0;
    for (int l : members) s += std::pow(spec.cell_width(l), p.S2.at(j));
    track(s);
  }
  return worst;
}

}  // namespace

AnalysisReport analyze(const CarpetSpec& spec, const AnalyzeOptions& opts) {
  const auto t_total = std::chrono::steady_clock::now();
  AnalysisReport rep;
  rep.spec = spec;
  rep.options = opts;
  rep.validation = validate(spec);
  if (!rep.validation.ok())
    throw std::invalid_argument("analyze: spec fails validation; run validate() for details");
  rep.type = classify_type(spec);

  auto t0 = std::chrono::steady_clock::now();
  rep.profile = assouad_lower_profile(spec, opts.tol_root);
  rep.timings.roots_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  rep.hausdorff = hausdorff_dimension(spec, opts.maximize, opts.tol_eq);
  rep.timings.maximize_ms = ms_since(t0);

  t0 = std::chrono::steady_clock::now();
  rep.fibres = fibre_uniformity(spec, opts.tol_eq);
  rep.conditions = condition_flags(spec, rep.profile, rep.hausdorff, rep.fibres, opts.tol_eq);
  rep.dims = dimensions(spec, rep.profile, rep.hausdorff);
  rep.classification = classify(spec, rep.profile, rep.hausdorff, rep.conditions, opts.tol_eq);
  rep.timings.conditions_ms = ms_since(t0);

  const double slack = 1e-8;
  rep.dimension_chain_ok = rep.dims.lower <= rep.dims.hausdorff + slack &&
                           rep.dims.hausdorff <= rep.dims.box + slack &&
                           rep.dims.box <= rep.dims.assouad + slack;
  rep.residual_max = worst_residual(spec, rep.profile);
  rep.residuals_ok = rep.residual_max <= 1e-12;
  rep.timings.total_ms = ms_since(t_total);
  return rep;
}

namespace {

using nlohmann::ordered_json;

ordered_json num(double v) { return round_sig(v); }

ordered_json json_vector(const std::vector<double>& v) {
  ordered_json arr = ordered_json::array();
  for (double x : v) arr.push_back(num(x));
  return arr;
}

ordered_json json_map(const std::map<int, double>& m) {
  ordered_json obj = ordered_json::object();
  for (const auto& [k, v] : m) obj[std::to_string(k)] = num(v);
  return obj;
}

ordered_json json_maximizer(const MaximizerResult& r) {
  ordered_json obj;
  obj["value"] = num(r.value);
  obj["argmax"] = json_vector(r.argmax.q);
  obj["theta"] = num(r.theta);
  obj["lambda"] = num(r.lambda);
  obj["rho"] = num(r.rho);
  obj["converged"] = r.converged;
  obj["restarts"] = r.restarts;
  obj["iterations"] = r.iterations;
  return obj;
}

const char* attained_name(int attained) {
  return attained == 3 ? "both" : (attained == 2 ? "2" : "1");
}

}  // namespace

std::string report_to_json(const AnalysisReport& rep, int indent) {
  ordered_json doc;

  {
    ordered_json input;
    input["widths"] = json_vector(rep.spec.widths);
    input["heights"] = json_vector(rep.spec.heights);
    ordered_json cells = ordered_json::array();
    for (const Cell& c : rep.spec.cells) cells.push_back({c.col, c.row});
    input["cells"] = cells;
    input["allow_gaps"] = rep.spec.allow_gaps;
    doc["input"] = input;
  }
  {
    ordered_json o;
    o["tol_eq"] = num(rep.options.tol_eq);
    o["tol_root"] = num(rep.options.tol_root);
    o["starts"] = rep.options.maximize.dirichlet_starts;
    o["seed"] = rep.options.maximize.seed;
    doc["options"] = o;
  }
  doc["type"] = to_string(rep.type.type);
  doc["self_similar_degenerate"] = rep.type.self_similar_degenerate;
  if (!rep.validation.warnings.empty()) doc["warnings"] = rep.validation.warnings;

  {
    ordered_json e;
    e["t1"] = num(rep.profile.t1);
    e["t2"] = num(rep.profile.t2);
    e["D1"] = num(rep.profile.D1);
    e["D2"] = num(rep.profile.D2);
    e["S1"] = json_map(rep.profile.S1);
    e["S2"] = json_map(rep.profile.S2);
    e["E1"] = num(rep.profile.E1);
    e["E2"] = num(rep.profile.E2);
    e["F1"] = num(rep.profile.F1);
    e["F2"] = num(rep.profile.F2);
    e["E1_tilde"] = num(rep.profile.E1_tilde);
    e["E2_tilde"] = num(rep.profile.E2_tilde);
    e["F1_tilde"] = num(rep.profile.F1_tilde);
    e["F2_tilde"] = num(rep.profile.F2_tilde);
    doc["exponents"] = e;
  }
  {
    ordered_json v;
    v["G1"] = json_maximizer(rep.hausdorff.branch1);
    v["G2"] = json_maximizer(rep.hausdorff.branch2);
    doc["variational"] = v;
  }
  {
    ordered_json d;
    d["hausdorff"] = num(rep.dims.hausdorff);
    d["hausdorff_attained_by"] = attained_name(rep.dims.hausdorff_attained_by);
    d["box"] = num(rep.dims.box);
    d["assouad"] = num(rep.dims.assouad);
    d["lower"] = num(rep.dims.lower);
    doc["dimensions"] = d;
  }
  {
    ordered_json f;
    f["vertical_uniform"] = rep.fibres.vertical_uniform;
    f["horizontal_uniform"] = rep.fibres.horizontal_uniform;
    f["S1"] = json_vector(rep.fibres.S1);
    f["S2"] = json_vector(rep.fibres.S2);
    f["S1_spread"] = num(rep.fibres.S1_spread);
    f["S2_spread"] = num(rep.fibres.S2_spread);
    if (rep.fibres.vertical_exponent) f["vertical_exponent"] = num(*rep.fibres.vertical_exponent);
    if (rep.fibres.horizontal_exponent)
      f["horizontal_exponent"] = num(*rep.fibres.horizontal_exponent);
    f["tolerance"] = num(rep.fibres.tolerance);
    doc["fibres"] = f;
  }
  {
    ordered_json c;
    c["ufH"] = rep.conditions.ufH;
    c["ufB"] = rep.conditions.ufB;
    c["ufA"] = rep.conditions.ufA;
    c["ufL"] = rep.conditions.ufL;
    ordered_json m;
    m["G1_minus_G2"] = num(rep.conditions.margin_G);
    m["D1_minus_D2"] = num(rep.conditions.margin_D);
    m["E1_minus_E2"] = num(rep.conditions.margin_E);
    m["F1_minus_F2"] = num(rep.conditions.margin_F);
    c["margins"] = m;
    ordered_json b;
    b["ufH"] = rep.conditions.branch_H;
    b["ufB"] = rep.conditions.branch_B;
    b["ufA"] = rep.conditions.branch_A;
    b["ufL"] = rep.conditions.branch_L;
    c["branches"] = b;
    c["product"] = rep.conditions.product;
    doc["conditions"] = c;
  }
  {
    ordered_json c;
    c["measure_class"] = to_string(rep.classification.measure);
    c["equal_HB"] = rep.classification.equal_HB;
    c["equal_BA"] = rep.classification.equal_BA;
    c["equal_HA"] = rep.classification.equal_HA;
    c["equal_LH"] = rep.classification.equal_LH;
    c["equal_LA"] = rep.classification.equal_LA;
    c["ahlfors_regular"] = rep.classification.ahlfors_regular;
    c["ordering_case"] = std::string(1, rep.classification.ordering_case);
    if (!rep.classification.diagnostic.empty())
      c["diagnostic"] = rep.classification.diagnostic;
    doc["classification"] = c;
  }
  {
    ordered_json k;
    k["dimension_chain_ok"] = rep.dimension_chain_ok;
    k["residuals_ok"] = rep.residuals_ok;
    k["residual_max"] = num(rep.residual_max);
    doc["checks"] = k;
  }
  {
    ordered_json t;
    t["roots_ms"] = round_sig(rep.timings.roots_ms, 4);
    t["maximize_ms"] = round_sig(rep.timings.maximize_ms, 4);
    t["conditions_ms"] = round_sig(rep.timings.conditions_ms, 4);
    t["total_ms"] = round_sig(rep.timings.total_ms, 4);
    doc["timings_ms"] = t;
  }
  return doc.dump(indent);
}

}  // namespace carpetdim
