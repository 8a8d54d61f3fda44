#include "carpetdim/variational.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

#include "carpetdim/parallel.hpp"

namespace carpetdim {

bool SimplexPoint::interior() const {
  for (double x : q)
    if (!(x > 0)) return false;
  return !q.empty();
}

bool SimplexPoint::valid() const {
  if (q.empty()) return false;
  double sum = 0;
  for (double x : q) {
    if (!(x >= 0) || !std::isfinite(x)) return false;
    sum += x;
  }
  return std::fabs(sum - 1.0) <= 1e-12;
}

SimplexPoint SimplexPoint::uniform(int d) {
  SimplexPoint p;
  p.q.assign(static_cast<std::size_t>(d), 1.0 / d);
  return p;
}

EntropyStats entropy_stats(const CarpetSpec& spec, const SimplexPoint& q) {
  const int d = spec.map_count();
  if (q.size() != d)
    throw std::invalid_argument("entropy_stats: simplex point has wrong dimension");

  EntropyStats st;
  for (int l = 0; l < d; ++l) {
    const double ql = q.q[static_cast<std::size_t>(l)];
    const Cell& c = spec.cells[static_cast<std::size_t>(l)];
    st.R[c.col] += ql;
    st.S[c.row] += ql;
    if (ql > 0) st.QQ += ql * std::log(ql);
    st.RA += ql * std::log(spec.cell_width(l));
    st.SB += ql * std::log(spec.cell_height(l));
  }
  for (const auto& [_, mass] : st.R)
    if (mass > 0) st.RR += mass * std::log(mass);
  for (const auto& [_, mass] : st.S)
    if (mass > 0) st.SS += mass * std::log(mass);
  return st;
}

const char* to_string(Objective which) {
  switch (which) {
    case Objective::G1: return "g1";
    case Objective::G2: return "g2";
    case Objective::G: return "g";
    case Objective::F1: return "f1";
    case Objective::F2: return "f2";
    case Objective::F: return "f";
  }
  return "?";
}

namespace {

double eval_from_stats(const EntropyStats& st, Objective which, double t1, double t2) {
  switch (which) {
    case Objective::G1:
      return st.RR / st.RA + (st.QQ - st.RR) / st.SB;
    case Objective::G2:
      return st.SS / st.SB + (st.QQ - st.SS) / st.RA;
    case Objective::G:
      return st.in_S1() ? eval_from_stats(st, Objective::G1, t1, t2)
                        : eval_from_stats(st, Objective::G2, t1, t2);
    case Objective::F1:
      return (st.QQ - t1 * (st.RA - st.SB)) / st.SB;
    case Objective::F2:
      return (st.QQ - t2 * (st.SB - st.RA)) / st.RA;
    case Objective::F:
      return st.in_S1() ? eval_from_stats(st, Objective::F1, t1, t2)
                        : eval_from_stats(st, Objective::F2, t1, t2);
  }
  return 0;
}

bool needs_projection_exponents(Objective which) {
  return which == Objective::F1 || which == Objective::F2 || which == Objective::F;
}

}  // namespace

double evaluate(const CarpetSpec& spec, const SimplexPoint& q, Objective which,
                const ExponentProfile* profile) {
  double t1 = 0, t2 = 0;
  ExponentProfile local;
  if (needs_projection_exponents(which)) {
    if (!profile) {
      local = assouad_lower_profile(spec);
      profile = &local;
    }
    t1 = profile->t1;
    t2 = profile->t2;
  }
  return eval_from_stats(entropy_stats(spec, q), which, t1, t2);
}

namespace {

// Precomputed structure for the inner loops: cell logs and line membership.
struct Tables {
  int d = 0;
  std::vector<double> log_a, log_b;         // per cell
  std::vector<int> col_of, row_of;          // per cell, compacted line ids
  std::vector<std::vector<int>> col_cells;  // compact column id -> cells
  std::vector<std::vector<int>> row_cells;

  explicit Tables(const CarpetSpec& spec) {
    d = spec.map_count();
    log_a.resize(static_cast<std::size_t>(d));
    log_b.resize(static_cast<std::size_t>(d));
    col_of.resize(static_cast<std::size_t>(d));
    row_of.resize(static_cast<std::size_t>(d));
    std::map<int, int> cid, rid;
    for (int l = 0; l < d; ++l) {
      log_a[static_cast<std::size_t>(l)] = std::log(spec.cell_width(l));
      log_b[static_cast<std::size_t>(l)] = std::log(spec.cell_height(l));
      const Cell& c = spec.cells[static_cast<std::size_t>(l)];
      cid.emplace(c.col, 0);
      rid.emplace(c.row, 0);
    }
    int k = 0;
    for (auto& [_, id] : cid) id = k++;
    k = 0;
    for (auto& [_, id] : rid) id = k++;
    col_cells.resize(cid.size());
    row_cells.resize(rid.size());
    for (int l = 0; l < d; ++l) {
      const Cell& c = spec.cells[static_cast<std::size_t>(l)];
      col_of[static_cast<std::size_t>(l)] = cid[c.col];
      row_of[static_cast<std::size_t>(l)] = rid[c.row];
      col_cells[static_cast<std::size_t>(cid[c.col])].push_back(l);
      row_cells[static_cast<std::size_t>(rid[c.row])].push_back(l);
    }
  }
};

struct FastStats {
  double QQ = 0, RR = 0, SS = 0, RA = 0, SB = 0;
};

FastStats fast_stats(const Tables& tb, const double* q, std::vector<double>& colmass,
                     std::vector<double>& rowmass) {
  std::fill(colmass.begin(), colmass.end(), 0.0);
  std::fill(rowmass.begin(), rowmass.end(), 0.0);
  FastStats st;
  for (int l = 0; l < tb.d; ++l) {
    const double ql = q[l];
    colmass[static_cast<std::size_t>(tb.col_of[static_cast<std::size_t>(l)])] += ql;
    rowmass[static_cast<std::size_t>(tb.row_of[static_cast<std::size_t>(l)])] += ql;
    if (ql > 0) st.QQ += ql * std::log(ql);
    st.RA += ql * tb.log_a[static_cast<std::size_t>(l)];
    st.SB += ql * tb.log_b[static_cast<std::size_t>(l)];
  }
  for (double m : colmass)
    if (m > 0) st.RR += m * std::log(m);
  for (double m : rowmass)
    if (m > 0) st.SS += m * std::log(m);
  return st;
}

double fast_objective(const FastStats& st, bool direction1) {
  return direction1 ? st.RR / st.RA + (st.QQ - st.RR) / st.SB
                    : st.SS / st.SB + (st.QQ - st.SS) / st.RA;
}

struct FixedPointOutcome {
  double value = -1e300;
  std::vector<double> q;
  double theta = 0, lambda = 0, rho = 0;
  bool converged = false;
  int iterations = 0;
};

// One restart of the stationarity-map iteration from a given start point.
// The update writes each coordinate as primary^theta * secondary^lambda *
// (line sum of secondary^lambda)^(rho-1), renormalizes, and halves the step
// while the objective drops.
FixedPointOutcome run_fixed_point(const Tables& tb, bool direction1, std::vector<double> q,
                                  const MaximizeOptions& opts) {
  const int d = tb.d;
  std::vector<double> colmass(tb.col_cells.size()), rowmass(tb.row_cells.size());
  std::vector<double> next(static_cast<std::size_t>(d));
  const auto& lines = direction1 ? tb.col_cells : tb.row_cells;
  const auto& line_of = direction1 ? tb.col_of : tb.row_of;
  const auto& primary_log = direction1 ? tb.log_a : tb.log_b;
  const auto& secondary_log = direction1 ? tb.log_b : tb.log_a;
  std::vector<double> line_gamma(lines.size());

  FixedPointOutcome out;
  FastStats st = fast_stats(tb, q.data(), colmass, rowmass);
  double value = fast_objective(st, direction1);

  int it = 0;
  for (; it < opts.max_iterations; ++it) {
    double theta, lambda, rho;
    if (direction1) {
      theta = st.RR / st.RA;
      lambda = (st.QQ - st.RR) / st.SB;
      rho = st.RA / st.SB;
    } else {
      theta = st.SS / st.SB;
      lambda = (st.QQ - st.SS) / st.RA;
      rho = st.SB / st.RA;
    }
    for (std::size_t g = 0; g < lines.size(); ++g) {
      double sum = 0;
      for (int l : lines[g]) sum += std::exp(lambda * secondary_log[static_cast<std::size_t>(l)]);
      line_gamma[g] = std::log(sum);
    }
    double total = 0;
    for (int l = 0; l < d; ++l) {
      const std::size_t sl = static_cast<std::size_t>(l);
      next[sl] = std::exp(theta * primary_log[sl] + lambda * secondary_log[sl] +
                          (rho - 1.0) * line_gamma[static_cast<std::size_t>(line_of[sl])]);
      total += next[sl];
    }
    for (int l = 0; l < d; ++l) {
      double v = next[static_cast<std::size_t>(l)] / total;
      next[static_cast<std::size_t>(l)] = v < 1e-16 ? 1e-16 : v;
    }
    total = 0;
    for (double v : next) total += v;
    for (double& v : next) v /= total;

    FastStats st2 = fast_stats(tb, next.data(), colmass, rowmass);
    double v2 = fast_objective(st2, direction1);
    for (int halve = 0; v2 < value && halve < 50; ++halve) {
      for (int l = 0; l < d; ++l)
        next[static_cast<std::size_t>(l)] =
            0.5 * (next[static_cast<std::size_t>(l)] + q[static_cast<std::size_t>(l)]);
      st2 = fast_stats(tb, next.data(), colmass, rowmass);
      v2 = fast_objective(st2, direction1);
    }

    double step = 0;
    for (int l = 0; l < d; ++l)
      step = std::max(step,
                      std::fabs(next[static_cast<std::size_t>(l)] - q[static_cast<std::size_t>(l)]));
    q.swap(next);
    st = st2;
    value = v2;
    if (step < opts.step_tol) {
      out.converged = true;
      break;
    }
  }

  out.value = value;
  out.q = std::move(q);
  out.iterations = it;
  if (direction1) {
    out.theta = st.RR / st.RA;
    out.lambda = (st.QQ - st.RR) / st.SB;
    out.rho = st.RA / st.SB;
  } else {
    out.theta = st.SS / st.SB;
    out.lambda = (st.QQ - st.SS) / st.RA;
    out.rho = st.SB / st.RA;
  }
  return out;
}

std::vector<double> dirichlet_sample(std::mt19937_64& rng, int d) {
  std::exponential_distribution<double> ex(1.0);
  std::vector<double> q(static_cast<std::size_t>(d));
  double sum = 0;
  for (double& x : q) {
    x = ex(rng);
    sum += x;
  }
  for (double& x : q) x = std::max(x / sum, 1e-16);
  sum = 0;
  for (double x : q) sum += x;
  for (double& x : q) x /= sum;
  return q;
}

}  // namespace

MaximizerResult maximize(const CarpetSpec& spec, Objective which, const MaximizeOptions& opts) {
  if (which != Objective::G1 && which != Objective::G2)
    throw std::invalid_argument("maximize: only the g1/g2 branches have a stationarity map");
  const bool direction1 = which == Objective::G1;
  const Tables tb(spec);
  const int d = spec.map_count();

  // Deterministic seeds: the uniform vector plus both box-branch maximizers,
  // which are exact fixed points whenever the matching fibres are uniform.
  const ExponentProfile profile = assouad_lower_profile(spec);
  std::vector<std::vector<double>> starts;
  starts.push_back(std::vector<double>(static_cast<std::size_t>(d), 1.0 / d));
  {
    std::vector<double> q1(static_cast<std::size_t>(d)), q2(static_cast<std::size_t>(d));
    for (int l = 0; l < d; ++l) {
      const double a = spec.cell_width(l);
      const double b = spec.cell_height(l);
      q1[static_cast<std::size_t>(l)] = std::pow(a, profile.t1) * std::pow(b, profile.D1 - profile.t1);
      q2[static_cast<std::size_t>(l)] = std::pow(b, profile.t2) * std::pow(a, profile.D2 - profile.t2);
    }
    starts.push_back(std::move(q1));
    starts.push_back(std::move(q2));
  }
  for (int s = 0; s < opts.dirichlet_starts; ++s) {
    std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ULL + static_cast<std::uint64_t>(s) + 1);
    starts.push_back(dirichlet_sample(rng, d));
  }

  std::vector<FixedPointOutcome> outcomes(starts.size());
  parallel_for(static_cast<int>(starts.size()), [&](int i) {
    outcomes[static_cast<std::size_t>(i)] =
        run_fixed_point(tb, direction1, starts[static_cast<std::size_t>(i)], opts);
  });

  std::size_t best = 0;
  for (std::size_t i = 1; i < outcomes.size(); ++i)
    if (outcomes[i].value > outcomes[best].value) best = i;

  MaximizerResult result;
  result.value = outcomes[best].value;
  result.argmax.q = outcomes[best].q;
  result.theta = outcomes[best].theta;
  result.lambda = outcomes[best].lambda;
  result.rho = outcomes[best].rho;
  result.converged = outcomes[best].converged;
  result.iterations = outcomes[best].iterations;
  result.restarts = static_cast<int>(starts.size());
  return result;
}

GridMaxResult simplex_grid_max(const CarpetSpec& spec, Objective which, int resolution,
                               const ExponentProfile* profile) {
  if (resolution < 1) throw std::invalid_argument("simplex_grid_max: resolution must be >= 1");
  const int d = spec.map_count();
  const int n = resolution;

  // composition count C(n+d-1, d-1) with overflow guard
  double count = 1;
  for (int i = 1; i < d; ++i) count *= static_cast<double>(n + i) / i;
  if (count > 1e8)
    throw std::runtime_error("simplex_grid_max: composition count exceeds 1e8");

  ExponentProfile local;
  if (needs_projection_exponents(which) && !profile) {
    local = assouad_lower_profile(spec);
    profile = &local;
  }
  const double t1 = profile ? profile->t1 : 0;
  const double t2 = profile ? profile->t2 : 0;

  const Tables tb(spec);
  // every mass that occurs on the lattice is k/n for integer k, so one log
  // table serves QQ, RR and SS alike
  std::vector<double> logt(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 1; k <= n; ++k) logt[static_cast<std::size_t>(k)] = std::log(static_cast<double>(k) / n);

  std::vector<int> counts(static_cast<std::size_t>(d), 0);
  std::vector<int> colk(tb.col_cells.size()), rowk(tb.row_cells.size());

  GridMaxResult out;
  out.value = -std::numeric_limits<double>::infinity();

  std::function<void(int, int)> visit = [&](int slot, int remaining) {
    if (slot == d - 1) {
      counts[static_cast<std::size_t>(slot)] = remaining;
      std::fill(colk.begin(), colk.end(), 0);
      std::fill(rowk.begin(), rowk.end(), 0);
      double QQ = 0, RA = 0, SB = 0;
      for (int l = 0; l < d; ++l) {
        const int k = counts[static_cast<std::size_t>(l)];
        if (k == 0) continue;
        const double ql = static_cast<double>(k) / n;
        QQ += ql * logt[static_cast<std::size_t>(k)];
        RA += ql * tb.log_a[static_cast<std::size_t>(l)];
        SB += ql * tb.log_b[static_cast<std::size_t>(l)];
        colk[static_cast<std::size_t>(tb.col_of[static_cast<std::size_t>(l)])] += k;
        rowk[static_cast<std::size_t>(tb.row_of[static_cast<std::size_t>(l)])] += k;
      }
      double RR = 0, SS = 0;
      for (int k : colk)
        if (k > 0) RR += static_cast<double>(k) / n * logt[static_cast<std::size_t>(k)];
      for (int k : rowk)
        if (k > 0) SS += static_cast<double>(k) / n * logt[static_cast<std::size_t>(k)];

      double value;
      const bool s1 = RA >= SB;
      switch (which) {
        case Objective::G1: value = RR / RA + (QQ - RR) / SB; break;
        case Objective::G2: value = SS / SB + (QQ - SS) / RA; break;
        case Objective::G:
          value = s1 ? RR / RA + (QQ - RR) / SB : SS / SB + (QQ - SS) / RA;
          break;
        case Objective::F1: value = (QQ - t1 * (RA - SB)) / SB; break;
        case Objective::F2: value = (QQ - t2 * (SB - RA)) / RA; break;
        case Objective::F:
        default:
          value = s1 ? (QQ - t1 * (RA - SB)) / SB : (QQ - t2 * (SB - RA)) / RA;
          break;
      }
      ++out.points;
      if (value > out.value) {
        out.value = value;
        out.argmax.q.assign(static_cast<std::size_t>(d), 0.0);
        for (int l = 0; l < d; ++l)
          out.argmax.q[static_cast<std::size_t>(l)] =
              static_cast<double>(counts[static_cast<std::size_t>(l)]) / n;
      }
      return;
    }
    for (int k = 0; k <= remaining; ++k) {
      counts[static_cast<std::size_t>(slot)] = k;
      visit(slot + 1, remaining - k);
    }
  };
  visit(0, n);
  return out;
}

HausdorffResult hausdorff_dimension(const CarpetSpec& spec, const MaximizeOptions& opts,
                                    double tie_tol) {
  HausdorffResult out;
  out.branch1 = maximize(spec, Objective::G1, opts);
  out.branch2 = maximize(spec, Objective::G2, opts);
  const double diff = out.branch1.value - out.branch2.value;
  if (std::fabs(diff) <= tie_tol) {
    out.attained_by = 3;
    out.value = std::max(out.branch1.value, out.branch2.value);
  } else if (diff > 0) {
    out.attained_by = 1;
    out.value = out.branch1.value;
  } else {
    out.attained_by = 2;
    out.value = out.branch2.value;
  }
  return out;
}

}  // namespace carpetdim
