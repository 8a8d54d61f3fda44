#include <cmath>
#include <random>
#include <stdexcept>

#include "doctest.h"
#include "fixtures.hpp"

#include "carpetdim/random.hpp"
#include "carpetdim/variational.hpp"

using namespace carpetdim;

namespace {

SimplexPoint random_interior(std::mt19937_64& rng, int d) {
  std::exponential_distribution<double> ex(1.0);
  SimplexPoint p;
  p.q.resize(static_cast<std::size_t>(d));
  double sum = 0;
  for (double& x : p.q) {
    x = ex(rng) + 1e-9;
    sum += x;
  }
  for (double& x : p.q) x /= sum;
  return p;
}

// Blend two points until the width/height log-ratios balance, landing on the
// common boundary of the two simplex regions.
SimplexPoint boundary_point(const CarpetSpec& spec, const SimplexPoint& a, const SimplexPoint& b) {
  auto gap = [&](const SimplexPoint& p) {
    const EntropyStats st = entropy_stats(spec, p);
    return st.RA - st.SB;
  };
  double lo = 0, hi = 1;
  const double ga = gap(a);
  SimplexPoint mid = a;
  for (int i = 0; i < 200; ++i) {
    const double t = 0.5 * (lo + hi);
    for (std::size_t l = 0; l < mid.q.size(); ++l) mid.q[l] = (1 - t) * a.q[l] + t * b.q[l];
    if ((gap(mid) >= 0) == (ga >= 0))
      lo = t;
    else
      hi = t;
  }
  return mid;
}

}  // namespace

TEST_SUITE_BEGIN("variational");

TEST_CASE("entropy statistics of a uniform product vector") {
  const CarpetSpec spec = fixtures::product_2x2();
  const SimplexPoint q = SimplexPoint::uniform(4);
  const EntropyStats st = entropy_stats(spec, q);
  CHECK(st.QQ == doctest::Approx(-std::log(4.0)).epsilon(1e-13));
  CHECK(st.RR == doctest::Approx(-std::log(2.0)).epsilon(1e-13));
  CHECK(st.SS == doctest::Approx(-std::log(2.0)).epsilon(1e-13));
  CHECK(st.QQ == doctest::Approx(st.RR + st.SS).epsilon(1e-13));
}

TEST_CASE("entropy statistics of a point mass") {
  const CarpetSpec spec = fixtures::gapped_three_column();
  SimplexPoint q;
  q.q = {1, 0, 0, 0, 0, 0};
  const EntropyStats st = entropy_stats(spec, q);
  CHECK(st.QQ == 0.0);
  CHECK(st.RA == doctest::Approx(std::log(0.0765)).epsilon(1e-13));
  CHECK(st.SB == doctest::Approx(std::log(0.2904)).epsilon(1e-13));
}

TEST_CASE("entropy statistics of the gapped example at uniform") {
  const CarpetSpec spec = fixtures::gapped_three_column();
  const EntropyStats st = entropy_stats(spec, SimplexPoint::uniform(6));
  // six cells, three columns and three rows of two cells each
  CHECK(st.QQ == doctest::Approx(-std::log(6.0)).epsilon(1e-13));
  CHECK(st.RR == doctest::Approx(-std::log(3.0)).epsilon(1e-13));
  CHECK(st.SS == doctest::Approx(-std::log(3.0)).epsilon(1e-13));
}

TEST_CASE("entropy stats reject a dimension mismatch") {
  CHECK_THROWS_AS(entropy_stats(fixtures::product_2x2(), SimplexPoint::uniform(3)),
                  std::invalid_argument);
}

TEST_CASE("objective formula matches a direct recomputation") {
  const CarpetSpec spec = fixtures::gapped_three_column();
  const SimplexPoint q = SimplexPoint::uniform(6);
  const EntropyStats st = entropy_stats(spec, q);
  CHECK(evaluate(spec, q, Objective::G1) ==
        doctest::Approx(st.RR / st.RA + (st.QQ - st.RR) / st.SB).epsilon(1e-14));
  CHECK(evaluate(spec, q, Objective::G2) ==
        doctest::Approx(st.SS / st.SB + (st.QQ - st.SS) / st.RA).epsilon(1e-14));
}

TEST_CASE("both branches agree where the regions meet") {
  const CarpetSpec spec = fixtures::gapped_three_column();
  std::mt19937_64 rng(11);
  int found = 0;
  for (int trial = 0; trial < 50 && found < 5; ++trial) {
    const SimplexPoint a = random_interior(rng, 6);
    const SimplexPoint b = random_interior(rng, 6);
    const double ga = entropy_stats(spec, a).RA - entropy_stats(spec, a).SB;
    const double gb = entropy_stats(spec, b).RA - entropy_stats(spec, b).SB;
    if ((ga >= 0) == (gb >= 0)) continue;
    const SimplexPoint q = boundary_point(spec, a, b);
    CHECK(evaluate(spec, q, Objective::G1) ==
          doctest::Approx(evaluate(spec, q, Objective::G2)).epsilon(1e-12));
    ++found;
  }
  CHECK(found > 0);
}

TEST_CASE("the box-branch maximizer evaluates to the box exponent") {
  const CarpetSpec spec = fixtures::gapped_three_column();
  const ExponentProfile p = assouad_lower_profile(spec);
  SimplexPoint q1;
  q1.q.resize(6);
  for (int l = 0; l < 6; ++l)
    q1.q[static_cast<std::size_t>(l)] =
        std::pow(spec.cell_width(l), p.t1) * std::pow(spec.cell_height(l), p.D1 - p.t1);
  CHECK(evaluate(spec, q1, Objective::F1, &p) == doctest::Approx(p.D1).epsilon(1e-10));
}

TEST_CASE("entropy inequality with equality exactly on product structure") {
  std::mt19937_64 rng(23);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const CarpetSpec spec = random_carpet(3, 3, seed);
    for (int k = 0; k < 20; ++k) {
      const SimplexPoint q = random_interior(rng, spec.map_count());
      const EntropyStats st = entropy_stats(spec, q);
      CHECK(st.QQ >= st.RR + st.SS - 1e-12);
    }
  }
  // product carpet with a product vector achieves equality
  const CarpetSpec prod = fixtures::product_2x2();
  const double col[2] = {0.3, 0.7};
  const double row[2] = {0.45, 0.55};
  SimplexPoint q;
  q.q.resize(4);
  for (int l = 0; l < 4; ++l)
    q.q[static_cast<std::size_t>(l)] =
        col[prod.cells[static_cast<std::size_t>(l)].col] * row[prod.cells[static_cast<std::size_t>(l)].row];
  const EntropyStats st = entropy_stats(prod, q);
  CHECK(st.QQ == doctest::Approx(st.RR + st.SS).epsilon(1e-9));
}

TEST_CASE("branch order follows the region, strictly off product structure") {
  std::mt19937_64 rng(31);
  const CarpetSpec spec = fixtures::gapped_three_column();  // not a product
  int strict_checks = 0;
  for (int k = 0; k < 200; ++k) {
    const SimplexPoint q = random_interior(rng, 6);
    const EntropyStats st = entropy_stats(spec, q);
    const double g1 = evaluate(spec, q, Objective::G1);
    const double g2 = evaluate(spec, q, Objective::G2);
    if (st.RA > st.SB + 1e-9) {
      CHECK(g1 >= g2 - 1e-12);
      CHECK(g1 > g2);  // strict: the cells are not a full product
      ++strict_checks;
    } else if (st.SB > st.RA + 1e-9) {
      CHECK(g2 >= g1 - 1e-12);
      CHECK(g2 > g1);
      ++strict_checks;
    }
  }
  CHECK(strict_checks > 100);
}

TEST_CASE("hausdorff branch is dominated by the box branch on its region") {
  std::mt19937_64 rng(37);
  for (std::uint64_t seed = 40; seed < 55; ++seed) {
    const CarpetSpec spec = random_carpet(3, 3, seed);
    const ExponentProfile p = assouad_lower_profile(spec);
    for (int k = 0; k < 30; ++k) {
      const SimplexPoint q = random_interior(rng, spec.map_count());
      const EntropyStats st = entropy_stats(spec, q);
      if (st.RA <= st.SB + 1e-9) continue;  // need strict interior of region 1
      const double g1 = evaluate(spec, q, Objective::G1);
      const double f1 = evaluate(spec, q, Objective::F1, &p);
      CHECK(g1 <= f1 + 1e-12);
      const bool tight = std::fabs(g1 - f1) <= 1e-9;
      const bool ratio_at_t1 = std::fabs(st.RR / st.RA - p.t1) <= 1e-9;
      CHECK(tight == ratio_at_t1);
    }
  }
}

TEST_CASE("maximizer reproduces the published example values") {
  const CarpetSpec spec = fixtures::gapped_three_column();
  const MaximizerResult g1 = maximize(spec, Objective::G1);
  const MaximizerResult g2 = maximize(spec, Objective::G2);
  CHECK(g1.converged);
  CHECK(g2.converged);
  CHECK(std::fabs(g1.value - 1.368858891) < 1e-6);
  CHECK(std::fabs(g2.value - 1.368381784) < 1e-6);
  CHECK(g1.argmax.interior());
  CHECK(g2.argmax.interior());
}

TEST_CASE("maximizer result satisfies the stationarity identities") {
  for (const CarpetSpec& spec :
       {fixtures::gapped_three_column(), fixtures::sixths_thirds_eight_cell()}) {
    for (Objective which : {Objective::G1, Objective::G2}) {
      const MaximizerResult r = maximize(spec, which);
      REQUIRE(r.converged);
      const EntropyStats st = entropy_stats(spec, r.argmax);
      const bool dir1 = which == Objective::G1;

      // multipliers are the entropy ratios at the argmax
      CHECK(r.theta + r.lambda == doctest::Approx(r.value).epsilon(1e-10));
      CHECK(r.rho == doctest::Approx(dir1 ? st.RA / st.SB : st.SB / st.RA).epsilon(1e-10));

      // the closed form reproduces the argmax without renormalization
      const IndexSets idx = index_sets(spec);
      double log_gamma_mean = 0;
      double sup_err = 0;
      for (int l = 0; l < spec.map_count(); ++l) {
        const Cell& c = spec.cells[static_cast<std::size_t>(l)];
        const auto& line = dir1 ? idx.columns.at(c.col) : idx.rows.at(c.row);
        double gamma = 0;
        for (int m : line)
          gamma += std::pow(dir1 ? spec.cell_height(m) : spec.cell_width(m), r.lambda);
        const double primary = dir1 ? spec.cell_width(l) : spec.cell_height(l);
        const double secondary = dir1 ? spec.cell_height(l) : spec.cell_width(l);
        const double reconstructed = std::pow(primary, r.theta) * std::pow(secondary, r.lambda) *
                                     std::pow(gamma, r.rho - 1.0);
        sup_err = std::max(sup_err,
                           std::fabs(reconstructed - r.argmax.q[static_cast<std::size_t>(l)]));
        log_gamma_mean += r.argmax.q[static_cast<std::size_t>(l)] * std::log(gamma);
      }
      CHECK(sup_err <= 1e-9);
      // the normalization constant of the closed form is exactly 1
      CHECK(std::fabs(log_gamma_mean) <= 1e-9);
    }
  }
}

TEST_CASE("uniform vertical fibres pin the hausdorff branch to the box exponent") {
  const CarpetSpec spec = fixtures::bedford_mcmullen_uniform();
  const ExponentProfile p = assouad_lower_profile(spec);
  const MaximizerResult g1 = maximize(spec, Objective::G1);
  CHECK(std::fabs(g1.value - p.D1) < 1e-9);
}

TEST_CASE("grid oracle brackets the optimizer on a two-cell carpet") {
  CarpetSpec spec;
  spec.widths = {0.3, 0.7};
  spec.heights = {0.6, 0.4};
  spec.cells = {{0, 0}, {1, 1}};
  const GridMaxResult grid = simplex_grid_max(spec, Objective::G1, 1000);
  const MaximizerResult opt = maximize(spec, Objective::G1);
  CHECK(grid.value <= opt.value + 1e-9);
  CHECK(grid.value >= opt.value - 1e-4);
  CHECK(grid.points == 1001);
}

TEST_CASE("grid oracle stays within the expected slack of the example maximum") {
  const CarpetSpec spec = fixtures::gapped_three_column();
  const GridMaxResult grid = simplex_grid_max(spec, Objective::G1, 60);
  const MaximizerResult opt = maximize(spec, Objective::G1);
  CHECK(grid.value <= opt.value + 1e-9);
  CHECK(grid.value >= opt.value - 0.01);
}

TEST_CASE("finer lattices only improve the bound") {
  const CarpetSpec spec = fixtures::gapped_three_column();
  const double coarse = simplex_grid_max(spec, Objective::F, 20).value;
  const double fine = simplex_grid_max(spec, Objective::F, 60).value;  // contains the 20-lattice
  CHECK(fine >= coarse - 1e-12);
}

TEST_CASE("grid oracle refuses combinatorial blow-ups") {
  CarpetSpec spec;
  spec.widths = {0.2, 0.2, 0.2, 0.2, 0.2};
  spec.heights = {0.25, 0.25, 0.25, 0.25};
  spec.cells.clear();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 4; ++j) spec.cells.push_back({i, j});
  CHECK_THROWS_AS(simplex_grid_max(spec, Objective::G1, 400), std::runtime_error);
}

TEST_CASE("hausdorff dimension picks the winning branch") {
  const HausdorffResult hd3 = hausdorff_dimension(fixtures::gapped_three_column());
  CHECK(hd3.attained_by == 1);
  CHECK(std::fabs(hd3.value - 1.368858891) < 1e-6);

  // full product: the value is the sum of the projection exponents
  const CarpetSpec prod = fixtures::product_2x2();
  const ExponentProfile p = assouad_lower_profile(prod);
  const HausdorffResult hd = hausdorff_dimension(prod);
  CHECK(std::fabs(hd.value - (p.t1 + p.t2)) < 1e-9);
}

TEST_CASE("maximize rejects non-variational objectives") {
  CHECK_THROWS_AS(maximize(fixtures::product_2x2(), Objective::F1), std::invalid_argument);
}

TEST_SUITE_END();
