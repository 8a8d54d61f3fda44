#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "carpetdim/carpet.hpp"
#include "carpetdim/roots.hpp"

namespace carpetdim {

/// A probability vector over the d cells.
struct SimplexPoint {
  std::vector<double> q;

  int size() const { return static_cast<int>(q.size()); }
  bool interior() const;
  /// nonneg entries summing to 1 within 1e-12
  bool valid() const;

  static SimplexPoint uniform(int d);
};

/// The entropy and log-ratio statistics of a simplex point, with the
/// 0 log 0 = 0 convention on the boundary. All values are in nats. RA and SB
/// are strictly negative for every simplex point since all ratios lie in
/// (0,1), so the objective denominators never vanish.
struct EntropyStats {
  double QQ = 0;  // sum q log q
  double RR = 0;  // sum over columns of R log R
  double SS = 0;  // sum over rows of S log S
  double RA = 0;  // sum q log(width)
  double SB = 0;  // sum q log(height)
  std::map<int, double> R;  // column masses
  std::map<int, double> S;  // row masses

  bool in_S1() const { return RA >= SB; }  // width shrinks no faster than height
  bool in_S2() const { return RA <= SB; }
};

/// Throws std::invalid_argument on a dimension mismatch.
EntropyStats entropy_stats(const CarpetSpec& spec, const SimplexPoint& q);

/// The six variational functionals. G1/G2 are the two entropy-ratio branches
/// whose maxima give the Hausdorff dimension; F1/F2 are the box-dimension
/// branches; G and F pick the branch by simplex-region membership, preferring
/// the first branch at ties.
enum class Objective { G1, G2, G, F1, F2, F };

const char* to_string(Objective which);

/// Evaluates the chosen functional at q. F-branch objectives need the
/// projection exponents; pass a profile to reuse one, otherwise it is
/// computed on the fly.
double evaluate(const CarpetSpec& spec, const SimplexPoint& q, Objective which,
                const ExponentProfile* profile = nullptr);

struct MaximizeOptions {
  int dirichlet_starts = 16;    // random restarts beyond the deterministic seeds
  std::uint64_t seed = 0;
  double step_tol = 1e-12;      // sup-norm fixed-point step for convergence
  int max_iterations = 10000;
};

struct MaximizerResult {
  double value = 0;
  SimplexPoint argmax;
  double theta = 0, lambda = 0, rho = 0;  // multipliers at the argmax
  bool converged = false;
  int restarts = 0;    // restarts actually run
  int iterations = 0;  // iterations of the winning restart
};

/// Maximizes G1 or G2 over the simplex by iterating the closed-form
/// stationarity map with multistart. The deterministic seeds (uniform vector
/// and both box-branch maximizers) always run in addition to the Dirichlet
/// restarts; results merge by (value, start index), so the outcome does not
/// depend on scheduling.
MaximizerResult maximize(const CarpetSpec& spec, Objective which,
                         const MaximizeOptions& opts = {});

struct GridMaxResult {
  double value = 0;
  SimplexPoint argmax;
  std::uint64_t points = 0;  // lattice points visited
};

/// Brute-force lower bound: maximum of the functional over the lattice
/// {k/n : k a composition of n into d parts}. Refuses when the composition
/// count exceeds 1e8.
GridMaxResult simplex_grid_max(const CarpetSpec& spec, Objective which, int resolution,
                               const ExponentProfile* profile = nullptr);

struct HausdorffResult {
  double value = 0;
  int attained_by = 1;  // 1, 2, or 3 when both branches tie
  MaximizerResult branch1, branch2;
};

/// max{G1, G2} with the attaining branch; |G1-G2| <= tie_tol reports both.
HausdorffResult hausdorff_dimension(const CarpetSpec& spec, const MaximizeOptions& opts = {},
                                    double tie_tol = 1e-9);

}  // namespace carpetdim
