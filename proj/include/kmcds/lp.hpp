#pragma once

#include <cstddef>
#include <limits>
#include <vector>

namespace kmcds {

struct LpResult {
  std::vector<double> x;
  double objective = 0.0;
  std::size_t pivots = 0;
};

/// Dense bounded-variable tableau for  max c.x  s.t.  A x <= b, 0 <= x <= u  where the origin is
/// feasible (b >= 0). Rows can be appended after a solve; the next solve then runs dual simplex
/// from the previous basis. Throws InvariantViolation when unbounded, infeasible or stuck.
class BoundedSimplex {
 public:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  BoundedSimplex(std::vector<double> c, std::vector<double> upper, double eps = 1e-9);

  /// Sparse row: pairs (column, coefficient).
  void add_row(const std::vector<std::pair<std::size_t, double>>& row, double b);
  LpResult solve();

  std::size_t rows() const { return basic_.size(); }

 private:
  void pivot(std::size_t r, std::size_t s);
  bool primal_step(bool bland);
  bool dual_step();

  std::size_t cols_;
  double eps_;
  std::vector<double> cost_;
  std::vector<double> upper_;
  std::vector<double> value_;
  std::vector<std::vector<double>> t_;  // one row per constraint over all columns
  std::vector<double> reduced_;         // c_B B^-1 A_j - c_j
  std::vector<std::size_t> basic_;
  std::vector<long> row_of_;            // -1 when nonbasic
  std::size_t pivots_ = 0;
};

/// max c.x s.t. A x <= b, x >= 0 with b >= 0.
LpResult maximize(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                  const std::vector<double>& c, double eps = 1e-9);

}  // namespace kmcds
