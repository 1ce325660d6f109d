#include "kmcds/lp.hpp"

#include <cmath>

#include "kmcds/errors.hpp"

namespace kmcds {

BoundedSimplex::BoundedSimplex(std::vector<double> c, std::vector<double> upper, double eps)
    : cols_(c.size()), eps_(eps), cost_(std::move(c)), upper_(std::move(upper)) {
  if (upper_.size() != cols_) throw PreconditionViolation("one bound per column");
  for (double u : upper_) {
    if (!(u >= 0)) throw PreconditionViolation("upper bounds must be nonnegative");
  }
  value_.assign(cols_, 0.0);
  reduced_.resize(cols_);
  for (std::size_t j = 0; j < cols_; ++j) reduced_[j] = -cost_[j];
  row_of_.assign(cols_, -1);
}

void BoundedSimplex::add_row(const std::vector<std::pair<std::size_t, double>>& row, double b) {
  const std::size_t width = value_.size() + 1;
  for (auto& r : t_) r.push_back(0.0);
  std::vector<double> fresh(width, 0.0);
  double activity = 0.0;
  for (auto [j, a] : row) {
    if (j >= cols_) throw PreconditionViolation("row refers to an unknown column");
    fresh[j] += a;
    activity += a * value_[j];
  }
  fresh[width - 1] = 1.0;
  // express in the current nonbasic columns
  for (std::size_t i = 0; i < basic_.size(); ++i) {
    double f = fresh[basic_[i]];
    if (f == 0.0) continue;
    const auto& src = t_[i];
    for (std::size_t j = 0; j < width; ++j) {
      if (src[j] != 0.0) fresh[j] -= f * src[j];
    }
    fresh[basic_[i]] = 0.0;
  }
  t_.push_back(std::move(fresh));
  cost_.push_back(0.0);
  upper_.push_back(kInf);
  value_.push_back(b - activity);
  reduced_.push_back(0.0);
  row_of_.push_back(static_cast<long>(basic_.size()));
  basic_.push_back(width - 1);
}

void BoundedSimplex::pivot(std::size_t r, std::size_t s) {
  auto& pr = t_[r];
  const double inv = 1.0 / pr[s];
  std::vector<std::size_t> live;
  for (std::size_t j = 0; j < pr.size(); ++j) {
    if (pr[j] != 0.0) {
      pr[j] *= inv;
      live.push_back(j);
    }
  }
  pr[s] = 1.0;
  auto eliminate = [&](std::vector<double>& row) {
    const double f = row[s];
    if (f == 0.0) return;
    for (std::size_t j : live) row[j] -= f * pr[j];
    row[s] = 0.0;
  };
  for (std::size_t i = 0; i < t_.size(); ++i) {
    if (i != r) eliminate(t_[i]);
  }
  eliminate(reduced_);
  row_of_[basic_[r]] = -1;
  basic_[r] = s;
  row_of_[s] = static_cast<long>(r);
  ++pivots_;
}

// One primal iteration; false at optimality.
bool BoundedSimplex::primal_step(bool bland) {
  const std::size_t width = value_.size();
  std::size_t s = width;
  double best = 0.0;
  for (std::size_t j = 0; j < width; ++j) {
    if (row_of_[j] >= 0) continue;
    bool at_upper = upper_[j] < kInf && value_[j] >= upper_[j] - eps_;
    double gain = at_upper ? reduced_[j] : -reduced_[j];
    if (gain <= eps_) continue;
    if (s == width || (!bland && gain > best)) {
      s = j;
      best = gain;
      if (bland) break;
    }
  }
  if (s == width) return false;
  const bool increase = !(upper_[s] < kInf && value_[s] >= upper_[s] - eps_);
  const double dir = increase ? 1.0 : -1.0;
  // entering moves by dir * theta; basic i moves by -t[i][s] * dir * theta
  double theta = upper_[s];
  std::size_t leave = basic_.size();
  double leave_to = 0.0;
  for (std::size_t i = 0; i < basic_.size(); ++i) {
    const double rate = -t_[i][s] * dir;
    const std::size_t b = basic_[i];
    double lim;
    double target;
    if (rate < -eps_) {
      lim = std::max(0.0, value_[b]) / -rate;
      target = 0.0;
    } else if (rate > eps_ && upper_[b] < kInf) {
      lim = std::max(0.0, upper_[b] - value_[b]) / rate;
      target = upper_[b];
    } else {
      continue;
    }
    if (lim < theta - 1e-12 || (leave != basic_.size() && lim <= theta + 1e-12 && b < basic_[leave])) {
      theta = lim;
      leave = i;
      leave_to = target;
    }
  }
  KMCDS_ENSURE(theta < kInf, "linear program is unbounded");
  for (std::size_t i = 0; i < basic_.size(); ++i) value_[basic_[i]] -= t_[i][s] * dir * theta;
  value_[s] += dir * theta;
  if (leave == basic_.size()) {
    value_[s] = increase ? upper_[s] : 0.0;  // bound flip
    return true;
  }
  const std::size_t out = basic_[leave];
  pivot(leave, s);
  value_[out] = leave_to;
  return true;
}

// One dual iteration; false when the basis is primal feasible.
bool BoundedSimplex::dual_step() {
  std::size_t r = basic_.size();
  double worst = eps_;
  for (std::size_t i = 0; i < basic_.size(); ++i) {
    const std::size_t b = basic_[i];
    double infeas = std::max(-value_[b], upper_[b] < kInf ? value_[b] - upper_[b] : 0.0);
    if (infeas > worst) {
      worst = infeas;
      r = i;
    }
  }
  if (r == basic_.size()) return false;
  const std::size_t b = basic_[r];
  const bool below = value_[b] < 0;
  const double target = below ? 0.0 : upper_[b];
  const auto& row = t_[r];
  // basic changes by -row[j] * delta_j; pick the entering column that keeps reduced costs feasible
  std::size_t s = value_.size();
  double best = kInf;
  for (std::size_t j = 0; j < value_.size(); ++j) {
    if (row_of_[j] >= 0 || std::abs(row[j]) <= eps_) continue;
    const bool at_upper = upper_[j] < kInf && value_[j] >= upper_[j] - eps_;
    const bool want_inc = below ? row[j] < 0 : row[j] > 0;
    if (want_inc == at_upper) continue;
    double ratio = std::abs(reduced_[j]) / std::abs(row[j]);
    if (ratio < best - 1e-12 || (ratio <= best + 1e-12 && j < s)) {
      best = ratio;
      s = j;
    }
  }
  KMCDS_ENSURE(s < value_.size(), "linear program is infeasible");
  const double delta = (value_[b] - target) / row[s];
  for (std::size_t i = 0; i < basic_.size(); ++i) value_[basic_[i]] -= t_[i][s] * delta;
  value_[s] += delta;
  pivot(r, s);
  value_[b] = target;
  return true;
}

LpResult BoundedSimplex::solve() {
  const std::size_t start = pivots_;
  const std::size_t cap = 50 * (value_.size() + basic_.size()) + 1000;
  while (dual_step()) KMCDS_ENSURE(pivots_ - start < cap, "simplex pivot cap reached");
  std::size_t degenerate_run = 0;
  while (true) {
    double before = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) before += cost_[j] * value_[j];
    if (!primal_step(degenerate_run > 50)) break;
    double after = 0.0;
    for (std::size_t j = 0; j < cols_; ++j) after += cost_[j] * value_[j];
    degenerate_run = after > before + eps_ ? 0 : degenerate_run + 1;
    KMCDS_ENSURE(pivots_ - start < cap, "simplex pivot cap reached");
  }
  LpResult out;
  out.x.assign(value_.begin(), value_.begin() + static_cast<long>(cols_));
  for (std::size_t j = 0; j < cols_; ++j) out.objective += cost_[j] * out.x[j];
  out.pivots = pivots_ - start;
  return out;
}

LpResult maximize(const std::vector<std::vector<double>>& a, const std::vector<double>& b,
                  const std::vector<double>& c, double eps) {
  for (double v : b) {
    if (v < 0) throw PreconditionViolation("simplex needs a nonnegative right-hand side");
  }
  BoundedSimplex lp(c, std::vector<double>(c.size(), BoundedSimplex::kInf), eps);
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<std::pair<std::size_t, double>> row;
    for (std::size_t j = 0; j < a[i].size(); ++j) {
      if (a[i][j] != 0.0) row.emplace_back(j, a[i][j]);
    }
    lp.add_row(row, b[i]);
  }
  return lp.solve();
}

}  // namespace kmcds
