#include "hsetkit/lp.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "hsetkit/error.hpp"

namespace hsetkit {

void LpProblem::validate() const {
  const std::size_t m = num_rows();
  const std::size_t n = num_cols();
  if (objective.size() != n || lower.size() != n || upper.size() != n)
    throw Error(Errc::DimensionMismatch, "objective/bounds length must equal column count");
  if (row_sense.size() != m || rhs.size() != m)
    throw Error(Errc::DimensionMismatch, "row senses/rhs length must equal row count");
  if (!constraints.all_finite()) throw Error(Errc::InvalidArgument, "non-finite constraint entry");
  for (std::size_t i = 0; i < m; ++i)
    if (!std::isfinite(rhs[i])) throw Error(Errc::InvalidArgument, "non-finite rhs");
  for (std::size_t j = 0; j < n; ++j) {
    if (!std::isfinite(objective[j])) throw Error(Errc::InvalidArgument, "non-finite objective");
    if (std::isnan(lower[j]) || std::isnan(upper[j]) || lower[j] == kInfinity ||
        upper[j] == -kInfinity || lower[j] > upper[j])
      throw Error(Errc::InvalidArgument, "invalid bounds on column " + std::to_string(j));
  }
}

namespace {

constexpr double kPivotTol = 1e-11;
constexpr double kDegenerateStep = 1e-12;
constexpr double kDriveOutTol = 1e-9;
constexpr std::size_t kRefactorInterval = 100;
constexpr std::size_t kBlandAfter = 10;
constexpr std::size_t kNone = static_cast<std::size_t>(-1);

enum class VarState : unsigned char { Basic, AtLower, AtUpper, FreeZero };
enum class PhaseOutcome { Optimal, Unbounded };

class BoundedSimplex {
 public:
  explicit BoundedSimplex(const LpProblem& p)
      : p_(p),
        m_(p.num_rows()),
        n_(p.num_cols()),
        at_(p.constraints.transpose()),
        cap_(50 * (p.num_rows() + p.num_cols()) + 50) {}

  LpSolution solve();

 private:
  bool is_artificial(std::size_t j) const noexcept { return j >= n_ + m_; }
  std::size_t total() const noexcept { return lo_.size(); }

  double column_dot(std::span<const double> y, std::size_t j) const;
  std::vector<double> ftran(std::size_t j) const;
  std::vector<double> duals() const;
  void refactor();
  void recompute_basic_values();
  void pivot(std::size_t row, std::size_t entering, std::span<const double> alpha);
  void reset_lex();
  bool lex_less(std::size_t r, double sr, std::size_t q, double sq) const;
  PhaseOutcome run_phase();
  std::size_t drive_out_artificials();
  void setup();

  const LpProblem& p_;
  std::size_t m_;
  std::size_t n_;
  DenseMatrix at_;
  std::size_t cap_;

  std::vector<double> lo_, up_, cost_, x_;
  std::vector<VarState> state_;
  std::vector<std::size_t> art_row_;
  std::vector<double> art_sign_;
  std::vector<std::size_t> basis_;
  DenseMatrix binv_;
  // B^-1 P for the rhs perturbation P used to break degenerate ties
  // lexicographically; reset at the start of every degenerate stretch.
  DenseMatrix lex_;
  bool lex_fresh_ = false;

  std::size_t iterations_ = 0;
  std::size_t since_refactor_ = 0;
  std::size_t degenerate_streak_ = 0;
  bool bland_ = false;
};

double BoundedSimplex::column_dot(std::span<const double> y, std::size_t j) const {
  if (j < n_) return dot(y, at_.row(j));
  if (j < n_ + m_) return y[j - n_];
  const std::size_t a = j - n_ - m_;
  return art_sign_[a] * y[art_row_[a]];
}

std::vector<double> BoundedSimplex::ftran(std::size_t j) const {
  std::vector<double> alpha(m_, 0.0);
  if (j < n_) {
    const auto col = at_.row(j);
    for (std::size_t r = 0; r < m_; ++r) alpha[r] = dot(binv_.row(r), col);
    return alpha;
  }
  std::size_t k;
  double s = 1.0;
  if (j < n_ + m_) {
    k = j - n_;
  } else {
    k = art_row_[j - n_ - m_];
    s = art_sign_[j - n_ - m_];
  }
  for (std::size_t r = 0; r < m_; ++r) alpha[r] = s * binv_(r, k);
  return alpha;
}

std::vector<double> BoundedSimplex::duals() const {
  std::vector<double> y(m_, 0.0);
  for (std::size_t r = 0; r < m_; ++r) {
    const double c = cost_[basis_[r]];
    if (c == 0.0) continue;
    const auto row = binv_.row(r);
    for (std::size_t k = 0; k < m_; ++k) y[k] += c * row[k];
  }
  return y;
}

void BoundedSimplex::refactor() {
  // Gauss-Jordan inversion of the basis matrix with partial pivoting.
  DenseMatrix b(m_, m_);
  for (std::size_t r = 0; r < m_; ++r) {
    const std::size_t j = basis_[r];
    if (j < n_) {
      const auto col = at_.row(j);
      for (std::size_t i = 0; i < m_; ++i) b(i, r) = col[i];
    } else if (j < n_ + m_) {
      b(j - n_, r) = 1.0;
    } else {
      b(art_row_[j - n_ - m_], r) = art_sign_[j - n_ - m_];
    }
  }
  DenseMatrix inv = DenseMatrix::identity(m_);
  for (std::size_t c = 0; c < m_; ++c) {
    std::size_t piv = c;
    for (std::size_t i = c + 1; i < m_; ++i)
      if (std::abs(b(i, c)) > std::abs(b(piv, c))) piv = i;
    if (std::abs(b(piv, c)) < 1e-14)
      throw Error(Errc::MaxIterations, "simplex basis became numerically singular");
    if (piv != c) {
      for (std::size_t k = 0; k < m_; ++k) {
        std::swap(b(piv, k), b(c, k));
        std::swap(inv(piv, k), inv(c, k));
      }
    }
    const double d = b(c, c);
    for (std::size_t k = 0; k < m_; ++k) {
      b(c, k) /= d;
      inv(c, k) /= d;
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == c) continue;
      const double f = b(i, c);
      if (f == 0.0) continue;
      for (std::size_t k = 0; k < m_; ++k) {
        b(i, k) -= f * b(c, k);
        inv(i, k) -= f * inv(c, k);
      }
    }
  }
  binv_ = std::move(inv);
  since_refactor_ = 0;
  recompute_basic_values();
}

void BoundedSimplex::recompute_basic_values() {
  std::vector<double> rhs(p_.rhs.begin(), p_.rhs.end());
  for (std::size_t j = 0; j < total(); ++j) {
    if (state_[j] == VarState::Basic || x_[j] == 0.0) continue;
    if (j < n_) {
      const auto col = at_.row(j);
      for (std::size_t i = 0; i < m_; ++i) rhs[i] -= col[i] * x_[j];
    } else if (j < n_ + m_) {
      rhs[j - n_] -= x_[j];
    } else {
      rhs[art_row_[j - n_ - m_]] -= art_sign_[j - n_ - m_] * x_[j];
    }
  }
  for (std::size_t r = 0; r < m_; ++r) x_[basis_[r]] = dot(binv_.row(r), rhs);
}

void BoundedSimplex::pivot(std::size_t row, std::size_t entering, std::span<const double> alpha) {
  const double piv = alpha[row];
  auto prow = binv_.row(row);
  for (double& v : prow) v /= piv;
  for (std::size_t r = 0; r < m_; ++r) {
    if (r == row || alpha[r] == 0.0) continue;
    const double f = alpha[r];
    auto target = binv_.row(r);
    for (std::size_t k = 0; k < m_; ++k) target[k] -= f * prow[k];
  }
  if (lex_fresh_) {
    auto lrow = lex_.row(row);
    for (double& v : lrow) v /= piv;
    for (std::size_t r = 0; r < m_; ++r) {
      if (r == row || alpha[r] == 0.0) continue;
      const double f = alpha[r];
      auto target = lex_.row(r);
      for (std::size_t k = 0; k < m_; ++k) target[k] -= f * lrow[k];
    }
  }
  basis_[row] = entering;
  state_[entering] = VarState::Basic;
  ++since_refactor_;
}

void BoundedSimplex::reset_lex() {
  // Perturb b by B S eps with S = diag(+1 at lower, -1 at upper), which
  // makes the current basis lexicographically feasible.
  lex_ = DenseMatrix(m_, m_);
  for (std::size_t r = 0; r < m_; ++r) {
    const std::size_t v = basis_[r];
    const bool at_upper = up_[v] < kInfinity && up_[v] - x_[v] <= kFeasibilityTolerance &&
                          !(lo_[v] > -kInfinity && x_[v] - lo_[v] <= kFeasibilityTolerance);
    lex_(r, r) = at_upper ? -1.0 : 1.0;
  }
  lex_fresh_ = true;
}

bool BoundedSimplex::lex_less(std::size_t r, double sr, std::size_t q, double sq) const {
  const auto a = lex_.row(r);
  const auto b = lex_.row(q);
  for (std::size_t k = 0; k < m_; ++k) {
    const double x = a[k] * sr;
    const double y = b[k] * sq;
    if (std::abs(x - y) > 1e-12 * (1.0 + std::abs(x) + std::abs(y))) return x < y;
  }
  return basis_[r] < basis_[q];
}

PhaseOutcome BoundedSimplex::run_phase() {
  degenerate_streak_ = 0;
  bland_ = false;
  lex_fresh_ = false;
  for (;;) {
    if (since_refactor_ >= kRefactorInterval) refactor();
    const auto y = duals();

    std::size_t enter = kNone;
    int dir = 0;
    double best = 0.0;
    for (std::size_t j = 0; j < total(); ++j) {
      const VarState s = state_[j];
      if (s == VarState::Basic || lo_[j] == up_[j]) continue;
      const double d = cost_[j] - column_dot(y, j);
      int cand = 0;
      if ((s == VarState::AtLower || s == VarState::FreeZero) && d < -kOptimalityTolerance)
        cand = 1;
      else if ((s == VarState::AtUpper || s == VarState::FreeZero) && d > kOptimalityTolerance)
        cand = -1;
      if (cand == 0) continue;
      if (bland_) {
        enter = j;
        dir = cand;
        break;
      }
      if (std::abs(d) > best) {
        best = std::abs(d);
        enter = j;
        dir = cand;
      }
    }
    if (enter == kNone) return PhaseOutcome::Optimal;
    if (++iterations_ > cap_)
      throw Error(Errc::MaxIterations, "simplex iteration cap reached after " +
                                           std::to_string(iterations_ - 1) + " pivots");

    const auto alpha = ftran(enter);

    // Ratio test over basic variables; the basic value changes at rate
    // -dir * alpha[r] per unit step of the entering variable.
    auto ratio_of = [&](std::size_t r, double slack_tol) {
      const double delta = -dir * alpha[r];
      const std::size_t v = basis_[r];
      if (delta < -kPivotTol && lo_[v] > -kInfinity)
        return std::max(0.0, (x_[v] - lo_[v] + slack_tol) / -delta);
      if (delta > kPivotTol && up_[v] < kInfinity)
        return std::max(0.0, (up_[v] - x_[v] + slack_tol) / delta);
      return kInfinity;
    };

    double theta_max = kInfinity;
    double t_min = kInfinity;
    for (std::size_t r = 0; r < m_; ++r) {
      theta_max = std::min(theta_max, ratio_of(r, kFeasibilityTolerance));
      t_min = std::min(t_min, ratio_of(r, 0.0));
    }

    std::size_t leave = kNone;
    double step = kInfinity;
    if (t_min <= kDegenerateStep) {
      // Degenerate step: lexicographic choice among the blocking rows.
      if (!lex_fresh_) reset_lex();
      double s_leave = 0.0;
      for (std::size_t r = 0; r < m_; ++r) {
        const double t = ratio_of(r, 0.0);
        if (t > t_min + kDegenerateStep) continue;
        // Scale of the lexicographic row: heading to lower 1/|delta|,
        // heading to upper -1/|delta|.
        const double delta = -dir * alpha[r];
        const double sr = (delta < 0.0 ? 1.0 : -1.0) / std::abs(delta);
        if (leave == kNone || lex_less(r, sr, leave, s_leave)) {
          leave = r;
          s_leave = sr;
          step = t;
        }
      }
    } else if (theta_max < kInfinity) {
      // Harris two-pass: largest pivot among rows blocking within tolerance.
      double best_pivot = 0.0;
      for (std::size_t r = 0; r < m_; ++r) {
        const double t = ratio_of(r, 0.0);
        if (t > theta_max) continue;
        if (std::abs(alpha[r]) > best_pivot) {
          best_pivot = std::abs(alpha[r]);
          leave = r;
          step = t;
        }
      }
    }

    const double range = up_[enter] - lo_[enter];
    const bool flip = range < kInfinity && (leave == kNone || range <= step);
    if (!flip && leave == kNone) return PhaseOutcome::Unbounded;
    if (flip) step = range;

    if (step <= kDegenerateStep) {
      if (++degenerate_streak_ >= kBlandAfter) bland_ = true;
    } else {
      degenerate_streak_ = 0;
      bland_ = false;
      lex_fresh_ = false;
    }

    for (std::size_t r = 0; r < m_; ++r) x_[basis_[r]] -= dir * alpha[r] * step;
    if (flip) {
      x_[enter] = dir > 0 ? up_[enter] : lo_[enter];
      state_[enter] = dir > 0 ? VarState::AtUpper : VarState::AtLower;
      continue;
    }
    x_[enter] += dir * step;

    const std::size_t out = basis_[leave];
    const double delta = -dir * alpha[leave];
    if (delta < 0.0 || lo_[out] == up_[out]) {
      x_[out] = lo_[out];
      state_[out] = VarState::AtLower;
    } else {
      x_[out] = up_[out];
      state_[out] = VarState::AtUpper;
    }
    pivot(leave, enter, alpha);
  }
}

void BoundedSimplex::setup() {
  lo_.assign(n_ + m_, 0.0);
  up_.assign(n_ + m_, 0.0);
  x_.assign(n_ + m_, 0.0);
  state_.assign(n_ + m_, VarState::AtLower);
  for (std::size_t j = 0; j < n_; ++j) {
    lo_[j] = p_.lower[j];
    up_[j] = p_.upper[j];
    if (lo_[j] > -kInfinity) {
      x_[j] = lo_[j];
      state_[j] = VarState::AtLower;
    } else if (up_[j] < kInfinity) {
      x_[j] = up_[j];
      state_[j] = VarState::AtUpper;
    } else {
      state_[j] = VarState::FreeZero;
    }
  }
  basis_.assign(m_, kNone);
  binv_ = DenseMatrix::identity(m_);
  for (std::size_t i = 0; i < m_; ++i) {
    const std::size_t s = n_ + i;
    switch (p_.row_sense[i]) {
      case RowSense::LessEqual: lo_[s] = 0.0; up_[s] = kInfinity; break;
      case RowSense::GreaterEqual: lo_[s] = -kInfinity; up_[s] = 0.0; break;
      case RowSense::Equal: lo_[s] = 0.0; up_[s] = 0.0; break;
    }
    double r = p_.rhs[i];
    for (std::size_t j = 0; j < n_; ++j)
      if (x_[j] != 0.0) r -= p_.constraints(i, j) * x_[j];
    if (lo_[s] < up_[s] && r >= lo_[s] && r <= up_[s]) {
      x_[s] = r;
      state_[s] = VarState::Basic;
      basis_[i] = s;
      continue;
    }
    const double clamped = std::clamp(r, lo_[s], up_[s]);
    x_[s] = clamped;
    state_[s] = clamped == lo_[s] ? VarState::AtLower : VarState::AtUpper;
    const double sign = r > clamped ? 1.0 : -1.0;
    art_row_.push_back(i);
    art_sign_.push_back(sign);
    lo_.push_back(0.0);
    up_.push_back(kInfinity);
    x_.push_back(std::abs(r - clamped));
    state_.push_back(VarState::Basic);
    basis_[i] = lo_.size() - 1;
    binv_(i, i) = sign;
  }
  cost_.assign(total(), 0.0);
  for (std::size_t j = n_ + m_; j < total(); ++j) cost_[j] = 1.0;
}

std::size_t BoundedSimplex::drive_out_artificials() {
  std::size_t redundant = 0;
  for (std::size_t r = 0; r < m_; ++r) {
    if (!is_artificial(basis_[r])) continue;
    const auto row = binv_.row(r);
    std::size_t best_j = kNone;
    double best = kDriveOutTol;
    for (std::size_t j = 0; j < n_ + m_; ++j) {
      if (state_[j] == VarState::Basic) continue;
      const double v = std::abs(column_dot(row, j));
      if (v > best) {
        best = v;
        best_j = j;
      }
    }
    if (best_j == kNone) {
      ++redundant;
      continue;
    }
    const std::size_t art = basis_[r];
    const auto alpha = ftran(best_j);
    pivot(r, best_j, alpha);
    state_[art] = VarState::AtLower;
    x_[art] = 0.0;
  }
  return redundant;
}

LpSolution BoundedSimplex::solve() {
  setup();
  LpSolution sol;
  sol.row_rank = m_;

  if (total() > n_ + m_) {
    refactor();
    run_phase();
    double infeas = 0.0;
    for (std::size_t j = n_ + m_; j < total(); ++j) infeas += x_[j];
    const double tol = kFeasibilityTolerance * (1.0 + max_abs(p_.rhs));
    if (infeas > tol) {
      sol.status = LpStatus::Infeasible;
      sol.dual = duals();
      sol.primal.assign(x_.begin(), x_.begin() + static_cast<std::ptrdiff_t>(n_));
      sol.iterations = iterations_;
      return sol;
    }
    sol.row_rank = m_ - drive_out_artificials();
    for (std::size_t j = n_ + m_; j < total(); ++j) {
      lo_[j] = up_[j] = 0.0;
      cost_[j] = 0.0;
      if (state_[j] != VarState::Basic) {
        x_[j] = 0.0;
        state_[j] = VarState::AtLower;
      }
    }
  }

  const double flip = p_.sense == Sense::Maximize ? -1.0 : 1.0;
  for (std::size_t j = 0; j < n_; ++j) cost_[j] = flip * p_.objective[j];
  refactor();
  const PhaseOutcome outcome = run_phase();
  refactor();

  sol.iterations = iterations_;
  sol.primal.assign(x_.begin(), x_.begin() + static_cast<std::ptrdiff_t>(n_));
  sol.basis = basis_;
  sol.objective_value = dot(p_.objective, sol.primal);
  if (outcome == PhaseOutcome::Unbounded) {
    sol.status = LpStatus::Unbounded;
    return sol;
  }
  sol.status = LpStatus::Optimal;
  const auto y = duals();
  sol.dual.resize(m_);
  for (std::size_t i = 0; i < m_; ++i) sol.dual[i] = flip * y[i];
  sol.reduced_costs.resize(n_);
  for (std::size_t j = 0; j < n_; ++j) sol.reduced_costs[j] = flip * (cost_[j] - column_dot(y, j));
  return sol;
}

}  // namespace

LpSolution solve_lp(const LpProblem& problem) {
  problem.validate();
  return BoundedSimplex(problem).solve();
}

FeasibilityResult check_feasible(const DenseMatrix& a, std::span<const double> b) {
  LpProblem p;
  p.objective.assign(a.cols(), 0.0);
  p.constraints = a;
  p.row_sense.assign(a.rows(), RowSense::LessEqual);
  p.rhs.assign(b.begin(), b.end());
  p.lower.assign(a.cols(), -kInfinity);
  p.upper.assign(a.cols(), kInfinity);
  const LpSolution sol = solve_lp(p);

  FeasibilityResult out;
  if (sol.status == LpStatus::Optimal) {
    out.feasible = true;
    out.point = sol.primal;
    return out;
  }
  std::vector<double> w(sol.dual.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::max(0.0, -sol.dual[i]);
  const double scale = max_abs(w);
  if (scale > 0.0)
    for (double& v : w) v /= scale;
  out.certificate = std::move(w);
  return out;
}

}  // namespace hsetkit
