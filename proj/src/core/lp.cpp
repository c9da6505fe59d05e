// Exact two-phase simplex over the rationals, Bland's pivoting rule.

#include <algorithm>

#include "latmin/exact.hpp"

namespace latmin {

namespace {

// min c.z  s.t.  A z = b, z >= 0, b >= 0 (rows with negative rhs are flipped on entry).
struct StandardForm {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<RatVector> a;
  RatVector b;
  RatVector c;
};

enum class CoreStatus { Optimal, Infeasible, Unbounded };

struct CoreResult {
  CoreStatus status = CoreStatus::Infeasible;
  RatVector z;
  RatVector ray;
  // Simplex multipliers w for the unflipped rows: phase 1 ones when
  // infeasible, phase 2 ones otherwise.
  RatVector multipliers;
};

class Tableau {
 public:
  explicit Tableau(const StandardForm& sf)
      : m_(sf.rows), n_(sf.cols), t_(sf.rows, RatVector(sf.cols + sf.rows)), rhs_(sf.b), basis_(sf.rows),
        flip_(sf.rows, false) {
    for (std::size_t i = 0; i < m_; ++i) {
      const bool flip = sgn(sf.b[i]) < 0;
      flip_[i] = flip;
      for (std::size_t j = 0; j < n_; ++j) t_[i][j] = flip ? Rational(-sf.a[i][j]) : sf.a[i][j];
      if (flip) rhs_[i] = -rhs_[i];
      t_[i][n_ + i] = 1;
      basis_[i] = n_ + i;
    }
    allowed_.assign(n_ + m_, true);
  }

  CoreResult run(const RatVector& cost) {
    // phase 1: minimize the sum of artificials
    RatVector c1(n_ + m_);
    for (std::size_t i = 0; i < m_; ++i) c1[n_ + i] = 1;
    set_cost(c1);
    iterate();
    if (sgn(objective_) != 0) {
      CoreResult res;
      res.multipliers = multipliers(1);
      return res;
    }

    // drive artificial variables out of the basis
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(t_[i][j]) != 0) {
          pivot(i, j);
          break;
        }
      }
    }
    for (std::size_t j = n_; j < n_ + m_; ++j) allowed_[j] = false;

    RatVector c2(n_ + m_);
    std::copy(cost.begin(), cost.end(), c2.begin());
    set_cost(c2);
    auto unbounded_col = iterate();
    CoreResult res;
    res.z.assign(n_, 0);
    for (std::size_t i = 0; i < m_; ++i)
      if (basis_[i] < n_) res.z[basis_[i]] = rhs_[i];
    if (unbounded_col) {
      res.status = CoreStatus::Unbounded;
      res.ray.assign(n_, 0);
      res.ray[*unbounded_col] = 1;
      for (std::size_t i = 0; i < m_; ++i)
        if (basis_[i] < n_) res.ray[basis_[i]] = -t_[i][*unbounded_col];
    } else {
      res.status = CoreStatus::Optimal;
    }
    res.multipliers = multipliers(0);
    return res;
  }

 private:
  // reduced cost of artificial column i is art_cost - w'_i
  RatVector multipliers(long art_cost) const {
    RatVector w(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      w[i] = Rational(art_cost) - reduced_[n_ + i];
      if (flip_[i]) w[i] = -w[i];
    }
    return w;
  }

  void set_cost(const RatVector& c) {
    reduced_ = c;
    objective_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational cb = c[basis_[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < n_ + m_; ++j) reduced_[j] -= cb * t_[i][j];
      objective_ += cb * rhs_[i];
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / t_[r][c];
    for (auto& x : t_[r]) x *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || sgn(t_[i][c]) == 0) continue;
      const Rational f = t_[i][c];
      for (std::size_t j = 0; j < n_ + m_; ++j)
        if (sgn(t_[r][j]) != 0) t_[i][j] -= f * t_[r][j];
      rhs_[i] -= f * rhs_[r];
    }
    if (sgn(reduced_[c]) != 0) {
      const Rational f = reduced_[c];
      for (std::size_t j = 0; j < n_ + m_; ++j)
        if (sgn(t_[r][j]) != 0) reduced_[j] -= f * t_[r][j];
      objective_ += f * rhs_[r];
    }
    basis_[r] = c;
  }

  // Returns the entering column if the problem is unbounded.
  std::optional<std::size_t> iterate() {
    for (;;) {
      std::size_t enter = n_ + m_;
      for (std::size_t j = 0; j < n_ + m_; ++j)
        if (allowed_[j] && sgn(reduced_[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == n_ + m_) return std::nullopt;
      std::size_t leave = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(t_[i][enter]) <= 0) continue;
        Rational ratio = rhs_[i] / t_[i][enter];
        if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == m_) return enter;
      pivot(leave, enter);
    }
  }

  std::size_t m_, n_;
  std::vector<RatVector> t_;
  RatVector rhs_;
  std::vector<std::size_t> basis_;
  std::vector<bool> flip_;
  std::vector<bool> allowed_;
  RatVector reduced_;
  Rational objective_;
};

// Free variables x = xp - xn; inequality rows get a surplus variable.
StandardForm to_standard(const LPProblem& p) {
  StandardForm sf;
  const std::size_t nv = p.variables;
  const std::size_t ni = p.inequalities.size();
  sf.rows = p.equalities.size() + ni;
  sf.cols = 2 * nv + ni;
  sf.a.assign(sf.rows, RatVector(sf.cols));
  sf.b.assign(sf.rows, 0);
  std::size_t r = 0;
  auto fill = [&](const LinearConstraint& lc) {
    if (lc.coeffs.size() != nv) throw Error(Status::DimensionMismatch, "lp constraint width");
    for (std::size_t j = 0; j < nv; ++j) {
      sf.a[r][j] = lc.coeffs[j];
      sf.a[r][nv + j] = -lc.coeffs[j];
    }
    sf.b[r] = lc.rhs;
  };
  for (const auto& e : p.equalities) {
    fill(e);
    ++r;
  }
  for (std::size_t k = 0; k < ni; ++k) {
    fill(p.inequalities[k]);
    sf.a[r][2 * nv + k] = -1;
    ++r;
  }
  sf.c.assign(sf.cols, 0);
  if (!p.objective.empty()) {
    if (p.objective.size() != nv) throw Error(Status::DimensionMismatch, "lp objective width");
    for (std::size_t j = 0; j < nv; ++j) {
      Rational c = p.sense == Sense::Maximize ? Rational(-p.objective[j]) : p.objective[j];
      sf.c[j] = c;
      sf.c[nv + j] = -c;
    }
  }
  return sf;
}

CoreResult solve_standard(const StandardForm& sf) {
  Tableau t(sf);
  return t.run(sf.c);
}

Rational dot(const RatVector& a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Farkas multipliers via the alternative system
//   sum y_eq A_eq + sum y_in A_in = 0, y . b = 1, y_in >= 0.
FarkasCertificate farkas_for(const LPProblem& p) {
  const std::size_t ne = p.equalities.size();
  const std::size_t ni = p.inequalities.size();
  LPProblem alt;
  alt.variables = ne + ni;
  for (std::size_t j = 0; j < p.variables; ++j) {
    LinearConstraint lc{RatVector(alt.variables), 0};
    for (std::size_t k = 0; k < ne; ++k) lc.coeffs[k] = p.equalities[k].coeffs[j];
    for (std::size_t k = 0; k < ni; ++k) lc.coeffs[ne + k] = p.inequalities[k].coeffs[j];
    alt.equalities.push_back(std::move(lc));
  }
  LinearConstraint norm{RatVector(alt.variables), 1};
  for (std::size_t k = 0; k < ne; ++k) norm.coeffs[k] = p.equalities[k].rhs;
  for (std::size_t k = 0; k < ni; ++k) norm.coeffs[ne + k] = p.inequalities[k].rhs;
  alt.equalities.push_back(std::move(norm));
  for (std::size_t k = 0; k < ni; ++k) {
    LinearConstraint lc{RatVector(alt.variables), 0};
    lc.coeffs[ne + k] = 1;
    alt.inequalities.push_back(std::move(lc));
  }
  auto sf = to_standard(alt);
  auto r = solve_standard(sf);
  if (r.status != CoreStatus::Optimal) throw Error(Status::Internal, "lp: Farkas alternative has no solution");
  FarkasCertificate cert;
  const std::size_t nv = alt.variables;
  for (std::size_t k = 0; k < nv; ++k) {
    Rational y = r.z[k] - r.z[nv + k];
    if (k < ne)
      cert.eq_multipliers.push_back(y);
    else
      cert.ineq_multipliers.push_back(y);
  }
  return cert;
}

}  // namespace

bool is_feasible_point(const LPProblem& p, std::span<const Rational> x) {
  if (x.size() != p.variables) return false;
  for (const auto& e : p.equalities)
    if (dot(e.coeffs, x) != e.rhs) return false;
  for (const auto& e : p.inequalities)
    if (dot(e.coeffs, x) < e.rhs) return false;
  return true;
}

bool verify_farkas(const LPProblem& p, const FarkasCertificate& c) {
  if (c.eq_multipliers.size() != p.equalities.size() || c.ineq_multipliers.size() != p.inequalities.size())
    return false;
  RatVector combo(p.variables);
  Rational rhs = 0;
  for (std::size_t k = 0; k < p.equalities.size(); ++k) {
    for (std::size_t j = 0; j < p.variables; ++j) combo[j] += c.eq_multipliers[k] * p.equalities[k].coeffs[j];
    rhs += c.eq_multipliers[k] * p.equalities[k].rhs;
  }
  for (std::size_t k = 0; k < p.inequalities.size(); ++k) {
    if (sgn(c.ineq_multipliers[k]) < 0) return false;
    for (std::size_t j = 0; j < p.variables; ++j) combo[j] += c.ineq_multipliers[k] * p.inequalities[k].coeffs[j];
    rhs += c.ineq_multipliers[k] * p.inequalities[k].rhs;
  }
  for (const auto& x : combo)
    if (sgn(x) != 0) return false;
  return sgn(rhs) > 0;
}

LPResult lp_solve(const LPProblem& p) {
  auto sf = to_standard(p);
  auto core = solve_standard(sf);
  LPResult res;
  const std::size_t nv = p.variables;
  if (core.status == CoreStatus::Infeasible) {
    res.status = LPStatus::Infeasible;
    res.farkas = farkas_for(p);
    if (!verify_farkas(p, res.farkas)) throw Error(Status::Internal, "lp: Farkas certificate failed verification");
    return res;
  }
  res.point.assign(nv, 0);
  for (std::size_t j = 0; j < nv; ++j) res.point[j] = core.z[j] - core.z[nv + j];
  if (!is_feasible_point(p, res.point)) throw Error(Status::Internal, "lp: point failed verification");
  if (!p.objective.empty()) res.value = dot(p.objective, res.point);
  if (core.status == CoreStatus::Unbounded) {
    res.status = LPStatus::Unbounded;
    res.ray.assign(nv, 0);
    for (std::size_t j = 0; j < nv; ++j) res.ray[j] = core.ray[j] - core.ray[nv + j];
    // direction check: A_eq r = 0, A_in r >= 0, strictly improving
    for (const auto& e : p.equalities)
      if (sgn(dot(e.coeffs, res.ray)) != 0) throw Error(Status::Internal, "lp: ray leaves equality set");
    for (const auto& e : p.inequalities)
      if (sgn(dot(e.coeffs, res.ray)) < 0) throw Error(Status::Internal, "lp: ray violates inequality");
    Rational gain = dot(p.objective, res.ray);
    if ((p.sense == Sense::Maximize ? sgn(gain) : -sgn(gain)) <= 0)
      throw Error(Status::Internal, "lp: ray does not improve objective");
    return res;
  }
  res.status = LPStatus::Optimal;
  return res;
}

LPResult minimize_over_inequalities(const std::vector<RatVector>& a, const RatVector& b, const RatVector& c) {
  const std::size_t m = a.size();
  const std::size_t d = c.size();
  if (b.size() != m) throw Error(Status::DimensionMismatch, "lp: rhs length");
  // dual: min -b.u  s.t.  A^T u = c, u >= 0; its multipliers w give y = -w
  StandardForm sf;
  sf.rows = d;
  sf.cols = m;
  sf.a.assign(d, RatVector(m));
  for (std::size_t k = 0; k < m; ++k) {
    if (a[k].size() != d) throw Error(Status::DimensionMismatch, "lp constraint width");
    for (std::size_t i = 0; i < d; ++i) sf.a[i][k] = a[k][i];
  }
  sf.b = c;
  sf.c.assign(m, 0);
  for (std::size_t k = 0; k < m; ++k) sf.c[k] = -b[k];
  auto core = solve_standard(sf);

  LPResult res;
  RatVector y(d);
  for (std::size_t i = 0; i < d; ++i) y[i] = -core.multipliers[i];
  if (core.status == CoreStatus::Unbounded) {
    res.status = LPStatus::Infeasible;
    return res;
  }
  if (core.status == CoreStatus::Infeasible) {
    // A y >= 0 and c.y < 0: an improving direction of the constraint cone
    for (const auto& row : a)
      if (sgn(dot(row, y)) < 0) throw Error(Status::Internal, "lp: ray violates inequality");
    if (sgn(dot(c, y)) >= 0) throw Error(Status::Internal, "lp: ray does not improve objective");
    res.status = LPStatus::Unbounded;
    res.ray = std::move(y);
    return res;
  }
  Rational dual_value = 0;
  for (std::size_t k = 0; k < m; ++k)
    if (sgn(core.z[k]) != 0) dual_value += b[k] * core.z[k];
  for (std::size_t k = 0; k < m; ++k)
    if (dot(a[k], y) < b[k]) throw Error(Status::Internal, "lp: point failed verification");
  res.value = dot(c, y);
  if (res.value != dual_value) throw Error(Status::Internal, "lp: duality gap");
  res.status = LPStatus::Optimal;
  res.point = std::move(y);
  return res;
}

}  // namespace latmin
