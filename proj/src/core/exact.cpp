#include "latmin/exact.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace latmin {

const char* status_name(Status s) noexcept {
  switch (s) {
    case Status::Ok: return "ok";
    case Status::InvalidArgument: return "invalid argument";
    case Status::DimensionMismatch: return "dimension mismatch";
    case Status::NotPositiveDefinite: return "not positive definite";
    case Status::NotSymmetric: return "not symmetric";
    case Status::UnsupportedSize: return "unsupported size";
    case Status::DependentSubset: return "dependent subset";
    case Status::NotWellRounded: return "not well rounded";
    case Status::NoUnitCoefficient: return "no unit coefficient";
    case Status::InconsistentWords: return "inconsistent words";
    case Status::IterationLimitExceeded: return "iteration limit exceeded";
    case Status::ParseError: return "parse error";
    case Status::IoError: return "i/o error";
    case Status::GroupTooLarge: return "group too large";
    case Status::Internal: return "internal error";
  }
  return "unknown";
}

std::string to_string(const Integer& z) { return z.get_str(); }
std::string to_string(const Rational& q) { return q.get_str(); }

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

IntMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  if (rows.empty()) return {};
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != m.cols()) throw Error(Status::DimensionMismatch, "ragged rows");
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntVector int_vector(std::span<const long> v) { return {v.begin(), v.end()}; }
IntVector int_vector(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::pair<Integer, IntMatrix> clear_denominators(const RatMatrix& m) {
  Integer scale = 1;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), m(i, j).get_den_mpz_t());
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j).get_num() * (scale / m(i, j).get_den());
  return {scale, out};
}

IntVector primitive(std::span<const Integer> v) {
  Integer g = 0;
  for (const auto& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  IntVector out(v.begin(), v.end());
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

IntVector primitive_integer(std::span<const Rational> v) {
  Integer den = 1;
  for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i].get_num() * (den / v[i].get_den());
  return primitive(out);
}

IntVector sign_normalized(IntVector v) {
  for (const auto& x : v) {
    if (sgn(x) == 0) continue;
    if (sgn(x) < 0)
      for (auto& y : v) y = -y;
    break;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Hermite normal form

namespace {

// Replace rows (r, i) of both matrices by the unimodular combination
//   row_r' = x*row_r + y*row_i,  row_i' = -(b/g)*row_r + (a/g)*row_i.
void combine_rows(IntMatrix& h, IntMatrix& u, std::size_t r, std::size_t i, const Integer& x, const Integer& y,
                  const Integer& p, const Integer& q) {
  for (IntMatrix* m : {&h, &u}) {
    for (std::size_t j = 0; j < m->cols(); ++j) {
      Integer a = (*m)(r, j);
      Integer b = (*m)(i, j);
      (*m)(r, j) = x * a + y * b;
      (*m)(i, j) = p * a + q * b;
    }
  }
}

void add_row_multiple(IntMatrix& m, std::size_t dst, std::size_t src, const Integer& f) {
  if (sgn(f) == 0) return;
  for (std::size_t j = 0; j < m.cols(); ++j) m(dst, j) -= f * m(src, j);
}

}  // namespace

HermiteForm hnf(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.rows()), 0};
  IntMatrix& h = out.H;
  IntMatrix& u = out.U;
  std::size_t r = 0;
  for (std::size_t c = 0; c < h.cols() && r < h.rows(); ++c) {
    // pull the smallest nonzero entry up first; keeps the gcd steps short
    std::size_t best = h.rows();
    for (std::size_t i = r; i < h.rows(); ++i)
      if (sgn(h(i, c)) != 0 && (best == h.rows() || abs(h(i, c)) < abs(h(best, c)))) best = i;
    if (best == h.rows()) continue;
    h.swap_rows(r, best);
    u.swap_rows(r, best);
    for (std::size_t i = r + 1; i < h.rows(); ++i) {
      if (sgn(h(i, c)) == 0) continue;
      const Integer a = h(r, c);
      const Integer b = h(i, c);
      if (mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
        Integer f = b / a;
        add_row_multiple(h, i, r, f);
        add_row_multiple(u, i, r, f);
        continue;
      }
      Integer g, x, y;
      mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer p = -(b / g);
      Integer q = a / g;
      combine_rows(h, u, r, i, x, y, p, q);
    }
    if (sgn(h(r, c)) < 0) {
      for (std::size_t j = 0; j < h.cols(); ++j) h(r, j) = -h(r, j);
      for (std::size_t j = 0; j < u.cols(); ++j) u(r, j) = -u(r, j);
    }
    for (std::size_t k = 0; k < r; ++k) {
      Integer f;
      mpz_fdiv_q(f.get_mpz_t(), h(k, c).get_mpz_t(), h(r, c).get_mpz_t());
      add_row_multiple(h, k, r, f);
      add_row_multiple(u, k, r, f);
    }
    ++r;
  }
  out.rank = r;
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form (divisors only)

std::vector<Integer> snf(const IntMatrix& m) {
  IntMatrix a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  const std::size_t k = std::min(rows, cols);
  std::vector<Integer> diag;
  for (std::size_t t = 0; t < k; ++t) {
    auto place_min = [&]() -> bool {
      std::size_t bi = rows, bj = cols;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(a(i, j)) != 0 && (bi == rows || abs(a(i, j)) < abs(a(bi, bj)))) {
            bi = i;
            bj = j;
          }
      if (bi == rows) return false;
      a.swap_rows(t, bi);
      a.swap_cols(t, bj);
      return true;
    };
    if (!place_min()) break;
    for (;;) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (sgn(a(i, t)) == 0) continue;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), a(i, t).get_mpz_t(), a(t, t).get_mpz_t());
        add_row_multiple(a, i, t, f);
        if (sgn(a(i, t)) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (sgn(a(t, j)) == 0) continue;
        Integer f;
        mpz_fdiv_q(f.get_mpz_t(), a(t, j).get_mpz_t(), a(t, t).get_mpz_t());
        for (std::size_t i = 0; i < rows; ++i) a(i, j) -= f * a(i, t);
        if (sgn(a(t, j)) != 0) dirty = true;
      }
      if (dirty) {
        // a smaller remainder now sits in row/column t; bring it to the pivot
        std::size_t bi = t, bj = t;
        for (std::size_t i = t; i < rows; ++i)
          if (sgn(a(i, t)) != 0 && abs(a(i, t)) < abs(a(bi, bj))) bi = i, bj = t;
        for (std::size_t j = t; j < cols; ++j)
          if (sgn(a(t, j)) != 0 && abs(a(t, j)) < abs(a(bi, bj))) bi = t, bj = j;
        a.swap_rows(t, bi);
        a.swap_cols(t, bj);
        continue;
      }
      // divisibility of the remaining block
      bool fixed = false;
      for (std::size_t i = t + 1; i < rows && !fixed; ++i)
        for (std::size_t j = t + 1; j < cols && !fixed; ++j)
          if (!mpz_divisible_p(a(i, j).get_mpz_t(), a(t, t).get_mpz_t())) {
            for (std::size_t c = 0; c < cols; ++c) a(t, c) += a(i, c);
            fixed = true;
          }
      if (!fixed) break;
    }
    diag.push_back(abs(a(t, t)));
  }
  while (diag.size() < k) diag.emplace_back(0);
  return diag;
}

// ---------------------------------------------------------------------------
// Determinants, rank, kernels

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Status::DimensionMismatch, "determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(a(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(a(p, k)) == 0) ++p;
      if (p == n) return 0;
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && sgn(a(p, c)) == 0) ++p;
    if (p == a.rows()) continue;
    a.swap_rows(r, p);
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j) a(i, j) -= f * a(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

Rational determinant(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Status::DimensionMismatch, "determinant of non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      a.swap_rows(p, c);
      det = -det;
    }
    det *= a(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(a(i, c)) == 0) continue;
      const Rational f = a(i, c) / a(c, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) -= f * a(c, j);
    }
  }
  return det;
}

std::size_t rank(const RatMatrix& m) {
  RatMatrix a = m;
  return rref(a).size();
}

std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

RatMatrix kernel(const RatMatrix& m) {
  RatMatrix a = m;
  auto pivots = rref(a);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  RatMatrix k(m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], f) = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) k(pivots[r], f) = -a(r, free_cols[f]);
  }
  return k;
}

RatMatrix left_kernel(const RatMatrix& m) { return kernel(m.transposed()).transposed(); }

std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw Error(Status::DimensionMismatch, "solve: rhs size");
  RatMatrix a(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) a(i, j) = m(i, j);
    a(i, m.cols()) = b[i];
  }
  auto pivots = rref(a);
  if (!pivots.empty() && pivots.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = a(r, m.cols());
  return x;
}

std::optional<RatMatrix> inverse(const RatMatrix& m) {
  if (m.rows() != m.cols()) throw Error(Status::DimensionMismatch, "inverse of non-square matrix");
  const std::size_t n = m.rows();
  RatMatrix a(n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a(i, j) = m(i, j);
    a(i, n + i) = 1;
  }
  auto pivots = rref(a);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  RatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = a(i, n + j);
  return inv;
}

// ---------------------------------------------------------------------------
// Quadratic forms

namespace {

template <class V>
Rational form_value(const RatMatrix& g, const V& v) {
  if (g.rows() != v.size() || g.cols() != v.size()) throw Error(Status::DimensionMismatch, "form evaluation");
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Rational row = g(i, i) * v[i];
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (sgn(v[j]) != 0) row += 2 * g(i, j) * v[j];
    s += row * v[i];
  }
  return s;
}

RatVector mat_vec(const RatMatrix& g, const RatVector& v) {
  RatVector out(g.rows());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j)
      if (sgn(v[j]) != 0) out[i] += g(i, j) * v[j];
  return out;
}

Rational dot(const RatVector& a, const RatVector& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

std::vector<RatVector> unit_vectors(std::size_t n) {
  std::vector<RatVector> w(n, RatVector(n));
  for (std::size_t i = 0; i < n; ++i) w[i][i] = 1;
  return w;
}

}  // namespace

Rational quadratic_value(const RatMatrix& g, std::span<const Rational> v) { return form_value(g, v); }
Rational quadratic_value(const RatMatrix& g, std::span<const Integer> v) { return form_value(g, v); }

Integer quadratic_value(const IntMatrix& g, std::span<const Integer> v) {
  if (g.rows() != v.size() || g.cols() != v.size()) throw Error(Status::DimensionMismatch, "form evaluation");
  Integer s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) == 0) continue;
    Integer row = g(i, i) * v[i];
    for (std::size_t j = i + 1; j < v.size(); ++j)
      if (sgn(v[j]) != 0) row += 2 * g(i, j) * v[j];
    s += row * v[i];
  }
  return s;
}

PdResult pd_check(const RatMatrix& g) {
  if (!g.is_symmetric()) throw Error(Status::NotSymmetric, "pd_check: matrix is not symmetric");
  const std::size_t n = g.rows();
  auto w = unit_vectors(n);
  for (std::size_t k = 0; k < n; ++k) {
    RatVector gw = mat_vec(g, w[k]);
    Rational p = dot(w[k], gw);
    if (sgn(p) <= 0) return {false, w[k], p};
    for (std::size_t j = k + 1; j < n; ++j) {
      Rational c = dot(gw, w[j]);
      if (sgn(c) == 0) continue;
      c /= p;
      for (std::size_t t = 0; t < n; ++t) w[j][t] -= c * w[k][t];
    }
  }
  return {true, {}, 0};
}

std::optional<RatVector> negative_vector(const RatMatrix& g) {
  if (!g.is_symmetric()) throw Error(Status::NotSymmetric, "negative_vector: matrix is not symmetric");
  const std::size_t n = g.rows();
  auto w = unit_vectors(n);
  for (std::size_t k = 0; k < n; ++k) {
    RatVector gw = mat_vec(g, w[k]);
    Rational p = dot(w[k], gw);
    if (sgn(p) < 0) return w[k];
    if (sgn(p) == 0) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Rational b = dot(gw, w[j]);
        if (sgn(b) == 0) continue;
        // (alpha w_k + w_j) has value 2 alpha b + G[w_j] = -1
        Rational c = dot(w[j], mat_vec(g, w[j]));
        Rational alpha = -(c + 1) / (2 * b);
        RatVector v(n);
        for (std::size_t t = 0; t < n; ++t) v[t] = alpha * w[k][t] + w[j][t];
        return v;
      }
      continue;
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      Rational c = dot(gw, w[j]);
      if (sgn(c) == 0) continue;
      c /= p;
      for (std::size_t t = 0; t < n; ++t) w[j][t] -= c * w[k][t];
    }
  }
  return std::nullopt;
}

}  // namespace latmin
