#include "latmin/lattice.hpp"

#include <algorithm>

namespace latmin {

namespace {

Integer round_nearest(const Rational& q) {
  // floor(q + 1/2)
  Rational h = q + Rational(1, 2);
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return r;
}

Integer ceil_of(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

// Fincke-Pohst enumeration over the decomposition
//   Q(x) = sum_i q_ii (x_i + sum_{j>i} q_ij x_j)^2.
// Only one of each +-pair is visited: the highest nonzero coordinate is positive.
class Enumerator {
 public:
  enum class Mode { AtMost, Minimum };

  Enumerator(const IntMatrix& gram, Mode mode, Rational bound)
      : n_(gram.rows()), q_(to_rational(gram)), mode_(mode), bound_(std::move(bound)), x_(n_), partial_(n_ + 1) {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = i + 1; j < n_; ++j) {
        q_(j, i) = q_(i, j);
        q_(i, j) /= q_(i, i);
      }
      for (std::size_t k = i + 1; k < n_; ++k)
        for (std::size_t l = k; l < n_; ++l) q_(k, l) -= q_(k, i) * q_(i, l);
    }
  }

  void run() {
    if (n_ == 0) return;
    partial_[n_] = 0;
    descend(n_ - 1, true);
  }

  const Rational& bound() const { return bound_; }
  std::vector<std::pair<Rational, IntVector>>& found() { return found_; }

 private:
  bool admissible(std::size_t i, const Integer& t, const Rational& center, Rational& out) const {
    Rational d = Rational(t) - center;
    out = partial_[i + 1] + q_(i, i) * d * d;
    return out <= bound_;
  }

  void visit(std::size_t i, const Integer& t, const Rational& value, bool all_zero_above) {
    x_[i] = t;
    partial_[i] = value;
    const bool zero_here = all_zero_above && sgn(t) == 0;
    if (i == 0) {
      if (zero_here) return;
      if (mode_ == Mode::Minimum && value < bound_) {
        bound_ = value;
        found_.clear();
      }
      found_.emplace_back(value, x_);
      return;
    }
    descend(i - 1, zero_here);
  }

  void descend(std::size_t i, bool all_zero_above) {
    Rational center = 0;
    for (std::size_t j = i + 1; j < n_; ++j)
      if (sgn(x_[j]) != 0) center -= q_(i, j) * x_[j];
    Rational value;
    // upward from the nearest integer at or above the center
    Integer start = all_zero_above ? Integer(0) : ceil_of(center);
    for (Integer t = start;; ++t) {
      if (!admissible(i, t, center, value)) break;
      visit(i, t, value, all_zero_above);
    }
    if (all_zero_above) return;
    for (Integer t = start - 1;; --t) {
      if (!admissible(i, t, center, value)) break;
      visit(i, t, value, all_zero_above);
    }
    x_[i] = 0;
  }

  std::size_t n_;
  RatMatrix q_;
  Mode mode_;
  Rational bound_;
  IntVector x_;
  std::vector<Rational> partial_;
  std::vector<std::pair<Rational, IntVector>> found_;
};

IntVector transform_vector(const IntMatrix& u, const IntVector& w) {
  IntVector v(u.rows());
  for (std::size_t i = 0; i < u.rows(); ++i)
    for (std::size_t j = 0; j < u.cols(); ++j)
      if (sgn(w[j]) != 0) v[i] += u(i, j) * w[j];
  return v;
}

void check_square_pd_input(const IntMatrix& gram) {
  if (gram.rows() != gram.cols()) throw Error(Status::DimensionMismatch, "gram matrix must be square");
  if (gram.rows() > kMaxDimension) throw Error(Status::UnsupportedSize, "dimension exceeds 16");
}

}  // namespace

std::vector<IntVector> canonical_set(std::vector<IntVector> vs) {
  for (auto& v : vs) v = sign_normalized(std::move(v));
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

// ---------------------------------------------------------------------------

GramMatrix::GramMatrix(RatMatrix g) : g_(std::move(g)) {
  if (g_.rows() != g_.cols()) throw Error(Status::DimensionMismatch, "gram matrix must be square");
  if (g_.rows() == 0) throw Error(Status::InvalidArgument, "empty gram matrix");
  if (g_.rows() > kMaxDimension) throw Error(Status::UnsupportedSize, "dimension exceeds 16");
  if (!g_.is_symmetric()) throw Error(Status::NotSymmetric, "gram matrix is not symmetric");
  if (!pd_check(g_).positive_definite) throw Error(Status::NotPositiveDefinite, "gram matrix is not positive definite");
  auto [scale, gint] = clear_denominators(g_);
  scale_ = std::move(scale);
  gint_ = std::move(gint);
}

GramMatrix GramMatrix::from_scaled(const IntMatrix& numerators, const Integer& scale) {
  if (sgn(scale) <= 0) throw Error(Status::InvalidArgument, "scale must be positive");
  RatMatrix g(numerators.rows(), numerators.cols());
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < g.cols(); ++j) {
      g(i, j) = Rational(numerators(i, j), scale);
      g(i, j).canonicalize();
    }
  return GramMatrix(std::move(g));
}

Rational GramMatrix::operator[](std::span<const Integer> a) const { return quadratic_value(g_, a); }

Rational eval_form(const GramMatrix& g, std::span<const Integer> a) {
  if (a.size() != g.dim()) throw Error(Status::DimensionMismatch, "vector length differs from dimension");
  return g[a];
}

// ---------------------------------------------------------------------------

LllResult lll_reduce(const IntMatrix& gram) {
  check_square_pd_input(gram);
  const std::size_t n = gram.rows();
  LllResult r{IntMatrix::identity(n), gram};
  IntMatrix& g = r.reduced;
  IntMatrix& u = r.transform;
  if (n < 2) return r;

  std::vector<std::vector<Rational>> mu(n, std::vector<Rational>(n));
  std::vector<Rational> bstar(n);
  auto gso = [&](std::size_t upto) {
    for (std::size_t i = 0; i <= upto; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        Rational s = g(i, j);
        for (std::size_t l = 0; l < j; ++l) s -= mu[j][l] * mu[i][l] * bstar[l];
        mu[i][j] = s / bstar[j];
      }
      Rational b = g(i, i);
      for (std::size_t l = 0; l < i; ++l) b -= mu[i][l] * mu[i][l] * bstar[l];
      bstar[i] = b;
    }
  };
  const Rational delta(3, 4);
  std::size_t k = 1;
  while (k < n) {
    gso(k);
    for (std::size_t jj = k; jj-- > 0;) {
      Integer q = round_nearest(mu[k][jj]);
      if (sgn(q) == 0) continue;
      for (std::size_t i = 0; i < n; ++i) g(i, k) -= q * g(i, jj);
      for (std::size_t i = 0; i < n; ++i) g(k, i) -= q * g(jj, i);
      for (std::size_t i = 0; i < n; ++i) u(i, k) -= q * u(i, jj);
      for (std::size_t l = 0; l < jj; ++l) mu[k][l] -= q * mu[jj][l];
      mu[k][jj] -= q;
    }
    Rational bk = g(k, k);
    for (std::size_t l = 0; l < k; ++l) bk -= mu[k][l] * mu[k][l] * bstar[l];
    if (bk < (delta - mu[k][k - 1] * mu[k][k - 1]) * bstar[k - 1]) {
      g.swap_rows(k, k - 1);
      g.swap_cols(k, k - 1);
      u.swap_cols(k, k - 1);
      k = std::max<std::size_t>(k - 1, 1);
    } else {
      ++k;
    }
  }
  return r;
}

IntegralMinimum integral_minimum(const IntMatrix& gram) {
  check_square_pd_input(gram);
  auto red = lll_reduce(gram);
  Integer start = red.reduced(0, 0);
  for (std::size_t i = 1; i < gram.rows(); ++i) start = std::min(start, Integer(red.reduced(i, i)));
  Enumerator e(red.reduced, Enumerator::Mode::Minimum, Rational(start));
  e.run();
  IntegralMinimum out;
  out.min = e.bound().get_num();  // integral by construction
  for (auto& [value, w] : e.found())
    if (value == e.bound()) out.vectors.push_back(transform_vector(red.transform, w));
  out.vectors = canonical_set(std::move(out.vectors));
  return out;
}

ShortVectorSet minimal_vectors(const GramMatrix& g) {
  auto im = integral_minimum(g.scaled());
  ShortVectorSet s;
  s.dim = g.dim();
  s.min = Rational(im.min, g.scale());
  s.min.canonicalize();
  s.vectors = std::move(im.vectors);
  return s;
}

std::vector<IntVector> short_vectors(const GramMatrix& g, const Rational& bound) {
  auto red = lll_reduce(g.scaled());
  Enumerator e(red.reduced, Enumerator::Mode::AtMost, bound * g.scale());
  e.run();
  std::vector<IntVector> out;
  for (auto& [value, w] : e.found()) out.push_back(transform_vector(red.transform, w));
  return canonical_set(std::move(out));
}

bool well_rounded(const ShortVectorSet& s) {
  if (s.vectors.empty()) return false;
  IntMatrix m(s.vectors.size(), s.dim);
  for (std::size_t i = 0; i < s.vectors.size(); ++i)
    for (std::size_t j = 0; j < s.dim; ++j) m(i, j) = s.vectors[i][j];
  return rank(m) == s.dim;
}

bool well_rounded(const GramMatrix& g) { return well_rounded(minimal_vectors(g)); }

}  // namespace latmin
