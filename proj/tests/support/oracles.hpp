#pragma once

// Slow, obviously-correct reference implementations used to check the
// library: cofactor determinants, determinantal divisors, box enumeration.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "latmin/exact.hpp"
#include "latmin/lattice.hpp"

namespace oracle {

using latmin::Integer;
using latmin::IntMatrix;
using latmin::IntVector;
using latmin::Rational;
using latmin::RatMatrix;

template <class T>
T cofactor_det(const latmin::Matrix<T>& m) {
  const std::size_t n = m.rows();
  if (n == 0) return T(1);
  if (n == 1) return m(0, 0);
  T sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (sgn(m(0, c)) == 0) continue;
    latmin::Matrix<T> minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, k = 0; j < n; ++j)
        if (j != c) minor(i - 1, k++) = m(i, j);
    T term = m(0, c) * cofactor_det(minor);
    sum += (c % 2 == 0) ? term : T(-term);
  }
  return sum;
}

// adjugate / det
inline RatMatrix cofactor_inverse(const RatMatrix& m) {
  const std::size_t n = m.rows();
  const Rational det = cofactor_det(m);
  RatMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      RatMatrix minor(n - 1, n - 1);
      for (std::size_t i = 0, a = 0; i < n; ++i) {
        if (i == r) continue;
        for (std::size_t j = 0, b = 0; j < n; ++j)
          if (j != c) minor(a, b++) = m(i, j);
        ++a;
      }
      Rational cof = cofactor_det(minor);
      if ((r + c) % 2) cof = -cof;
      inv(c, r) = cof / det;
    }
  return inv;
}

inline void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> pick(k);
  std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t from) {
    if (pos == k) {
      f(pick);
      return;
    }
    for (std::size_t i = from; i + (k - pos) <= n; ++i) {
      pick[pos] = i;
      rec(pos + 1, i + 1);
    }
  };
  rec(0, 0);
}

// d_k = gcd of k x k minors; elementary divisors are d_k / d_{k-1}
inline std::vector<Integer> determinantal_divisors(const IntMatrix& m) {
  const std::size_t r = std::min(m.rows(), m.cols());
  std::vector<Integer> dk(r + 1, 0);
  dk[0] = 1;
  for (std::size_t k = 1; k <= r; ++k) {
    Integer g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix sub(k, k);
        for (std::size_t i = 0; i < k; ++i)
          for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), Integer(cofactor_det(sub)).get_mpz_t());
      });
    });
    dk[k] = g;
  }
  std::vector<Integer> out;
  for (std::size_t k = 1; k <= r; ++k) out.push_back(sgn(dk[k]) == 0 ? Integer(0) : Integer(dk[k] / dk[k - 1]));
  return out;
}

inline bool leading_minors_positive(const RatMatrix& g) {
  for (std::size_t k = 1; k <= g.rows(); ++k) {
    RatMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = g(i, j);
    if (sgn(cofactor_det(sub)) <= 0) return false;
  }
  return true;
}

inline Rational form(const RatMatrix& g, const IntVector& v) {
  Rational s = 0;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) s += g(i, j) * v[i] * v[j];
  return s;
}

// |v_i| <= sqrt(bound * (G^-1)_ii) for every v with G[v] <= bound
inline std::vector<long> box_radius(const RatMatrix& g, const Rational& bound) {
  const RatMatrix inv = cofactor_inverse(g);
  std::vector<long> r;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Rational q = bound * inv(i, i);
    Integer fl = q.get_num() / q.get_den();
    Integer s = sqrt(fl);
    while ((s + 1) * (s + 1) <= fl) ++s;
    r.push_back(s.get_si());
  }
  return r;
}

struct NaiveMinimum {
  Rational min;
  std::vector<IntVector> vectors;  ///< first nonzero positive, sorted
};

// minimum is at most the smallest diagonal entry
inline NaiveMinimum box_minimum(const RatMatrix& g) {
  const std::size_t n = g.rows();
  Rational bound = g(0, 0);
  for (std::size_t i = 1; i < n; ++i) bound = std::min(bound, g(i, i));
  const auto rad = box_radius(g, bound);
  NaiveMinimum out;
  bool have = false;
  IntVector v(n);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == n) {
      auto nz = std::find_if(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; });
      if (nz == v.end() || sgn(*nz) < 0) return;
      const Rational q = form(g, v);
      if (!have || q < out.min) {
        have = true;
        out.min = q;
        out.vectors.clear();
      }
      if (q == out.min) out.vectors.push_back(v);
      return;
    }
    for (long x = -rad[i]; x <= rad[i]; ++x) {
      v[i] = x;
      rec(i + 1);
    }
  };
  rec(0);
  std::sort(out.vectors.begin(), out.vectors.end());
  return out;
}

inline std::uint64_t box_size(const std::vector<long>& rad) {
  std::uint64_t p = 1;
  for (long r : rad) p *= static_cast<std::uint64_t>(2 * r + 1);
  return p;
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

}  // namespace oracle
