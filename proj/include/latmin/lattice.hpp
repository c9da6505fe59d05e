#pragma once

// Lattices given by Gram matrices: form evaluation, minimum, minimal vectors.

#include <cstddef>
#include <span>
#include <vector>

#include "latmin/exact.hpp"

namespace latmin {

inline constexpr std::size_t kMaxDimension = 16;

/// Symmetric positive definite rational matrix together with its smallest
/// integral multiple. Construction rejects asymmetric, non-PD and oversized input.
class GramMatrix {
 public:
  explicit GramMatrix(RatMatrix g);
  static GramMatrix from_scaled(const IntMatrix& numerators, const Integer& scale);

  std::size_t dim() const { return g_.rows(); }
  const RatMatrix& rational() const { return g_; }
  const Integer& scale() const { return scale_; }
  const IntMatrix& scaled() const { return gint_; }

  Rational operator[](std::span<const Integer> a) const;

 private:
  RatMatrix g_;
  Integer scale_;
  IntMatrix gint_;
};

/// Minimal vectors of a lattice, one representative per +-pair.
/// Representatives have their first nonzero coordinate positive and are
/// sorted lexicographically.
struct ShortVectorSet {
  std::size_t dim = 0;
  Rational min;
  std::vector<IntVector> vectors;

  std::size_t pairs() const { return vectors.size(); }
};

Rational eval_form(const GramMatrix& g, std::span<const Integer> a);

ShortVectorSet minimal_vectors(const GramMatrix& g);

/// All nonzero v (one per +-pair) with G[v] <= bound, canonically ordered.
std::vector<IntVector> short_vectors(const GramMatrix& g, const Rational& bound);

bool well_rounded(const ShortVectorSet& s);
bool well_rounded(const GramMatrix& g);

/// LLL reduction (delta = 3/4) of an integral positive definite Gram matrix.
/// The columns of `transform` express the reduced basis in the input basis;
/// reduced = transform^T * gram * transform.
struct LllResult {
  IntMatrix transform;
  IntMatrix reduced;
};
LllResult lll_reduce(const IntMatrix& gram);

/// Minimum and minimal vectors of an integral PD Gram matrix, in input
/// coordinates. Shared by GramMatrix and by callers that already hold an
/// integral form.
struct IntegralMinimum {
  Integer min;
  std::vector<IntVector> vectors;
};
IntegralMinimum integral_minimum(const IntMatrix& gram);

std::vector<IntVector> canonical_set(std::vector<IntVector> vs);

}  // namespace latmin
