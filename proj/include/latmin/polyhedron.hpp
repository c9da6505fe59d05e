#pragma once

// Incremental double description for pointed polyhedral cones
//   C = { z in Q^D : a_k . z >= 0 for every inserted row a_k }
// over the integers. Polyhedra {y : A y >= b} are handled through the
// homogenization z = (t, y), t >= 0, where generators with t > 0 are the
// vertices and generators with t = 0 the extreme rays.

#include <cstdint>
#include <cstddef>
#include <vector>

#include "latmin/exact.hpp"

namespace latmin {

class Bitset {
 public:
  void resize(std::size_t bits) { words_.resize((bits + 63) / 64, 0); }
  void set(std::size_t i) { words_[i / 64] |= (std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  std::size_t count() const;
  bool contains(const Bitset& other) const;  ///< other is a subset of *this
  static Bitset intersection(const Bitset& a, const Bitset& b);
  bool operator==(const Bitset&) const = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct Generator {
  IntVector z;       ///< primitive integer vector
  Bitset tight;      ///< rows with a . z == 0
  bool checked = false;  ///< scratch flag for callers
};

class ConeDD {
 public:
  /// Start from the first D independent rows (the initial generators are the
  /// columns of the inverse of that square system), then insert the others.
  /// Tight-set bit k always refers to rows()[k].
  ConeDD(std::size_t dim, const std::vector<IntVector>& initial_rows);

  /// Insert a row. Returns false if every generator already satisfies it.
  bool insert(const IntVector& row);

  std::size_t dim() const { return dim_; }
  const std::vector<Generator>& generators() const { return gens_; }
  std::vector<Generator>& generators() { return gens_; }
  const std::vector<IntVector>& rows() const { return rows_; }

  /// Dimension of the linear span of the generators.
  std::size_t cone_rank() const;

 private:
  bool cut(std::size_t idx);

  std::size_t dim_;
  std::vector<IntVector> rows_;
  std::vector<Generator> gens_;
};

/// Pick a maximal set of linearly independent rows, scanning in order.
std::vector<std::size_t> independent_rows(const std::vector<IntVector>& rows, std::size_t dim);

Integer dot(std::span<const Integer> a, std::span<const Integer> b);

}  // namespace latmin
