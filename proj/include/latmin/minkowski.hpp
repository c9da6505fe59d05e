#pragma once

// Minkowskian sublattices: indices of n-subsets of minimal vectors, the
// maximal index, generation by minimal vectors, and minimal-basis search.

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "latmin/lattice.hpp"

namespace latmin {

struct SublatticeReport {
  std::vector<std::size_t> subset;  ///< indices into ShortVectorSet::vectors
  Integer index;
  std::vector<Integer> divisors;

  bool cyclic() const;
};

/// Index and quotient type of the sublattice spanned by the picked vectors.
/// Throws DependentSubset when the picked vectors do not span.
SublatticeReport subset_index(const ShortVectorSet& s, const std::vector<std::size_t>& pick);

/// Same, for explicit coordinate vectors.
SublatticeReport vectors_index(const std::vector<IntVector>& vectors);

/// Largest index over independent n-subsets, with the lexicographically first
/// subset attaining it. Throws NotWellRounded.
SublatticeReport maximal_index(const ShortVectorSet& s);

/// True iff the minimal vectors generate Z^n.
bool generated_by_min(const ShortVectorSet& s);

/// Lexicographically first n-subset forming a basis of Z^n, if any.
std::optional<std::vector<std::size_t>> find_minimal_basis(const ShortVectorSet& s);

/// Divisor list of every independent n-subset, keyed by the divisor list.
using QuotientCensus = std::map<std::vector<Integer>, std::size_t>;
QuotientCensus quotient_census(const ShortVectorSet& s);

struct AnalysisOptions {
  bool census = false;
};

struct AnalysisReport {
  std::size_t dim = 0;
  Rational min;
  std::size_t s = 0;
  bool well_rounded = false;
  bool generated_by_min = false;
  std::optional<SublatticeReport> max_index;  ///< present when well rounded
  std::optional<std::vector<std::size_t>> minimal_basis;
  std::optional<QuotientCensus> census;
  ShortVectorSet vectors;
};

AnalysisReport analyze(const GramMatrix& g, const AnalysisOptions& opt = {});

}  // namespace latmin
