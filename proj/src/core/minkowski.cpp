#include "latmin/minkowski.hpp"

#include <functional>

namespace latmin {

namespace {

IntMatrix rows_of(const std::vector<IntVector>& vs, std::size_t dim) {
  IntMatrix m(vs.size(), dim);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (vs[i].size() != dim) throw Error(Status::DimensionMismatch, "vector length differs from dimension");
    for (std::size_t j = 0; j < dim; ++j) m(i, j) = vs[i][j];
  }
  return m;
}

IntMatrix picked_rows(const ShortVectorSet& s, const std::vector<std::size_t>& pick) {
  IntMatrix m(pick.size(), s.dim);
  for (std::size_t i = 0; i < pick.size(); ++i) {
    if (pick[i] >= s.vectors.size()) throw Error(Status::InvalidArgument, "subset index out of range");
    for (std::size_t j = 0; j < s.dim; ++j) m(i, j) = s.vectors[pick[i]][j];
  }
  return m;
}

// Rows reduced against their predecessors; |det| of a full stack is the
// product of the pivot entries.
class Echelon {
 public:
  explicit Echelon(std::size_t dim) : dim_(dim) {}

  bool push(const IntVector& v) {
    RatVector r(v.begin(), v.end());
    for (std::size_t k = 0; k < rows_.size(); ++k) {
      const Rational& f = r[pivots_[k]];
      if (sgn(f) == 0) continue;
      const Rational c = f / rows_[k][pivots_[k]];
      for (std::size_t j = 0; j < dim_; ++j)
        if (sgn(rows_[k][j]) != 0) r[j] -= c * rows_[k][j];
    }
    std::size_t p = 0;
    while (p < dim_ && sgn(r[p]) == 0) ++p;
    if (p == dim_) return false;
    rows_.push_back(std::move(r));
    pivots_.push_back(p);
    return true;
  }

  void pop() {
    rows_.pop_back();
    pivots_.pop_back();
  }

  std::size_t size() const { return rows_.size(); }

  Integer abs_det() const {
    Rational d = 1;
    for (std::size_t k = 0; k < rows_.size(); ++k) d *= rows_[k][pivots_[k]];
    d = abs(d);
    if (d.get_den() != 1) throw Error(Status::Internal, "non-integral determinant");
    return d.get_num();
  }

 private:
  std::size_t dim_;
  std::vector<RatVector> rows_;
  std::vector<std::size_t> pivots_;
};

// Visit every independent n-subset in lexicographic order. The visitor
// returns false to stop the search.
void for_each_basis_subset(const ShortVectorSet& s,
                           const std::function<bool(const std::vector<std::size_t>&, const Echelon&)>& visit) {
  const std::size_t n = s.dim;
  Echelon ech(n);
  std::vector<std::size_t> pick;
  bool stop = false;
  std::function<void(std::size_t)> rec = [&](std::size_t from) {
    if (stop) return;
    if (pick.size() == n) {
      if (!visit(pick, ech)) stop = true;
      return;
    }
    for (std::size_t i = from; i + (n - pick.size()) <= s.vectors.size() && !stop; ++i) {
      if (!ech.push(s.vectors[i])) continue;
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
      ech.pop();
    }
  };
  rec(0);
}

bool is_primitive_system(const IntMatrix& m) {
  for (const auto& d : snf(m))
    if (d != 1) return false;
  return true;
}

}  // namespace

bool SublatticeReport::cyclic() const {
  std::size_t nontrivial = 0;
  for (const auto& d : divisors)
    if (d != 1) ++nontrivial;
  return nontrivial <= 1;
}

SublatticeReport vectors_index(const std::vector<IntVector>& vectors) {
  if (vectors.empty()) throw Error(Status::InvalidArgument, "empty vector system");
  const std::size_t n = vectors.front().size();
  if (vectors.size() != n) throw Error(Status::DimensionMismatch, "need exactly n vectors");
  IntMatrix m = rows_of(vectors, n);
  Integer det = determinant(m);
  if (sgn(det) == 0) throw Error(Status::DependentSubset, "vectors are linearly dependent");
  SublatticeReport r;
  r.index = abs(det);
  r.divisors = snf(m);
  return r;
}

SublatticeReport subset_index(const ShortVectorSet& s, const std::vector<std::size_t>& pick) {
  if (pick.size() != s.dim) throw Error(Status::DimensionMismatch, "subset must have n elements");
  IntMatrix m = picked_rows(s, pick);
  Integer det = determinant(m);
  if (sgn(det) == 0) throw Error(Status::DependentSubset, "picked vectors are linearly dependent");
  SublatticeReport r;
  r.subset = pick;
  r.index = abs(det);
  r.divisors = snf(m);
  return r;
}

SublatticeReport maximal_index(const ShortVectorSet& s) {
  if (!well_rounded(s)) throw Error(Status::NotWellRounded, "minimal vectors do not span");
  std::vector<std::size_t> best_pick;
  Integer best = 0;
  for_each_basis_subset(s, [&](const std::vector<std::size_t>& pick, const Echelon& ech) {
    Integer idx = ech.abs_det();
    if (idx > best) {
      best = idx;
      best_pick = pick;
    }
    return true;
  });
  return subset_index(s, best_pick);
}

bool generated_by_min(const ShortVectorSet& s) {
  if (s.vectors.empty()) return false;
  auto h = hnf(rows_of(s.vectors, s.dim));
  if (h.rank != s.dim) return false;
  for (std::size_t i = 0; i < s.dim; ++i) {
    std::size_t p = 0;
    while (sgn(h.H(i, p)) == 0) ++p;
    if (h.H(i, p) != 1) return false;
  }
  return true;
}

std::optional<std::vector<std::size_t>> find_minimal_basis(const ShortVectorSet& s) {
  const std::size_t n = s.dim;
  std::vector<std::size_t> pick;
  std::optional<std::vector<std::size_t>> found;
  // every partial system of a basis is primitive
  std::function<bool(std::size_t)> rec = [&](std::size_t from) -> bool {
    if (pick.size() == n) {
      found = pick;
      return true;
    }
    for (std::size_t i = from; i + (n - pick.size()) <= s.vectors.size(); ++i) {
      pick.push_back(i);
      if (is_primitive_system(picked_rows(s, pick)) && rec(i + 1)) return true;
      pick.pop_back();
    }
    return false;
  };
  if (n > 0) rec(0);
  return found;
}

QuotientCensus quotient_census(const ShortVectorSet& s) {
  if (!well_rounded(s)) throw Error(Status::NotWellRounded, "minimal vectors do not span");
  QuotientCensus census;
  for_each_basis_subset(s, [&](const std::vector<std::size_t>& pick, const Echelon&) {
    ++census[snf(picked_rows(s, pick))];
    return true;
  });
  return census;
}

AnalysisReport analyze(const GramMatrix& g, const AnalysisOptions& opt) {
  AnalysisReport r;
  r.dim = g.dim();
  r.vectors = minimal_vectors(g);
  r.min = r.vectors.min;
  r.s = r.vectors.pairs();
  r.well_rounded = well_rounded(r.vectors);
  r.generated_by_min = generated_by_min(r.vectors);
  if (r.well_rounded) {
    r.max_index = maximal_index(r.vectors);
    r.minimal_basis = find_minimal_basis(r.vectors);
    if (opt.census) r.census = quotient_census(r.vectors);
  }
  return r;
}

}  // namespace latmin
