#include "latmin/polyhedron.hpp"

#include <bit>

namespace latmin {

std::size_t Bitset::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool Bitset::contains(const Bitset& other) const {
  for (std::size_t i = 0; i < other.words_.size(); ++i) {
    const std::uint64_t mine = i < words_.size() ? words_[i] : 0;
    if ((other.words_[i] & ~mine) != 0) return false;
  }
  return true;
}

Bitset Bitset::intersection(const Bitset& a, const Bitset& b) {
  Bitset r;
  r.words_.resize(std::max(a.words_.size(), b.words_.size()), 0);
  for (std::size_t i = 0; i < std::min(a.words_.size(), b.words_.size()); ++i) r.words_[i] = a.words_[i] & b.words_[i];
  return r;
}

Integer dot(std::span<const Integer> a, std::span<const Integer> b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

std::vector<std::size_t> independent_rows(const std::vector<IntVector>& rows, std::size_t dim) {
  std::vector<std::size_t> picked;
  std::vector<RatVector> basis;
  std::vector<std::size_t> pivots;
  for (std::size_t k = 0; k < rows.size() && picked.size() < dim; ++k) {
    RatVector r(rows[k].begin(), rows[k].end());
    for (std::size_t b = 0; b < basis.size(); ++b) {
      if (sgn(r[pivots[b]]) == 0) continue;
      const Rational f = r[pivots[b]] / basis[b][pivots[b]];
      for (std::size_t j = 0; j < dim; ++j) r[j] -= f * basis[b][j];
    }
    std::size_t p = 0;
    while (p < dim && sgn(r[p]) == 0) ++p;
    if (p == dim) continue;
    basis.push_back(std::move(r));
    pivots.push_back(p);
    picked.push_back(k);
  }
  return picked;
}

ConeDD::ConeDD(std::size_t dim, const std::vector<IntVector>& initial_rows) : dim_(dim), rows_(initial_rows) {
  for (const auto& r : rows_)
    if (r.size() != dim_) throw Error(Status::DimensionMismatch, "row width");
  const auto pick = independent_rows(rows_, dim_);
  if (pick.size() != dim_) throw Error(Status::InvalidArgument, "starting rows do not define a pointed cone");
  RatMatrix a(dim_, dim_);
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = 0; j < dim_; ++j) a(i, j) = Rational(rows_[pick[i]][j]);
  auto inv = inverse(a);
  if (!inv) throw Error(Status::Internal, "double description start system is singular");
  for (std::size_t c = 0; c < dim_; ++c) {
    RatVector col(dim_);
    for (std::size_t i = 0; i < dim_; ++i) col[i] = (*inv)(i, c);
    Generator g;
    g.z = primitive_integer(col);
    g.tight.resize(rows_.size());
    for (std::size_t i = 0; i < dim_; ++i)
      if (i != c) g.tight.set(pick[i]);
    gens_.push_back(std::move(g));
  }
  std::vector<bool> picked(rows_.size(), false);
  for (auto k : pick) picked[k] = true;
  for (std::size_t k = 0; k < rows_.size(); ++k)
    if (!picked[k]) cut(k);
}

std::size_t ConeDD::cone_rank() const {
  std::vector<IntVector> zs;
  zs.reserve(gens_.size());
  for (const auto& g : gens_) zs.push_back(g.z);
  return independent_rows(zs, dim_).size();
}

bool ConeDD::insert(const IntVector& row) {
  if (row.size() != dim_) throw Error(Status::DimensionMismatch, "row width");
  rows_.push_back(row);
  return cut(rows_.size() - 1);
}

bool ConeDD::cut(std::size_t idx) {
  const IntVector& row = rows_[idx];

  std::vector<int> side(gens_.size());
  std::vector<Integer> value(gens_.size());
  bool any_negative = false;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    value[i] = dot(row, gens_[i].z);
    side[i] = sgn(value[i]);
    if (side[i] < 0) any_negative = true;
  }
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    gens_[i].tight.resize(rows_.size());
    if (side[i] == 0) gens_[i].tight.set(idx);
  }
  if (!any_negative) return false;

  // the cone stays pointed, so adjacent rays share at least D-2 tight rows
  const std::size_t need = dim_ >= 2 ? dim_ - 2 : 0;
  std::vector<Generator> created;
  for (std::size_t p = 0; p < gens_.size(); ++p) {
    if (side[p] <= 0) continue;
    for (std::size_t n = 0; n < gens_.size(); ++n) {
      if (side[n] >= 0) continue;
      Bitset common = Bitset::intersection(gens_[p].tight, gens_[n].tight);
      if (common.count() < need) continue;
      bool adjacent = true;
      for (std::size_t r = 0; r < gens_.size() && adjacent; ++r) {
        if (r == p || r == n) continue;
        if (gens_[r].tight.contains(common)) adjacent = false;
      }
      if (!adjacent) continue;
      IntVector z(dim_);
      for (std::size_t j = 0; j < dim_; ++j) z[j] = value[p] * gens_[n].z[j] - value[n] * gens_[p].z[j];
      Generator g;
      g.z = primitive(z);
      g.tight = std::move(common);
      g.tight.resize(rows_.size());
      g.tight.set(idx);
      created.push_back(std::move(g));
    }
  }
  std::vector<Generator> kept;
  kept.reserve(gens_.size() + created.size());
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (side[i] >= 0) kept.push_back(std::move(gens_[i]));
  for (auto& g : created) kept.push_back(std::move(g));
  gens_ = std::move(kept);
  return true;
}

}  // namespace latmin
