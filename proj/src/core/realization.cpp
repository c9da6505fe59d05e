#include "latmin/realization.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

namespace latmin {

namespace {

std::size_t pair_index(std::size_t n, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  return i * n - i * (i + 1) / 2 + j;
}

// Union-find with a sign relative to the parent.
struct SignedUnionFind {
  std::vector<std::size_t> parent;
  std::vector<int> sign;  // value(x) = sign(x) * value(parent(x))
  std::vector<bool> zero;

  explicit SignedUnionFind(std::size_t m) : parent(m), sign(m, 1), zero(m, false) {
    std::iota(parent.begin(), parent.end(), 0);
  }

  std::pair<std::size_t, int> find(std::size_t x) {
    if (parent[x] == x) return {x, 1};
    auto [r, s] = find(parent[x]);
    parent[x] = r;
    sign[x] *= s;
    return {r, sign[x]};
  }

  // impose value(a) = s * value(b)
  void unite(std::size_t a, std::size_t b, int s) {
    auto [ra, sa] = find(a);
    auto [rb, sb] = find(b);
    if (ra == rb) {
      if (sa != s * sb) zero[ra] = true;
      return;
    }
    parent[ra] = rb;
    sign[ra] = sa * s * sb;
    if (zero[ra]) zero[rb] = true;
  }
};

constexpr std::size_t kNoRow = static_cast<std::size_t>(-1);

// Nonzero {-1,0,1} vectors with first nonzero entry positive. Beyond
// dimension 10 only those with at most two nonzero entries.
std::vector<IntVector> ternary_vectors(std::size_t n) {
  std::vector<IntVector> out;
  if (n > 10) {
    for (std::size_t i = 0; i < n; ++i) {
      IntVector u(n);
      u[i] = 1;
      out.push_back(u);
      for (std::size_t j = i + 1; j < n; ++j)
        for (int s : {1, -1}) {
          u[j] = s;
          out.push_back(u);
          u[j] = 0;
        }
    }
    return out;
  }
  IntVector t(n, -1);
  while (true) {
    std::size_t first = 0;
    while (first < n && sgn(t[first]) == 0) ++first;
    if (first < n && t[first] > 0) out.push_back(t);
    std::size_t k = 0;
    while (k < n && t[k] == 1) t[k++] = -1;
    if (k == n) break;
    t[k] += 1;
  }
  return out;
}

// The affine slice {x : l_e(x) = m for every equality vector e} of the
// invariant space, parametrized as x = x0 + N y.
struct Slice {
  RatVector x0;
  std::vector<IntVector> n;  // columns of N, primitive integral
};

class Engine {
 public:
  Engine(const RealizationProblem& p, const RealizationOptions& opt)
      : p_(p), opt_(opt), inv_(invariant_subspace(p.n(), p.group)), equalities_(p.equality_vectors()),
        small_vectors_(ternary_vectors(p.n())) {}

  RealizationResult run();

 private:
  bool build_slice();
  std::optional<IntVector> homogenized(const IntVector& v) const;
  bool add_cut(const IntVector& v);
  std::vector<std::size_t> sync_rows();
  RatVector point_of(const IntVector& z) const;
  RatVector point_of_y(std::span<const Rational> y) const;
  bool separate(const RatVector& x);
  void ray_cut(const RatVector& base, std::span<const Rational> y);
  void count_iteration(RealizationResult& r, std::size_t vertices, std::size_t rays);

  bool lp_phase(RealizationResult& r);
  void find_implied_equalities();
  std::vector<std::size_t> irredundant_rows() const;
  bool dd_phase(RealizationResult& r, std::optional<ConeDD>& cone);

  void finish_infeasible(RealizationResult& r) const;
  void finish_feasible(RealizationResult& r, const ConeDD& cone) const;

  const RealizationProblem& p_;
  RealizationOptions opt_;
  InvariantBasis inv_;
  std::vector<IntVector> equalities_;
  Slice slice_;

  std::vector<IntVector> cuts_;  // canonical cut vectors in discovery order
  std::set<IntVector> seen_;
  // rows of the current slice: row k is (l.x0 - m, l.N) made primitive
  std::vector<IntVector> rows_;
  std::vector<std::size_t> cut_row_;  // per cut: index into rows_, or kNoRow
  std::map<IntVector, std::size_t> row_index_;
  std::vector<std::size_t> row_to_cone_;  // per row: its index among the cone rows

  std::vector<RatVector> valid_points_;  // points of P met on the way (x-space)
  std::vector<IntVector> small_vectors_;  // short candidates for non-PD points
};

bool Engine::build_slice() {
  const std::size_t k = inv_.dim();
  RatMatrix a(equalities_.size(), k);
  RatVector b(equalities_.size(), p_.min_value);
  for (std::size_t i = 0; i < equalities_.size(); ++i) {
    IntVector f = inv_.functional(equalities_[i]);
    for (std::size_t j = 0; j < k; ++j) a(i, j) = Rational(f[j]);
  }
  auto x0 = solve(a, b);
  if (!x0) return false;
  slice_.x0 = *x0;
  slice_.n.clear();
  RatMatrix ker = kernel(a);
  for (std::size_t c = 0; c < ker.cols(); ++c) {
    RatVector col(k);
    for (std::size_t i = 0; i < k; ++i) col[i] = ker(i, c);
    slice_.n.push_back(primitive_integer(col));
  }
  rows_.clear();
  cut_row_.clear();
  row_index_.clear();
  return true;
}

std::optional<IntVector> Engine::homogenized(const IntVector& v) const {
  const IntVector f = inv_.functional(v);
  const std::size_t d = slice_.n.size();
  RatVector row(d + 1);
  Rational c = -p_.min_value;
  for (std::size_t j = 0; j < f.size(); ++j)
    if (sgn(f[j]) != 0) c += f[j] * slice_.x0[j];
  row[0] = c;
  bool nonzero = sgn(c) != 0;
  for (std::size_t i = 0; i < d; ++i) {
    Integer s = 0;
    for (std::size_t j = 0; j < f.size(); ++j) s += f[j] * slice_.n[i][j];
    row[i + 1] = Rational(s);
    if (sgn(s) != 0) nonzero = true;
  }
  if (!nonzero) return std::nullopt;
  return primitive_integer(row);
}

bool Engine::add_cut(const IntVector& v) {
  IntVector c = sign_normalized(primitive(v));
  if (!seen_.insert(c).second) return false;
  cuts_.push_back(std::move(c));
  return true;
}

// Give every cut a row of the current slice; returns the rows that are new.
std::vector<std::size_t> Engine::sync_rows() {
  std::vector<std::size_t> fresh;
  while (cut_row_.size() < cuts_.size()) {
    auto row = homogenized(cuts_[cut_row_.size()]);
    if (!row) {
      cut_row_.push_back(kNoRow);
      continue;
    }
    auto [it, inserted] = row_index_.emplace(*row, rows_.size());
    if (inserted) {
      rows_.push_back(*row);
      fresh.push_back(it->second);
    }
    cut_row_.push_back(it->second);
  }
  return fresh;
}

RatVector Engine::point_of_y(std::span<const Rational> y) const {
  RatVector x = slice_.x0;
  for (std::size_t i = 0; i < slice_.n.size(); ++i) {
    if (sgn(y[i]) == 0) continue;
    for (std::size_t j = 0; j < x.size(); ++j)
      if (sgn(slice_.n[i][j]) != 0) x[j] += y[i] * slice_.n[i][j];
  }
  return x;
}

RatVector Engine::point_of(const IntVector& z) const {
  RatVector y(slice_.n.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    y[i] = Rational(z[i + 1], z[0]);
    y[i].canonicalize();
  }
  return point_of_y(y);
}

// Cuts violated at x; true if x lies in the Ryshkov polyhedron.
bool Engine::separate(const RatVector& x) {
  RatMatrix g = inv_.compose(x);
  PdResult pd = pd_check(g);
  if (pd.positive_definite) {
    ShortVectorSet s = minimal_vectors(GramMatrix(g));
    if (s.min >= p_.min_value) return true;
    for (const auto& v : s.vectors) add_cut(v);
    return false;
  }
  // Elimination witnesses tend to be long; prefer short violated vectors.
  auto [scale, gi] = clear_denominators(g);
  const Integer limit = p_.min_value.get_num() * scale;  // G[v] < m  <=>  Gi[v] * den(m) < limit
  const Integer& den = p_.min_value.get_den();
  std::vector<std::pair<Integer, const IntVector*>> hits;
  for (const auto& v : small_vectors_) {
    Integer val = quadratic_value(gi, v) * den;
    if (val < limit) hits.emplace_back(val, &v);
  }
  if (!hits.empty()) {
    const std::size_t keep = std::min<std::size_t>(hits.size(), 2 * p_.n());
    std::partial_sort(hits.begin(), hits.begin() + keep, hits.end(),
                      [](const auto& a, const auto& b) { return a.first < b.first || (a.first == b.first && *a.second < *b.second); });
    for (std::size_t k = 0; k < keep; ++k) add_cut(*hits[k].second);
    return false;
  }
  // rounded multiples of the witness direction
  Rational top = 0;
  for (const auto& q : pd.witness) top = std::max(top, Rational(abs(q)));
  for (long k = 1; k <= 64; ++k) {
    IntVector w(pd.witness.size());
    bool nz = false;
    for (std::size_t i = 0; i < w.size(); ++i) {
      Rational q = pd.witness[i] * k / top + Rational(1, 2);
      w[i] = q.get_num() / q.get_den();
      if (sgn(q) < 0 && q.get_num() % q.get_den() != 0) w[i] -= 1;  // floor
      nz = nz || sgn(w[i]) != 0;
    }
    if (nz && quadratic_value(gi, w) * den < limit) {
      add_cut(w);
      return false;
    }
  }
  add_cut(primitive_integer(pd.witness));
  return false;
}

// Walk from a point of P along a recession direction until leaving the
// Ryshkov polyhedron; the cut found there has R[v] < 0.
void Engine::ray_cut(const RatVector& base, std::span<const Rational> y) {
  RatVector dir(inv_.dim());
  for (std::size_t i = 0; i < slice_.n.size(); ++i)
    for (std::size_t j = 0; j < dir.size(); ++j) dir[j] += y[i] * slice_.n[i][j];
  for (Rational t = 1;; t *= 2) {
    RatVector x = base;
    for (std::size_t j = 0; j < x.size(); ++j) x[j] += t * dir[j];
    if (!separate(x)) return;
  }
}

void Engine::count_iteration(RealizationResult& r, std::size_t vertices, std::size_t rays) {
  if (r.iterations >= opt_.iteration_cap) {
    r.cuts = cuts_;
    r.status = RealizationStatus::Incomplete;
    throw IterationLimitExceeded("cutting loop reached the iteration cap", std::move(r));
  }
  ++r.iterations;
  if (opt_.progress) opt_.progress({r.iterations, cuts_.size(), vertices, rays});
}

// Cutting planes driven by LP optima in a fixed set of directions, until all
// of them are points of the Ryshkov polyhedron. A temporary trace bound keeps
// the LPs bounded; it is raised whenever it touches a point of P.
bool Engine::lp_phase(RealizationResult& r) {
  const std::size_t d = slice_.n.size();
  if (d == 0) return true;
  std::vector<RatVector> directions;
  for (std::size_t i = 0; i < d; ++i)
    for (int s : {1, -1}) {
      RatVector c(d);
      c[i] = s;
      directions.push_back(std::move(c));
    }
  std::mt19937 rng(20091);
  std::uniform_int_distribution<int> coef(-8, 8);
  for (std::size_t k = 0; k < d; ++k) {
    RatVector c(d);
    for (auto& q : c) q = coef(rng);
    directions.push_back(std::move(c));
  }

  // trace(G) = tr0 + tr . y
  IntVector trk(inv_.dim());
  for (std::size_t k = 0; k < inv_.dim(); ++k)
    for (std::size_t i = 0; i < p_.n(); ++i) trk[k] += inv_.basis[k](i, i);
  Rational tr0 = 0;
  for (std::size_t k = 0; k < inv_.dim(); ++k) tr0 += trk[k] * slice_.x0[k];
  RatVector tr(d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t k = 0; k < inv_.dim(); ++k) tr[i] += trk[k] * slice_.n[i][k];
  Rational bound = 4 * p_.min_value * static_cast<long>(p_.n());
  if (bound < 2 * tr0) bound = 2 * tr0;

  while (true) {
    count_iteration(r, 0, 0);
    bool changed = false;
    for (const auto& c : directions) {
      sync_rows();
      std::vector<RatVector> a;
      RatVector b;
      a.reserve(rows_.size() + 1);
      for (const auto& row : rows_) {
        a.emplace_back(row.begin() + 1, row.end());
        b.push_back(-Rational(row[0]));
      }
      // -tr . y >= tr0 - bound
      RatVector neg(d);
      for (std::size_t i = 0; i < d; ++i) neg[i] = -tr[i];
      a.push_back(neg);
      b.push_back(tr0 - bound);
      LPResult res = minimize_over_inequalities(a, b, c);
      if (res.status == LPStatus::Unbounded) throw Error(Status::Internal, "trace-bounded relaxation is unbounded");
      if (res.status == LPStatus::Infeasible) {
        LPProblem lp;
        lp.variables = d;
        for (std::size_t k = 0; k + 1 < a.size(); ++k) lp.inequalities.push_back({a[k], b[k]});
        LPResult f = lp_solve(lp);
        if (f.status == LPStatus::Infeasible) return false;
        Rational t = tr0;
        for (std::size_t i = 0; i < d; ++i) t += tr[i] * f.point[i];
        bound = 2 * t;
        changed = true;
        continue;
      }
      RatVector x = point_of_y(res.point);
      if (separate(x)) {
        Rational t = tr0;
        for (std::size_t i = 0; i < d; ++i) t += tr[i] * res.point[i];
        if (t == bound) {
          bound *= 2;
          changed = true;
        }
        valid_points_.push_back(std::move(x));
      } else {
        changed = true;
      }
    }
    if (!changed) return true;
  }
}

// A cut tight on all of the current relaxation is an equality of P. Only
// rows tight at the average of known points of P can qualify.
void Engine::find_implied_equalities() {
  if (valid_points_.empty() || slice_.n.empty()) return;
  sync_rows();
  RatVector avg(inv_.dim());
  for (const auto& x : valid_points_)
    for (std::size_t j = 0; j < avg.size(); ++j) avg[j] += x[j];
  for (auto& q : avg) q /= static_cast<long>(valid_points_.size());

  std::vector<RatVector> a;
  RatVector b;
  for (const auto& row : rows_) {
    a.emplace_back(row.begin() + 1, row.end());
    b.push_back(-Rational(row[0]));
  }
  std::vector<bool> row_done(rows_.size(), false);
  std::vector<IntVector> found;
  for (std::size_t c = 0; c < cuts_.size(); ++c) {
    const std::size_t k = cut_row_[c];
    if (k == kNoRow || row_done[k]) continue;
    row_done[k] = true;
    IntVector f = inv_.functional(cuts_[c]);
    Rational val = 0;
    for (std::size_t j = 0; j < f.size(); ++j) val += f[j] * avg[j];
    if (val != p_.min_value) continue;
    RatVector obj(a[k].size());
    for (std::size_t j = 0; j < obj.size(); ++j) obj[j] = -a[k][j];
    LPResult res = minimize_over_inequalities(a, b, obj);
    if (res.status == LPStatus::Optimal && -res.value == -b[k]) found.push_back(cuts_[c]);
  }
  if (found.empty()) return;
  equalities_.insert(equalities_.end(), found.begin(), found.end());
  if (!build_slice()) throw Error(Status::Internal, "implied equalities are inconsistent");
}

// Rows that define facets of the current relaxation, found by dropping one
// row at a time when the others already imply it.
std::vector<std::size_t> Engine::irredundant_rows() const {
  std::vector<bool> keep(rows_.size(), true);
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    std::vector<RatVector> a;
    RatVector b;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
      if (j == k || !keep[j]) continue;
      a.emplace_back(rows_[j].begin() + 1, rows_[j].end());
      b.push_back(-Rational(rows_[j][0]));
    }
    if (a.empty()) continue;
    RatVector c(rows_[k].begin() + 1, rows_[k].end());
    LPResult res = minimize_over_inequalities(a, b, c);
    if (res.status == LPStatus::Optimal && res.value >= -Rational(rows_[k][0])) keep[k] = false;
  }
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < rows_.size(); ++k)
    if (keep[k]) out.push_back(k);
  return out;
}

bool Engine::dd_phase(RealizationResult& r, std::optional<ConeDD>& cone) {
  const std::size_t dim = slice_.n.size() + 1;
  sync_rows();
  // cone row 0 is t >= 0; redundant rows stay out of the cone
  std::vector<IntVector> start{IntVector(dim)};
  start[0][0] = 1;
  row_to_cone_.assign(rows_.size(), kNoRow);
  for (std::size_t k : irredundant_rows()) {
    row_to_cone_[k] = start.size();
    start.push_back(rows_[k]);
  }
  cone.emplace(dim, start);

  while (true) {
    std::size_t nv = 0, nr = 0;
    for (const auto& g : cone->generators()) ++(sgn(g.z[0]) > 0 ? nv : nr);
    if (nv == 0) return false;
    count_iteration(r, nv, nr);

    const RatVector* base = nullptr;
    RatVector base_point;
    bool all_vertices_valid = true;
    for (auto& g : cone->generators()) {
      if (sgn(g.z[0]) == 0) continue;
      if (!g.checked && separate(point_of(g.z))) g.checked = true;
      if (!g.checked) all_vertices_valid = false;
      if (g.checked && !base) {
        base_point = point_of(g.z);
        base = &base_point;
      }
    }
    if (all_vertices_valid)
      for (const auto& g : cone->generators())
        if (sgn(g.z[0]) == 0) ray_cut(*base, RatVector(g.z.begin() + 1, g.z.end()));
    std::vector<std::size_t> fresh = sync_rows();
    row_to_cone_.resize(rows_.size(), kNoRow);
    if (fresh.empty()) {
      for (const auto& g : cone->generators())
        if (!g.checked) throw Error(Status::Internal, "cutting loop made no progress");
      return true;
    }
    // insert the row cutting off the most generators first
    std::vector<bool> done(fresh.size(), false);
    for (std::size_t left = fresh.size(); left > 0; --left) {
      std::size_t best = 0, best_count = 0;
      bool any = false;
      for (std::size_t k = 0; k < fresh.size(); ++k) {
        if (done[k]) continue;
        std::size_t cnt = 0;
        for (const auto& g : cone->generators())
          if (sgn(dot(rows_[fresh[k]], g.z)) < 0) ++cnt;
        if (!any || cnt > best_count) {
          best = k;
          best_count = cnt;
          any = true;
        }
      }
      done[best] = true;
      row_to_cone_[fresh[best]] = cone->rows().size();
      cone->insert(rows_[fresh[best]]);
    }
  }
}

void Engine::finish_infeasible(RealizationResult& r) const {
  LPProblem lp;
  lp.variables = inv_.dim();
  for (const auto& e : p_.equality_vectors()) {
    IntVector f = inv_.functional(e);
    lp.equalities.push_back({RatVector(f.begin(), f.end()), p_.min_value});
  }
  for (const auto& v : cuts_) {
    IntVector f = inv_.functional(v);
    lp.inequalities.push_back({RatVector(f.begin(), f.end()), p_.min_value});
  }
  LPResult res = lp_solve(lp);
  if (res.status != LPStatus::Infeasible) throw Error(Status::Internal, "cut system unexpectedly feasible");
  r.cuts = cuts_;
  r.status = RealizationStatus::Infeasible;
  r.certificate_lp = std::move(lp);
  r.farkas = std::move(res.farkas);
}

void Engine::finish_feasible(RealizationResult& r, const ConeDD& cone) const {
  struct V {
    RatVector x;
    Bitset tight;
  };
  std::vector<V> vs;
  for (const auto& g : cone.generators()) {
    if (sgn(g.z[0]) <= 0) throw Error(Status::Internal, "feasible result with a ray");
    V v{point_of(g.z), {}};
    v.tight.resize(cuts_.size());
    for (std::size_t c = 0; c < cuts_.size(); ++c) {
      const IntVector f = inv_.functional(cuts_[c]);
      Rational val = 0;
      for (std::size_t j = 0; j < f.size(); ++j) val += f[j] * v.x[j];
      if (val == p_.min_value) v.tight.set(c);
    }
    vs.push_back(std::move(v));
  }
  std::sort(vs.begin(), vs.end(), [](const V& a, const V& b) { return a.x < b.x; });

  RatVector bary(inv_.dim());
  for (const auto& v : vs)
    for (std::size_t j = 0; j < bary.size(); ++j) bary[j] += v.x[j];
  for (auto& q : bary) q /= static_cast<long>(vs.size());
  for (auto& v : vs) {
    r.vertices.push_back(inv_.compose(v.x));
    r.vertex_cuts.push_back(std::move(v.tight));
  }
  if (vs.size() > 1) {
    RatMatrix diff(vs.size() - 1, inv_.dim());
    for (std::size_t i = 1; i < vs.size(); ++i)
      for (std::size_t j = 0; j < inv_.dim(); ++j) diff(i - 1, j) = vs[i].x[j] - vs[0].x[j];
    r.polytope_dim = rank(diff);
  }
  r.barycenter = inv_.compose(bary);
  r.minimal = minimal_vectors(GramMatrix(*r.barycenter));
  std::set<IntVector> known;
  for (const auto& e : p_.equality_vectors()) known.insert(sign_normalized(e));
  for (const auto& v : r.minimal.vectors)
    if (!known.count(v)) r.implied.push_back(v);
  r.cuts = cuts_;
  r.status = RealizationStatus::Feasible;
}

RealizationResult Engine::run() {
  RealizationResult r;
  const std::size_t n = p_.n();
  r.subspace_dim = inv_.dim();
  if (!build_slice()) {
    finish_infeasible(r);
    return r;
  }
  r.slice_dim = slice_.n.size();

  for (std::size_t i = 0; i < n; ++i) {
    IntVector u(n);
    u[i] = 1;
    add_cut(u);
  }
  std::vector<IntVector> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (int s : {1, -1}) {
        IntVector u(n);
        u[i] = 1;
        u[j] = s;
        pairs.push_back(u);
      }
  for (const auto& v : pairs) add_cut(v);
  for (const auto& e : p_.equality_vectors()) add_cut(e);
  for (const auto& c : p_.working_cuts) add_cut(c);
  if (opt_.preload_ternary)
    for (const auto& v : small_vectors_) add_cut(v);

  if (!lp_phase(r)) {
    finish_infeasible(r);
    return r;
  }
  find_implied_equalities();

  std::optional<ConeDD> cone;
  if (!dd_phase(r, cone)) {
    finish_infeasible(r);
    return r;
  }
  finish_feasible(r, *cone);
  return r;
}
}  // namespace

// ---------------------------------------------------------------------------

RatMatrix InvariantBasis::compose(std::span<const Rational> x) const {
  RatMatrix g(n, n);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    if (sgn(x[k]) == 0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (sgn(basis[k](i, j)) != 0) g(i, j) += basis[k](i, j) * x[k];
  }
  return g;
}

IntVector InvariantBasis::functional(std::span<const Integer> v) const {
  if (v.size() != n) throw Error(Status::DimensionMismatch, "vector length differs from dimension");
  IntVector f(basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k) f[k] = quadratic_value(basis[k], v);
  return f;
}

InvariantBasis invariant_subspace(std::size_t n, const std::vector<SignedPermutation>& group) {
  const std::size_t m = n * (n + 1) / 2;
  SignedUnionFind uf(m);
  for (const auto& u : group) {
    if (u.size() != n) throw Error(Status::DimensionMismatch, "group element of wrong size");
    // G_ij = s_i s_j G_{pi(i), pi(j)}
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j)
        uf.unite(pair_index(n, i, j), pair_index(n, u.image[i], u.image[j]), u.sign[i] * u.sign[j]);
  }
  std::map<std::size_t, std::size_t> slot;
  InvariantBasis b;
  b.n = n;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      auto [root, s] = uf.find(pair_index(n, i, j));
      if (uf.zero[root]) continue;
      auto it = slot.find(root);
      if (it == slot.end()) {
        it = slot.emplace(root, b.basis.size()).first;
        b.basis.emplace_back(n, n);
        b.representative.emplace_back(i, j);
      }
      IntMatrix& mat = b.basis[it->second];
      // orient so that the representative entry is +1
      auto [ri, rj] = b.representative[it->second];
      const int rs = uf.find(pair_index(n, ri, rj)).second;
      mat(i, j) = s * rs;
      mat(j, i) = s * rs;
    }
  return b;
}

std::vector<IntVector> RealizationProblem::equality_vectors() const {
  std::vector<IntVector> out = emb.ebar;
  out.insert(out.end(), extras.begin(), extras.end());
  return out;
}

RealizationResult realize(const RealizationProblem& p, const RealizationOptions& opt) {
  if (p.n() == 0) throw Error(Status::InvalidArgument, "empty embedding");
  if (p.n() > kMaxDimension) throw Error(Status::UnsupportedSize, "dimension exceeds 16");
  if (sgn(p.min_value) <= 0) throw Error(Status::InvalidArgument, "min_value must be positive");
  for (const auto& e : p.extras)
    if (e.size() != p.n()) throw Error(Status::DimensionMismatch, "extra vector length differs from dimension");
  for (const auto& u : p.group)
    if (!preserves(u, p.emb.ebar, p.extras)) throw Error(Status::InvalidArgument, "group element does not preserve the configuration");
  Engine e(p, opt);
  return e.run();
}

bool group_invariant(const RatMatrix& g, const std::vector<SignedPermutation>& group) {
  for (const auto& u : group) {
    RatMatrix m = to_rational(u.matrix());
    if (m.transposed() * g * m != g) return false;
  }
  return true;
}

bool verify_result(const RealizationProblem& p, const RealizationResult& r) {
  if (r.status == RealizationStatus::Infeasible) return verify_farkas(r.certificate_lp, r.farkas);
  if (r.status != RealizationStatus::Feasible || !r.barycenter) return false;
  const auto eqs = p.equality_vectors();
  for (const auto& v : r.vertices) {
    if (!pd_check(v).positive_definite) return false;
    GramMatrix g(v);
    if (minimal_vectors(g).min != p.min_value) return false;
    for (const auto& e : eqs)
      if (g[e] != p.min_value) return false;
    if (!group_invariant(v, p.group)) return false;
  }
  RatMatrix sum(p.n(), p.n());
  for (const auto& v : r.vertices)
    for (std::size_t i = 0; i < p.n(); ++i)
      for (std::size_t j = 0; j < p.n(); ++j) sum(i, j) += v(i, j);
  for (std::size_t i = 0; i < p.n(); ++i)
    for (std::size_t j = 0; j < p.n(); ++j) sum(i, j) /= static_cast<long>(r.vertices.size());
  if (sum != *r.barycenter) return false;
  return group_invariant(*r.barycenter, p.group) && r.minimal.min == p.min_value;
}

std::vector<FaceReport> scan_faces(const RealizationProblem& p, const RealizationResult& r, std::size_t depth) {
  if (r.status != RealizationStatus::Feasible) throw Error(Status::InvalidArgument, "faces need a feasible result");
  const std::size_t nv = r.vertices.size();
  const std::size_t n = p.n();
  auto face_dim = [&](const std::vector<std::size_t>& vs) -> std::size_t {
    if (vs.size() <= 1) return 0;
    RatMatrix diff(vs.size() - 1, n * n);
    for (std::size_t a = 1; a < vs.size(); ++a)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) diff(a - 1, i * n + j) = r.vertices[vs[a]](i, j) - r.vertices[vs[0]](i, j);
    return rank(diff);
  };
  auto report = [&](std::size_t codim, std::vector<std::size_t> vs) {
    FaceReport f;
    f.codim = codim;
    RatMatrix b(n, n);
    for (auto k : vs)
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) b(i, j) += r.vertices[k](i, j);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) b(i, j) /= static_cast<long>(vs.size());
    ShortVectorSet s = minimal_vectors(GramMatrix(b));
    f.vertices = std::move(vs);
    f.barycenter = std::move(b);
    f.s = s.pairs();
    f.generated_by_min = generated_by_min(s);
    f.minimal_basis = find_minimal_basis(s);
    return f;
  };

  std::vector<std::size_t> all(nv);
  std::iota(all.begin(), all.end(), 0);
  std::vector<FaceReport> out;
  out.push_back(report(0, all));
  if (depth == 0 || r.polytope_dim == 0) return out;

  // facets: maximal tight vertex sets of dimension dim(P) - 1
  std::set<std::vector<std::size_t>> facets;
  for (std::size_t c = 0; c < r.cuts.size(); ++c) {
    std::vector<std::size_t> vs;
    for (std::size_t k = 0; k < nv; ++k)
      if (r.vertex_cuts[k].test(c)) vs.push_back(k);
    if (vs.empty() || vs.size() == nv) continue;
    if (face_dim(vs) + 1 == r.polytope_dim) facets.insert(vs);
  }
  std::vector<std::vector<std::size_t>> level(facets.begin(), facets.end());
  for (std::size_t codim = 1; codim <= depth && !level.empty(); ++codim) {
    for (const auto& f : level) out.push_back(report(codim, f));
    if (codim == depth || codim == r.polytope_dim) break;
    std::set<std::vector<std::size_t>> below;
    for (const auto& f : level)
      for (const auto& g : facets) {
        std::vector<std::size_t> meet;
        std::set_intersection(f.begin(), f.end(), g.begin(), g.end(), std::back_inserter(meet));
        if (meet.empty() || meet == f) continue;
        if (face_dim(meet) + codim + 1 == r.polytope_dim) below.insert(meet);
      }
    level.assign(below.begin(), below.end());
  }
  return out;
}

PerfectionRelation perfection_relation(const ShortVectorSet& s) {
  const std::size_t n = s.dim;
  const std::size_t m = n * (n + 1) / 2;
  RatMatrix a(s.pairs(), m);
  for (std::size_t k = 0; k < s.pairs(); ++k) {
    const auto& y = s.vectors[k];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) a(k, pair_index(n, i, j)) = Rational(y[i] * y[j]);
  }
  PerfectionRelation pr;
  pr.rank = rank(a);
  pr.corank = s.pairs() - pr.rank;
  if (pr.corank == 1) {
    RatMatrix lk = left_kernel(a);
    RatVector row(s.pairs());
    for (std::size_t k = 0; k < s.pairs(); ++k) row[k] = lk(0, k);
    pr.relation = sign_normalized(primitive_integer(row));
  }
  return pr;
}

bool norm_relation_check(const GramMatrix& g, const ShortVectorSet& s, const IntVector& relation) {
  if (relation.size() != s.pairs()) throw Error(Status::DimensionMismatch, "one coefficient per pair expected");
  Rational total = 0;
  for (std::size_t k = 0; k < s.pairs(); ++k) total += relation[k] * g[s.vectors[k]];
  return sgn(total) == 0;
}

std::string to_string(RealizationStatus s) {
  switch (s) {
    case RealizationStatus::Feasible: return "feasible";
    case RealizationStatus::Infeasible: return "infeasible";
    case RealizationStatus::Incomplete: return "incomplete";
  }
  return "unknown";
}

}  // namespace latmin
