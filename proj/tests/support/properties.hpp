#pragma once

// Randomized property suites shared by the property tests and the acceptance
// runner. Each returns a verdict with a short description of what was checked.

#include <map>
#include <random>
#include <sstream>
#include <string>

#include "latmin/codes.hpp"
#include "latmin/lattice.hpp"
#include "latmin/minkowski.hpp"
#include "latmin/realization.hpp"
#include "oracles.hpp"

namespace props {

using namespace latmin;

struct Verdict {
  bool ok = true;
  std::size_t samples = 0;
  std::string detail;

  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

inline std::string str(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str() + ')';
}

// random symmetric integer matrix with entries in [-5, 10], kept when PD and
// when the exact search box stays small
inline RatMatrix random_pd(std::mt19937_64& rng, std::size_t n) {
  for (;;) {
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      g(i, i) = oracle::uniform(rng, 1, 10);
      for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i) = oracle::uniform(rng, -5, 10);
    }
    const RatMatrix q = to_rational(g);
    if (!oracle::leading_minors_positive(q)) continue;
    return q;
  }
}

// minimum over the cube {-1,0,1}^n: an upper bound for the true minimum
inline Rational cube_bound(const RatMatrix& g) {
  const std::size_t n = g.rows();
  Rational best = g(0, 0);
  IntVector v(n, -1);
  for (;;) {
    if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return sgn(x) != 0; }))
      best = std::min(best, oracle::form(g, v));
    std::size_t i = 0;
    while (i < n && v[i] == 1) v[i++] = -1;
    if (i == n) break;
    ++v[i];
  }
  return best;
}

/// minimal_vectors against a naive search over the box |a_i| <= sqrt(m (G^-1)_ii).
inline Verdict minimal_vectors_vs_box(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Verdict v;
  std::size_t skipped = 0;
  while (v.samples < count) {
    const std::size_t n = oracle::uniform(rng, 1, 5);
    const RatMatrix g = random_pd(rng, n);
    const Rational bound = cube_bound(g);
    const auto rad = oracle::box_radius(g, bound);
    if (oracle::box_size(rad) > 4'000'000) {
      ++skipped;
      continue;
    }
    ++v.samples;
    // box search with the cube bound
    oracle::NaiveMinimum naive;
    bool have = false;
    IntVector a(n);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (i == n) {
        auto nz = std::find_if(a.begin(), a.end(), [](const Integer& x) { return sgn(x) != 0; });
        if (nz == a.end() || sgn(*nz) < 0) return;
        const Rational q = oracle::form(g, a);
        if (!have || q < naive.min) {
          have = true;
          naive.min = q;
          naive.vectors.clear();
        }
        if (q == naive.min) naive.vectors.push_back(a);
        return;
      }
      for (long x = -rad[i]; x <= rad[i]; ++x) {
        a[i] = x;
        rec(i + 1);
      }
    };
    rec(0);
    std::sort(naive.vectors.begin(), naive.vectors.end());
    const auto s = minimal_vectors(GramMatrix(g));
    if (s.min != naive.min || s.vectors != naive.vectors) {
      std::ostringstream os;
      os << "n=" << n << ": library min " << s.min << " (" << s.pairs() << " pairs), box min " << naive.min << " ("
         << naive.vectors.size() << " pairs)";
      v.fail(os.str());
    }
    // scaling by a positive rational keeps the vector set
    RatMatrix scaled = g;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) scaled(i, j) *= Rational(3, 7);
    if (minimal_vectors(GramMatrix(scaled)).vectors != s.vectors) v.fail("scaling changed the minimal vectors");
    // unimodular change of basis: U^T G U has minimal vectors U^-1 S
    IntMatrix u = IntMatrix::identity(n);
    for (std::size_t i = 0; i + 1 < n; ++i) u(i, i + 1) = oracle::uniform(rng, -2, 2);
    if (n > 1) u.swap_rows(0, n - 1);
    const RatMatrix ur = to_rational(u);
    const RatMatrix h = ur.transposed() * g * ur;
    const auto uinv = *inverse(ur);
    std::vector<IntVector> mapped;
    for (const auto& x : s.vectors) {
      IntVector y(n, 0);
      for (std::size_t i = 0; i < n; ++i) {
        Rational t = 0;
        for (std::size_t j = 0; j < n; ++j) t += uinv(i, j) * x[j];
        y[i] = t.get_num();
      }
      mapped.push_back(sign_normalized(y));
    }
    std::sort(mapped.begin(), mapped.end());
    if (minimal_vectors(GramMatrix(h)).vectors != mapped) v.fail("unimodular change of basis not equivariant");
  }
  v.detail = v.ok ? std::to_string(v.samples) + " matrices agree (" + std::to_string(skipped) + " with oversized boxes redrawn)"
                  : v.detail;
  return v;
}

inline bool hnf_shape(const IntMatrix& h, std::size_t rank) {
  std::size_t prev = 0;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && sgn(h(i, p)) == 0) ++p;
    if (i >= rank) {
      if (p != h.cols()) return false;
      continue;
    }
    if (p == h.cols() || sgn(h(i, p)) <= 0 || (i > 0 && p <= prev)) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (sgn(h(k, p)) < 0 || h(k, p) >= h(i, p)) return false;
    prev = p;
  }
  return true;
}

/// HNF: H = U M, |det U| = 1, echelon shape, rank matches. SNF: divisor chain,
/// product = |det| when square, equal to gcd-of-minors divisors.
inline Verdict normal_form_certificates(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Verdict v;
  for (; v.samples < count; ++v.samples) {
    const std::size_t r = oracle::uniform(rng, 1, 5), c = oracle::uniform(rng, 1, 5);
    const long range = oracle::uniform(rng, 1, 30);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = oracle::uniform(rng, -range, range);
    if (v.samples % 5 == 0 && r > 1) {
      for (std::size_t j = 0; j < c; ++j) m(r - 1, j) = 2 * m(0, j);  // force rank loss
    }
    const auto h = hnf(m);
    if (!(h.H == h.U * m)) v.fail("H != U M");
    if (abs(oracle::cofactor_det(h.U)) != 1) v.fail("U not unimodular");
    if (!hnf_shape(h.H, h.rank)) v.fail("H not in Hermite form");
    if (h.rank != rank(m)) v.fail("rank mismatch");
    const auto d = snf(m);
    for (std::size_t i = 0; i + 1 < d.size(); ++i)
      if (sgn(d[i + 1]) != 0 && !mpz_divisible_p(d[i + 1].get_mpz_t(), d[i].get_mpz_t())) v.fail("divisor chain broken");
    if (r == c) {
      Integer prod = 1;
      for (const auto& x : d) prod *= x;
      if (prod != abs(oracle::cofactor_det(m))) v.fail("divisor product != |det|");
    }
    if (d != oracle::determinantal_divisors(m)) v.fail("SNF differs from determinantal divisors");
  }
  if (v.ok) v.detail = std::to_string(v.samples) + " matrices re-verified";
  return v;
}

/// Random code words with n <= 6, d <= 4; mostly nonzero entries, one unit.
inline CodeSpec random_code(std::mt19937_64& rng) {
  const std::size_t n = oracle::uniform(rng, 2, 6);
  const long d = oracle::uniform(rng, 2, 4);
  IntVector w(n);
  for (auto& x : w) x = oracle::uniform(rng, 0, 4) == 0 ? 0 : oracle::uniform(rng, 1, d - 1);
  w[oracle::uniform(rng, 0, n - 1)] = 1;
  return CodeSpec::make(n, d, {w});
}

/// |a_i| <= d' for every minimal vector x = (sum a_i e_i)/d' of the lattices
/// realizing random codes (every vertex and the barycenter of each realization
/// space), whenever L' = <e_1..e_n> has the maximal index of L.
inline Verdict coset_bound(std::size_t codes, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Verdict v;
  std::map<long, std::size_t> per_d;
  std::size_t feasible = 0, vectors = 0, not_maximal = 0;
  for (std::size_t t = 0; t < codes; ++t) {
    RealizationProblem p;
    p.emb = basis_embedding(random_code(rng));
    p.group = symmetry_group(p.emb, {});
    const auto r = realize(p);
    if (r.status != RealizationStatus::Feasible) continue;
    ++feasible;
    std::vector<RatMatrix> lattices = r.vertices;
    lattices.push_back(*r.barycenter);
    const Integer index = abs(determinant(p.emb.matrix()));
    for (const auto& g : lattices) {
      const auto s = minimal_vectors(GramMatrix(g));
      if (s.min != 1) v.fail("realization with minimum " + s.min.get_str());
      if (maximal_index(s).index != index) {
        ++not_maximal;
        continue;
      }
      ++v.samples;
      ++per_d[p.emb.d.get_si()];
      for (const auto& x : s.vectors) {
        ++vectors;
        const RatVector a = to_e_coordinates(p.emb, x);
        Integer den = 1;
        for (const auto& q : a) den = lcm(den, q.get_den());
        if (!mpz_divisible_p(p.emb.d.get_mpz_t(), den.get_mpz_t())) v.fail("denominator does not divide d");
        for (const auto& q : a)
          if (abs(Rational(q * den).get_num()) > den)
            v.fail("bound violated by " + str(x) + " with d=" + p.emb.d.get_str());
      }
    }
  }
  if (v.samples < 20) v.fail("only " + std::to_string(v.samples) + " admissible lattices");
  if (v.ok) {
    std::ostringstream os;
    os << codes << " codes, " << feasible << " realizable, " << v.samples << " lattices (" << not_maximal
       << " without maximal index skipped), " << vectors << " minimal vectors; lattices by d:";
    for (const auto& [d, k] : per_d) os << " " << d << ":" << k;
    v.detail = os.str();
  }
  return v;
}

/// The n=2, d=2 code with word (1,1) has no realization; the certificate verifies.
inline Verdict toy_infeasible() {
  Verdict v;
  v.samples = 1;
  RealizationProblem p;
  p.emb = basis_embedding(CodeSpec::make(2, 2, {int_vector({1, 1})}));
  const auto r = realize(p);
  if (r.status != RealizationStatus::Infeasible) v.fail("status " + to_string(r.status));
  else if (!verify_farkas(r.certificate_lp, r.farkas)) v.fail("certificate does not verify");
  else v.detail = "infeasible, Farkas certificate with " + std::to_string(r.farkas.ineq_multipliers.size()) +
                  " inequality multipliers verifies";
  return v;
}

}  // namespace props
