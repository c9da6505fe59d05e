#include "latmin/codes.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace latmin {

namespace {

Integer mod_nonneg(const Integer& a, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

std::string vec_str(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

BasisEmbedding cyclic_embedding(const CodeSpec& c) {
  const IntVector& w = c.words.front();
  std::size_t slot = c.n;
  for (std::size_t i = 0; i < c.n; ++i)
    if (gcd(w[i], c.d) == 1) {
      slot = i;
      break;
    }
  if (slot == c.n) throw Error(Status::NoUnitCoefficient, "word " + vec_str(w) + " has no coefficient prime to d");
  Integer inv;
  mpz_invert(inv.get_mpz_t(), w[slot].get_mpz_t(), c.d.get_mpz_t());
  IntVector scaled(c.n);
  for (std::size_t j = 0; j < c.n; ++j) scaled[j] = mod_nonneg(inv * w[j], c.d);

  BasisEmbedding emb;
  emb.n = c.n;
  emb.d = c.d;
  emb.ebar.assign(c.n, IntVector(c.n, 0));
  for (std::size_t i = 0; i < c.n; ++i) emb.ebar[i][i] = 1;
  IntVector& special = emb.ebar[slot];
  for (std::size_t j = 0; j < c.n; ++j) special[j] = (j == slot) ? c.d : Integer(-scaled[j]);
  std::ostringstream os;
  os << "B = (e_1..e_n) with e_" << slot + 1 << " replaced by e = (sum w_j e_j)/" << c.d << ", w = " << vec_str(scaled);
  emb.description = os.str();
  return emb;
}

BasisEmbedding general_embedding(const CodeSpec& c) {
  IntMatrix gen(c.n + c.words.size(), c.n);
  for (std::size_t i = 0; i < c.n; ++i) gen(i, i) = c.d;
  for (std::size_t k = 0; k < c.words.size(); ++k)
    for (std::size_t j = 0; j < c.n; ++j) gen(c.n + k, j) = c.words[k][j];
  auto h = hnf(gen);
  if (h.rank != c.n) throw Error(Status::Internal, "generator matrix lost rank");
  // rows of H/d form a basis of L in e-coordinates
  RatMatrix hb(c.n, c.n);
  for (std::size_t i = 0; i < c.n; ++i)
    for (std::size_t j = 0; j < c.n; ++j) hb(i, j) = Rational(h.H(i, j));
  auto inv = inverse(hb);
  if (!inv) throw Error(Status::Internal, "singular lattice basis");
  BasisEmbedding emb;
  emb.n = c.n;
  emb.d = c.d;
  emb.ebar.assign(c.n, IntVector(c.n));
  for (std::size_t i = 0; i < c.n; ++i)
    for (std::size_t j = 0; j < c.n; ++j) {
      Rational x = Rational(c.d) * (*inv)(i, j);
      x.canonicalize();
      if (x.get_den() != 1) throw Error(Status::Internal, "non-integral coordinates of e_i");
      emb.ebar[i][j] = x.get_num();
    }
  emb.description = "B = rows of HNF([d*I; words]) / d";
  return emb;
}

}  // namespace

CodeSpec CodeSpec::make(std::size_t n, Integer d, std::vector<IntVector> words, std::vector<IntVector> extra) {
  if (n == 0) throw Error(Status::InvalidArgument, "code dimension must be positive");
  if (d < 2) throw Error(Status::InvalidArgument, "modulus must be at least 2");
  CodeSpec c;
  c.n = n;
  c.d = std::move(d);
  for (auto& w : words) {
    if (w.size() != n) throw Error(Status::DimensionMismatch, "code word length differs from n");
    for (auto& x : w) x = mod_nonneg(x, c.d);
  }
  for (const auto& v : extra)
    if (v.size() != n) throw Error(Status::DimensionMismatch, "extra vector length differs from n");
  c.words = std::move(words);
  c.extra = std::move(extra);
  return c;
}

IntMatrix BasisEmbedding::matrix() const {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = ebar[i][j];
  return m;
}

BasisEmbedding basis_embedding(const CodeSpec& c) {
  if (c.words.empty()) {
    BasisEmbedding emb;
    emb.n = c.n;
    emb.d = 1;
    emb.ebar.assign(c.n, IntVector(c.n, 0));
    for (std::size_t i = 0; i < c.n; ++i) emb.ebar[i][i] = 1;
    emb.description = "B = (e_1..e_n)";
    return emb;
  }
  // the annihilator of the generated group must be d
  Integer exponent = 1;
  for (const auto& w : c.words) {
    Integer g = c.d;
    for (const auto& x : w) g = gcd(g, x);
    exponent = lcm(exponent, c.d / g);
  }
  if (exponent != c.d)
    throw Error(Status::InconsistentWords, "code words generate a group of exponent " + exponent.get_str() +
                                               ", not " + c.d.get_str());
  if (c.words.size() == 1) return cyclic_embedding(c);
  return general_embedding(c);
}

std::vector<Integer> quotient_type(const BasisEmbedding& emb) { return snf(emb.matrix()); }

RatVector to_e_coordinates(const BasisEmbedding& emb, const IntVector& b_coords) {
  auto inv = inverse(to_rational(emb.matrix()));
  if (!inv) throw Error(Status::Internal, "singular embedding");
  RatVector out(emb.n);
  for (std::size_t i = 0; i < emb.n; ++i)
    for (std::size_t j = 0; j < emb.n; ++j) out[i] += Rational(b_coords[j]) * (*inv)(j, i);
  return out;
}

std::optional<IntVector> to_b_coordinates(const BasisEmbedding& emb, const IntVector& num, const Integer& den) {
  IntVector out(emb.n);
  for (std::size_t j = 0; j < emb.n; ++j) {
    Integer s = 0;
    for (std::size_t i = 0; i < emb.n; ++i) s += num[i] * emb.ebar[i][j];
    if (!mpz_divisible_p(s.get_mpz_t(), den.get_mpz_t())) return std::nullopt;
    out[j] = s / den;
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<std::vector<Integer>> coordinate_choices(const CosetQuery& q) {
  if (sgn(q.sub) <= 0 || !mpz_divisible_p(q.d.get_mpz_t(), q.sub.get_mpz_t()))
    throw Error(Status::InvalidArgument, "d' must be a positive divisor of d");
  std::vector<std::vector<Integer>> choices;
  for (const auto& w : q.word) {
    Integer r = mod_nonneg(w, q.sub);
    if (sgn(r) == 0)
      choices.push_back({Integer(-q.sub), Integer(0), q.sub});
    else
      choices.push_back({Integer(r - q.sub), r});
  }
  return choices;
}

}  // namespace

void for_each_coset_candidate(const CosetQuery& q, const std::function<void(const IntVector&)>& visit) {
  auto choices = coordinate_choices(q);
  const std::size_t n = choices.size();
  IntVector b(n);
  std::vector<std::size_t> pos(n, 0);
  if (n == 0) return;
  for (;;) {
    for (std::size_t i = 0; i < n; ++i) b[i] = choices[i][pos[i]];
    visit(b);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++pos[i] < choices[i].size()) break;
      pos[i] = 0;
      if (i == 0) return;
    }
  }
}

std::vector<IntVector> coset_candidates(const CosetQuery& q) {
  std::vector<IntVector> out;
  for_each_coset_candidate(q, [&](const IntVector& b) { out.push_back(b); });
  return out;
}

Integer coset_candidate_count(const CosetQuery& q) {
  Integer count = 1;
  for (const auto& w : q.word) count *= (sgn(mod_nonneg(w, q.sub)) == 0) ? 3 : 2;
  return count;
}

// ---------------------------------------------------------------------------

SignedPermutation SignedPermutation::identity(std::size_t n) {
  SignedPermutation p;
  p.image.resize(n);
  p.sign.assign(n, 1);
  for (std::size_t i = 0; i < n; ++i) p.image[i] = i;
  return p;
}

IntVector SignedPermutation::apply(const IntVector& v) const {
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[image[i]] = sign[i] * v[i];
  return out;
}

SignedPermutation SignedPermutation::compose(const SignedPermutation& after) const {
  SignedPermutation r;
  r.image.resize(size());
  r.sign.resize(size());
  for (std::size_t i = 0; i < size(); ++i) {
    r.image[i] = after.image[image[i]];
    r.sign[i] = sign[i] * after.sign[image[i]];
  }
  return r;
}

IntMatrix SignedPermutation::matrix() const {
  IntMatrix m(size(), size());
  for (std::size_t i = 0; i < size(); ++i) m(image[i], i) = sign[i];
  return m;
}

bool SignedPermutation::is_identity() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (image[i] != i || sign[i] != 1) return false;
  return true;
}

namespace {

std::set<IntVector> signed_closure(const std::vector<IntVector>& vs) {
  std::set<IntVector> s;
  for (const auto& v : vs) {
    s.insert(v);
    IntVector m(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) m[i] = -v[i];
    s.insert(std::move(m));
  }
  return s;
}

// Can the partial map (coordinates 0..k-1 assigned) still send every vector
// of `set` into `set`?
bool partial_ok(const std::set<IntVector>& set, const std::vector<std::size_t>& image, const std::vector<int>& sign,
                std::size_t k) {
  for (const auto& v : set) {
    bool matched = false;
    for (const auto& w : set) {
      bool ok = true;
      for (std::size_t j = 0; j < k && ok; ++j)
        if (w[image[j]] != sign[j] * v[j]) ok = false;
      if (ok) {
        matched = true;
        break;
      }
    }
    if (!matched) return false;
  }
  return true;
}

}  // namespace

bool preserves(const SignedPermutation& g, const std::vector<IntVector>& ebar, const std::vector<IntVector>& extra) {
  for (const auto* vs : {&ebar, &extra}) {
    auto set = signed_closure(*vs);
    for (const auto& v : set)
      if (!set.count(g.apply(v))) return false;
  }
  return true;
}

std::vector<SignedPermutation> symmetry_group(const BasisEmbedding& emb, const std::vector<IntVector>& extra,
                                              std::size_t cap) {
  const std::size_t n = emb.n;
  const auto set_e = signed_closure(emb.ebar);
  const auto set_x = signed_closure(extra);

  // column profiles: sorted absolute values per coordinate, for cheap pruning
  auto profile = [&](const std::set<IntVector>& s, std::size_t col) {
    std::vector<Integer> p;
    for (const auto& v : s) p.push_back(abs(v[col]));
    std::sort(p.begin(), p.end());
    return p;
  };
  std::vector<std::pair<std::vector<Integer>, std::vector<Integer>>> prof(n);
  for (std::size_t i = 0; i < n; ++i) prof[i] = {profile(set_e, i), profile(set_x, i)};

  std::vector<SignedPermutation> out;
  std::vector<std::size_t> image(n);
  std::vector<int> sign(n);
  std::vector<bool> used(n, false);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == n) {
      if (out.size() >= cap) throw Error(Status::GroupTooLarge, "symmetry group exceeds the enumeration cap");
      out.push_back({image, sign});
      return;
    }
    for (std::size_t t = 0; t < n; ++t) {
      if (used[t] || prof[k] != prof[t]) continue;
      for (int s : {1, -1}) {
        image[k] = t;
        sign[k] = s;
        if (!partial_ok(set_e, image, sign, k + 1) || !partial_ok(set_x, image, sign, k + 1)) continue;
        used[t] = true;
        rec(k + 1);
        used[t] = false;
      }
    }
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SignedPermutation> group_closure(const std::vector<SignedPermutation>& gens, std::size_t n,
                                             std::size_t cap) {
  std::set<SignedPermutation> seen;
  std::vector<SignedPermutation> frontier{SignedPermutation::identity(n)};
  seen.insert(frontier.front());
  for (const auto& g : gens)
    if (g.size() != n) throw Error(Status::DimensionMismatch, "generator acts on wrong dimension");
  while (!frontier.empty()) {
    std::vector<SignedPermutation> next;
    for (const auto& x : frontier)
      for (const auto& g : gens) {
        auto y = x.compose(g);
        if (seen.insert(y).second) {
          if (seen.size() > cap) throw Error(Status::GroupTooLarge, "generated group exceeds the enumeration cap");
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace latmin
