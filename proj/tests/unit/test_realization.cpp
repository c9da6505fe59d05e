#include <doctest.h>

#include "latmin/catalog.hpp"
#include "latmin/realization.hpp"
#include "oracles.hpp"

using namespace latmin;

namespace {

// dim of {G symmetric : U^T G U = G} by plain linear algebra
std::size_t fixed_space_dim(std::size_t n, const std::vector<SignedPermutation>& gens) {
  std::vector<std::pair<std::size_t, std::size_t>> vars;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) vars.push_back({i, j});
  auto var = [&](std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    return std::find(vars.begin(), vars.end(), std::make_pair(i, j)) - vars.begin();
  };
  std::vector<RatVector> rows;
  for (const auto& u : gens) {
    const IntMatrix m = u.matrix();
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a; b < n; ++b) {
        // (U^T G U)_{ab} - G_{ab}
        RatVector row(vars.size(), 0);
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j) row[var(i, j)] += m(i, a) * m(j, b);
        row[var(a, b)] -= 1;
        rows.push_back(row);
      }
  }
  if (rows.empty()) return vars.size();
  return vars.size() - rank(RatMatrix::from_rows(rows));
}

SignedPermutation perm(std::vector<std::size_t> image) {
  return {image, std::vector<int>(image.size(), 1)};
}

RealizationProblem toy(std::size_t n, const std::vector<SignedPermutation>& group = {}) {
  RealizationProblem p;
  p.emb = basis_embedding(CodeSpec::make(n, 2, {IntVector(n, 1)}));
  p.group = group;
  return p;
}

}  // namespace

TEST_CASE("invariant subspace dimensions") {
  CHECK(invariant_subspace(2, {}).dim() == 3);
  for (std::size_t n = 2; n <= 5; ++n) {
    std::vector<SignedPermutation> sn;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      std::vector<std::size_t> image(n);
      for (std::size_t k = 0; k < n; ++k) image[k] = k;
      std::swap(image[i], image[i + 1]);
      sn.push_back(perm(image));
    }
    CHECK(invariant_subspace(n, sn).dim() == 2);
  }
  // a sign flip kills the off-diagonal entries of its coordinate
  SignedPermutation flip = SignedPermutation::identity(3);
  flip.sign[0] = -1;
  CHECK(invariant_subspace(3, {flip}).dim() == 4);
  CHECK(fixed_space_dim(3, {flip}) == 4);
}

TEST_CASE("invariant subspace of the n=9 group matches the linear fixed space") {
  const auto p = catalog_code("n9d5").problem();
  const auto inv = invariant_subspace(9, p.group);
  CHECK(inv.dim() == fixed_space_dim(9, p.group));
  const auto q = catalog_code("n10d5").problem();
  CHECK(invariant_subspace(10, q.group).dim() == fixed_space_dim(10, q.group));
  for (const auto& b : inv.basis) CHECK(group_invariant(to_rational(b), p.group));
}

TEST_CASE("n=2, d=2 is infeasible with a certificate") {
  const auto p = toy(2);
  const auto r = realize(p);
  REQUIRE(r.status == RealizationStatus::Infeasible);
  CHECK(verify_farkas(r.certificate_lp, r.farkas));
  CHECK(verify_result(p, r));
}

TEST_CASE("n=4, d=2 realizes D4") {
  for (bool sym : {false, true}) {
    std::vector<SignedPermutation> group;
    if (sym) group = {perm({0, 2, 1, 3}), perm({0, 1, 3, 2})};
    const auto p = toy(4, group);
    const auto r = realize(p);
    REQUIRE(r.status == RealizationStatus::Feasible);
    CHECK(verify_result(p, r));
    REQUIRE(r.barycenter);
    const GramMatrix g(*r.barycenter);
    for (const auto& v : p.equality_vectors()) CHECK(g[v] == 1);
    CHECK(r.minimal.min == 1);
    CHECK(r.minimal.pairs() == 12);
    if (sym) CHECK(group_invariant(*r.barycenter, group));
  }
}

TEST_CASE("realize honours the iteration cap") {
  RealizationOptions opt;
  opt.iteration_cap = 1;
  const auto p = catalog_code("n9d5").problem();
  CHECK_THROWS_AS(realize(p, opt), IterationLimitExceeded);
  try {
    realize(p, opt);
  } catch (const IterationLimitExceeded& e) {
    CHECK(e.status() == Status::IterationLimitExceeded);
    CHECK(e.partial().status == RealizationStatus::Incomplete);
    CHECK_FALSE(e.partial().cuts.empty());
  }
}

TEST_CASE("faces of a single point") {
  const auto p = toy(4, {perm({0, 2, 1, 3}), perm({0, 1, 3, 2})});
  const auto r = realize(p);
  REQUIRE(r.status == RealizationStatus::Feasible);
  if (r.vertices.size() == 1) {
    const auto faces = scan_faces(p, r, 1);
    REQUIRE(faces.size() == 1);
    CHECK(faces[0].barycenter == r.vertices[0]);
  }
  CHECK_THROWS_AS(scan_faces(toy(2), realize(toy(2))), Error);
}

TEST_CASE("perfection relation examples") {
  const auto id = minimal_vectors(GramMatrix(RatMatrix::identity(2)));
  auto r = perfection_relation(id);
  CHECK(r.rank == 2);
  CHECK_FALSE(r.relation);

  const auto hex = minimal_vectors(GramMatrix(to_rational(int_matrix({{2, 1}, {1, 2}}))));
  r = perfection_relation(hex);
  CHECK(r.rank == 3);
  CHECK(r.corank == 0);
  CHECK_FALSE(r.relation);

  ShortVectorSet four;
  four.dim = 2;
  four.min = 2;
  four.vectors = {int_vector({0, 1}), int_vector({1, -1}), int_vector({1, 0}), int_vector({1, 1})};
  r = perfection_relation(four);
  CHECK(r.rank == 3);
  CHECK(r.corank == 1);
  REQUIRE(r.relation);
  // (1,1)(1,1)^T + (1,-1)(1,-1)^T = 2 e1e1^T + 2 e2e2^T
  CHECK((*r.relation == int_vector({-2, 1, -2, 1}) || *r.relation == int_vector({2, -1, 2, -1})));
}

TEST_CASE("perfection relation of the n=9 matrix") {
  const auto g = catalog_gram("n9d5").gram();
  const auto s = minimal_vectors(g);
  const auto r = perfection_relation(s);
  CHECK(r.rank == 19);
  CHECK(r.corank == 1);
  REQUIRE(r.relation);
  CHECK(norm_relation_check(g, s, *r.relation));
  int plus = 0, minus = 0;
  for (const auto& c : *r.relation) {
    CHECK(abs(c) == 1);
    (c == 1 ? plus : minus)++;
  }
  CHECK(plus == 10);
  CHECK(minus == 10);

  auto perturbed = *r.relation;
  const auto x = sign_normalized(int_vector({-4, 0, 0, 2, 2, 1, 1, 1, 1}));
  const auto at = std::find(s.vectors.begin(), s.vectors.end(), x) - s.vectors.begin();
  REQUIRE(at < static_cast<long>(s.pairs()));
  perturbed[at] = 2 * perturbed[at];
  CHECK_FALSE(norm_relation_check(g, s, perturbed));
}

TEST_CASE("balanced relation with equal norms holds") {
  const auto g = GramMatrix(RatMatrix::identity(2));
  ShortVectorSet s;
  s.dim = 2;
  s.min = 1;
  s.vectors = {int_vector({0, 1}), int_vector({1, 0})};
  CHECK(norm_relation_check(g, s, int_vector({1, -1})));
  CHECK_FALSE(norm_relation_check(g, s, int_vector({1, 1})));
}
