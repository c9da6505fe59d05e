#include <doctest.h>

#include "latmin/catalog.hpp"
#include "latmin/minkowski.hpp"
#include "oracles.hpp"

using namespace latmin;

namespace {

ShortVectorSet of(const IntMatrix& g) { return minimal_vectors(GramMatrix(to_rational(g))); }

}  // namespace

TEST_CASE("unit vectors have index 1") {
  const auto s = of(IntMatrix::identity(4));
  const auto r = subset_index(s, {0, 1, 2, 3});
  CHECK(r.index == 1);
  CHECK(r.divisors == std::vector<Integer>{1, 1, 1, 1});
  CHECK(maximal_index(s).index == 1);
  CHECK(generated_by_min(s));
  REQUIRE(find_minimal_basis(s));
  CHECK(find_minimal_basis(s)->size() == 4);
}

TEST_CASE("dependent subsets are rejected") {
  const auto s = of(int_matrix({{2, 1}, {1, 2}}));
  CHECK_THROWS_AS(vectors_index({int_vector({1, 1}), int_vector({2, 2})}), Error);
  CHECK(vectors_index({int_vector({1, 1}), int_vector({1, -1})}).index == 2);
  CHECK(vectors_index({int_vector({1, 1}), int_vector({1, -1})}).cyclic());
  CHECK_FALSE(vectors_index({int_vector({2, 0}), int_vector({0, 2})}).cyclic());
  CHECK(maximal_index(s).index == 1);
}

TEST_CASE("hexagonal census") {
  const auto s = of(int_matrix({{2, 1}, {1, 2}}));
  const auto c = quotient_census(s);
  REQUIRE(c.size() == 1);
  CHECK(c.begin()->first == std::vector<Integer>{1, 1});
  CHECK(c.begin()->second == 3);
}

TEST_CASE("identity census") {
  const auto c = quotient_census(of(IntMatrix::identity(2)));
  REQUIRE(c.size() == 1);
  CHECK(c.begin()->second == 1);
}

TEST_CASE("not well rounded") {
  const auto s = of(int_matrix({{1, 0}, {0, 3}}));
  CHECK_FALSE(generated_by_min(s));
  CHECK_FALSE(find_minimal_basis(s));
  CHECK_THROWS_AS(maximal_index(s), Error);
  CHECK_THROWS_AS(quotient_census(s), Error);
}

TEST_CASE("D4 root lattice") {
  // Gram of D4 in the basis e1-e2, e2-e3, e3-e4, e3+e4
  const auto s = of(int_matrix({{2, -1, 0, 0}, {-1, 2, -1, -1}, {0, -1, 2, 0}, {0, -1, 0, 2}}));
  CHECK(s.pairs() == 12);
  CHECK(maximal_index(s).index == 2);
  CHECK(find_minimal_basis(s));
}

TEST_CASE("embedded n=9 matrix") {
  const auto s = minimal_vectors(catalog_gram("n9d5").gram());
  const auto basis = find_minimal_basis(s);
  REQUIRE(basis);
  std::vector<IntVector> picked;
  for (auto i : *basis) picked.push_back(s.vectors[i]);
  CHECK(vectors_index(picked).index == 1);
  CHECK(vectors_index(n9d5_basis_example()).index == 1);
  CHECK(maximal_index(s).index == 5);
}

TEST_CASE("minimum-48 matrix") {
  const auto s = minimal_vectors(catalog_gram("n10d5-min48").gram());
  const auto mi = maximal_index(s);
  CHECK(mi.index == 5);
  CHECK(mi.divisors.back() == 5);
  CHECK(generated_by_min(s));
  CHECK_FALSE(find_minimal_basis(s));

  std::vector<IntVector> units;
  for (std::size_t i = 1; i < 10; ++i) {
    IntVector v(10, 0);
    v[i] = 1;
    units.push_back(v);
  }
  auto with = [&](IntVector first) {
    auto vs = units;
    vs.insert(vs.begin(), std::move(first));
    return vectors_index(vs);
  };
  // e1 = 5e - e2 - e3 - 2(e4 + ... + e10) in the basis (e, e2, ..., e10)
  const auto e1 = with(int_vector({5, -1, -1, -2, -2, -2, -2, -2, -2, -2}));
  CHECK(e1.index == 5);
  CHECK(e1.divisors.back() == 5);
  const auto x = with(int_vector({4, 0, 0, -2, -2, -2, -1, -1, -1, -1}));
  CHECK(x.cyclic());
  CHECK(x.index >= 2);
  CHECK(x.index <= 5);
}

TEST_CASE("census relations on random lattices") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 25; ++t) {
    const std::size_t n = oracle::uniform(rng, 2, 4);
    IntMatrix g(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      g(i, i) = 4;
      for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i) = oracle::uniform(rng, -2, 2);
    }
    if (!oracle::leading_minors_positive(to_rational(g))) continue;
    const auto s = of(g);
    if (!well_rounded(s)) continue;
    ++checked;
    const auto census = quotient_census(s);
    Integer top = 0;
    bool has_one = false;
    for (const auto& [div, count] : census) {
      Integer prod = 1;
      for (const auto& d : div) prod *= d;
      top = std::max(top, prod);
      has_one = has_one || prod == 1;
    }
    const auto mi = maximal_index(s);
    CHECK(mi.index == top);
    std::vector<IntVector> w;
    for (auto i : mi.subset) w.push_back(s.vectors[i]);
    CHECK(abs(determinant(IntMatrix::from_rows(w))) == mi.index);
    CHECK(find_minimal_basis(s).has_value() == has_one);
  }
  CHECK(checked >= 10);
}
