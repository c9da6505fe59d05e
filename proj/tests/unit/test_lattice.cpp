#include <doctest.h>

#include "latmin/catalog.hpp"
#include "latmin/lattice.hpp"
#include "oracles.hpp"

using namespace latmin;

TEST_CASE("identity lattice") {
  const GramMatrix g(RatMatrix::identity(3));
  const auto s = minimal_vectors(g);
  CHECK(s.min == 1);
  CHECK(s.pairs() == 3);
  CHECK(s.vectors == std::vector<IntVector>{int_vector({0, 0, 1}), int_vector({0, 1, 0}), int_vector({1, 0, 0})});
  CHECK(well_rounded(s));
}

TEST_CASE("hexagonal lattice") {
  const GramMatrix g(to_rational(int_matrix({{2, 1}, {1, 2}})));
  const auto s = minimal_vectors(g);
  CHECK(s.min == 2);
  CHECK(s.pairs() == 3);
  CHECK(s.vectors == std::vector<IntVector>{int_vector({0, 1}), int_vector({1, -1}), int_vector({1, 0})});
}

TEST_CASE("rational scaled form") {
  const GramMatrix g = GramMatrix::from_scaled(int_matrix({{2, 1}, {1, 2}}), 4);
  CHECK(g.scale() == 4);
  CHECK(minimal_vectors(g).min == Rational(1, 2));
  CHECK(g[int_vector({1, 1})] == Rational(3, 2));
  CHECK_FALSE(well_rounded(GramMatrix(to_rational(int_matrix({{1, 0}, {0, 3}})))));
}

TEST_CASE("gram matrix construction rejects bad input") {
  auto status_of = [](auto&& f) {
    try {
      f();
    } catch (const Error& e) {
      return e.status();
    }
    return Status::Ok;
  };
  CHECK(status_of([] { GramMatrix(to_rational(int_matrix({{1, 2}, {0, 1}}))); }) == Status::NotSymmetric);
  CHECK(status_of([] { GramMatrix(to_rational(int_matrix({{1, 2}, {2, 1}}))); }) == Status::NotPositiveDefinite);
  CHECK(status_of([] { GramMatrix(RatMatrix::identity(17)); }) == Status::UnsupportedSize);
}

TEST_CASE("short vectors up to a bound") {
  const GramMatrix g(RatMatrix::identity(2));
  CHECK(short_vectors(g, 1).size() == 2);
  CHECK(short_vectors(g, 2).size() == 4);
  CHECK(short_vectors(g, 4).size() == 6);
}

TEST_CASE("lll transform is unimodular and consistent") {
  const IntMatrix gram = int_matrix({{101, 95, 30}, {95, 90, 28}, {30, 28, 10}});
  REQUIRE(oracle::leading_minors_positive(to_rational(gram)));
  const auto r = lll_reduce(gram);
  CHECK(abs(determinant(r.transform)) == 1);
  CHECK(r.reduced == r.transform.transposed() * gram * r.transform);
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < i; ++j) CHECK(2 * abs(r.reduced(i, j)) <= r.reduced(j, j));
}

TEST_CASE("minimal vectors of the embedded n=9 matrix") {
  const auto s = minimal_vectors(catalog_gram("n9d5").gram());
  CHECK(s.min == 1);
  CHECK(s.pairs() == 20);
}

TEST_CASE("minimum-48 matrix has 11 pairs of minimal vectors") {
  const auto g = catalog_gram("n10d5-min48").gram();
  const auto s = minimal_vectors(g);
  CHECK(s.min == 48);
  CHECK(s.pairs() == 11);
  CHECK(well_rounded(s));
  const auto naive = integral_minimum(g.scaled());
  CHECK(naive.min == 48);
  CHECK(canonical_set(naive.vectors) == s.vectors);
}
