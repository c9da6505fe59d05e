#include <doctest.h>

#include "latmin/exact.hpp"
#include "oracles.hpp"

using namespace latmin;

namespace {

bool hnf_shape(const IntMatrix& h, std::size_t rank) {
  std::size_t prev = 0;
  bool first = true;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t p = 0;
    while (p < h.cols() && sgn(h(i, p)) == 0) ++p;
    if (i >= rank) {
      if (p != h.cols()) return false;
      continue;
    }
    if (p == h.cols() || sgn(h(i, p)) <= 0) return false;
    if (!first && p <= prev) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (sgn(h(k, p)) < 0 || h(k, p) >= h(i, p)) return false;
    prev = p;
    first = false;
  }
  return true;
}

}  // namespace

TEST_CASE("hnf of a small matrix") {
  const IntMatrix m = int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
  const auto h = hnf(m);
  CHECK(h.rank == 3);
  CHECK(h.H == h.U * m);
  CHECK(abs(determinant(h.U)) == 1);
  CHECK(hnf_shape(h.H, h.rank));
  CHECK(h.H == int_matrix({{2, 4, 4}, {0, 6, 0}, {0, 0, 12}}));
}

TEST_CASE("hnf of a rank deficient matrix puts zero rows last") {
  const IntMatrix m = int_matrix({{1, 2, 3}, {2, 4, 6}, {0, 1, 1}});
  const auto h = hnf(m);
  CHECK(h.rank == 2);
  CHECK(hnf_shape(h.H, 2));
  CHECK(h.H == h.U * m);
}

TEST_CASE("snf examples") {
  CHECK(snf(int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}})) == std::vector<Integer>{2, 6, 12});
  CHECK(snf(IntMatrix::identity(4)) == std::vector<Integer>{1, 1, 1, 1});
  CHECK(snf(int_matrix({{2, 0}, {0, 3}})) == std::vector<Integer>{1, 6});
  CHECK(snf(int_matrix({{1, 2}, {2, 4}})) == std::vector<Integer>{1, 0});
}

TEST_CASE("snf agrees with determinantal divisors") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 60; ++t) {
    const std::size_t r = oracle::uniform(rng, 1, 4), c = oracle::uniform(rng, 1, 4);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = oracle::uniform(rng, -9, 9);
    CHECK(snf(m) == oracle::determinantal_divisors(m));
  }
}

TEST_CASE("determinant against cofactor expansion") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const std::size_t n = oracle::uniform(rng, 1, 6);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = oracle::uniform(rng, -20, 20);
    CHECK(determinant(m) == oracle::cofactor_det(m));
    CHECK(determinant(to_rational(m)) == Rational(oracle::cofactor_det(m)));
  }
  CHECK(determinant(int_matrix({{0, 1}, {1, 0}})) == -1);
}

TEST_CASE("inverse, kernel and solve") {
  const RatMatrix m = to_rational(int_matrix({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}}));
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv == oracle::cofactor_inverse(m));
  CHECK(m * *inv == RatMatrix::identity(3));
  CHECK_FALSE(inverse(to_rational(int_matrix({{1, 2}, {2, 4}}))));

  const RatMatrix a = to_rational(int_matrix({{1, 2, 3}, {2, 4, 6}}));
  const RatMatrix k = kernel(a);
  CHECK(k.cols() == 2);
  const RatMatrix zero = a * k;
  for (std::size_t i = 0; i < zero.rows(); ++i)
    for (std::size_t j = 0; j < zero.cols(); ++j) CHECK(zero(i, j) == 0);
  CHECK(rank(a) == 1);
  CHECK(left_kernel(a).rows() == 1);

  const RatVector b{Rational(1), Rational(2)};
  auto x = solve(a, b);
  REQUIRE(x);
  CHECK((*x)[0] + 2 * (*x)[1] + 3 * (*x)[2] == 1);
  const RatVector bad{Rational(1), Rational(3)};
  CHECK_FALSE(solve(a, bad));
}

TEST_CASE("clear_denominators and primitive vectors") {
  RatMatrix m(1, 3);
  m(0, 0) = Rational(1, 6);
  m(0, 1) = Rational(-1, 4);
  m(0, 2) = 2;
  auto [scale, im] = clear_denominators(m);
  CHECK(scale == 12);
  CHECK(im == int_matrix({{2, -3, 24}}));

  const RatVector v{Rational(-2, 3), Rational(4, 9), 0};
  CHECK(primitive_integer(v) == int_vector({-3, 2, 0}));
  CHECK(primitive(int_vector({4, -6, 0})) == int_vector({2, -3, 0}));
  CHECK(sign_normalized(int_vector({0, -1, 2})) == int_vector({0, 1, -2}));
}

TEST_CASE("pd_check returns a witness on failure") {
  CHECK(pd_check(to_rational(int_matrix({{2, 1}, {1, 2}}))).positive_definite);
  const RatMatrix g = to_rational(int_matrix({{1, 2}, {2, 1}}));
  const auto r = pd_check(g);
  REQUIRE_FALSE(r.positive_definite);
  CHECK(quadratic_value(g, r.witness) <= 0);
  CHECK(quadratic_value(g, r.witness) == r.witness_value);
  CHECK_FALSE(pd_check(to_rational(int_matrix({{1, 1}, {1, 1}}))).positive_definite);
  auto neg = negative_vector(g);
  REQUIRE(neg);
  CHECK(quadratic_value(g, *neg) < 0);
  CHECK_FALSE(negative_vector(to_rational(int_matrix({{1, 1}, {1, 1}}))));
  CHECK_THROWS_AS(pd_check(to_rational(int_matrix({{1, 2}, {0, 1}}))), Error);
}

TEST_CASE("lp: optimum, unbounded, infeasible") {
  LPProblem p;
  p.variables = 2;
  p.inequalities = {{{1, 0}, 0}, {{0, 1}, 0}, {{-1, -1}, -4}, {{-1, 0}, -3}};
  p.objective = {2, 1};
  auto r = lp_solve(p);
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.value == 7);
  CHECK(is_feasible_point(p, r.point));

  p.sense = Sense::Minimize;
  p.objective = {-1, -3};
  p.inequalities.pop_back();
  p.inequalities.pop_back();
  r = lp_solve(p);
  CHECK(r.status == LPStatus::Unbounded);

  LPProblem q;
  q.variables = 2;
  q.equalities = {{{1, 1}, 1}};
  q.inequalities = {{{1, 0}, 1}, {{0, 1}, 1}};
  r = lp_solve(q);
  REQUIRE(r.status == LPStatus::Infeasible);
  CHECK(verify_farkas(q, r.farkas));
  FarkasCertificate bogus = r.farkas;
  bogus.ineq_multipliers[0] += 1;
  CHECK_FALSE(verify_farkas(q, bogus));
}

TEST_CASE("minimize_over_inequalities matches lp_solve") {
  const std::vector<RatVector> a{{1, 0}, {0, 1}, {1, 1}};
  const RatVector b{0, 0, 2};
  auto r = minimize_over_inequalities(a, b, {1, 2});
  REQUIRE(r.status == LPStatus::Optimal);
  CHECK(r.value == 2);
  r = minimize_over_inequalities(a, b, {-1, 0});
  CHECK(r.status == LPStatus::Unbounded);
}
