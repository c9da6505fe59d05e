#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "properties.hpp"

TEST_CASE("minimal vectors agree with box enumeration") {
  const auto v = props::minimal_vectors_vs_box(200, 20240601);
  INFO(v.detail);
  CHECK(v.ok);
  CHECK(v.samples == 200);
}

TEST_CASE("hermite and smith certificates") {
  const auto v = props::normal_form_certificates(500, 99);
  INFO(v.detail);
  CHECK(v.ok);
}

TEST_CASE("coefficient bound for minimal vectors of code lattices") {
  const auto v = props::coset_bound(300, 4242);
  INFO(v.detail);
  MESSAGE(v.detail);
  CHECK(v.ok);
}

TEST_CASE("smallest code is not realizable") {
  const auto v = props::toy_infeasible();
  INFO(v.detail);
  CHECK(v.ok);
}
