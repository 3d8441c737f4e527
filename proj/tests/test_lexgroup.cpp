#include <doctest.h>

#include "pcclosure/lexgroup.hpp"
#include "test_support.hpp"

using namespace pcc;

namespace {

GroupElement ge(std::vector<int> v) {
  std::vector<Int> c(v.begin(), v.end());
  return GroupElement::finite(c);
}

}  // namespace

TEST_CASE("lex comparison") {
  CHECK(ge({0, 1}) < ge({1, 0}));
  CHECK(ge({2, -7}) == ge({2, -7}));
  CHECK(GroupElement::infinity() > ge({1000000, 1000000}));
  CHECK(ge({0, 1}) > ge({0, 0}));
  CHECK(ge({-1, 5}) < ge({0, 0}));
  CHECK_THROWS_AS((void)(ge({0, 1}) < ge({0, 1, 2})), std::invalid_argument);
}

TEST_CASE("group arithmetic") {
  CHECK(ge({0, 1}) + ge({1, -1}) == ge({1, 0}));
  CHECK(Int(3) * ge({0, 2}) == ge({0, 6}));
  CHECK(Int(0) * ge({5, 5}) == ge({0, 0}));
  CHECK((GroupElement::infinity() - ge({1, 0})).is_infinity());
  CHECK((GroupElement::infinity() + ge({1, 0})).is_infinity());
  CHECK((Int(2) * GroupElement::infinity()).is_infinity());
  CHECK_THROWS_AS(ge({1, 0}) - GroupElement::infinity(), std::domain_error);
  CHECK_THROWS_AS(Int(0) * GroupElement::infinity(), std::domain_error);
  CHECK_THROWS_AS(Int(-1) * ge({1, 0}), std::invalid_argument);
}

TEST_CASE("leading index") {
  CHECK(*leading_index(ge({0, 3})) == 2);
  CHECK(!leading_index(ge({0, 0})).has_value());
  CHECK(*leading_index(ge({-1, 5})) == 1);
}

TEST_CASE("affine eval and solve") {
  AffineExp a{ge({0, 1}), ge({0, 1}), 0};
  CHECK(a.eval(3) == ge({0, 4}));
  CHECK(a.eval(0) == ge({0, 1}));
  CHECK_THROWS_AS(a.eval(-1), std::invalid_argument);

  AffineExp b{ge({1, 0}), ge({0, 2}), 0};
  CHECK(b.eval(5) == ge({1, 10}));

  CHECK(*a.solve(ge({0, 4})) == 3);
  CHECK(!a.solve(ge({1, 0})).has_value());
  AffineExp c{ge({0, 2}), ge({0, 2}), 0};
  CHECK(!c.solve(ge({0, 5})).has_value());
  AffineExp d{ge({0, 1}), ge({0, 1}), 2};
  CHECK(!d.solve(ge({0, 2})).has_value());  // solution n = 1 below start
}

TEST_CASE("affine least_exceeding") {
  AffineExp a{ge({0, 1}), ge({0, 1}), 0};       // n -> (0, n+1)
  CHECK(*a.least_exceeding(ge({0, 5})) == 5);   // (0,6) > (0,5)
  CHECK(*a.least_exceeding(ge({0, -9})) == 0);
  CHECK(*a.least_exceeding(ge({-1, 3})) == 0);
  CHECK(!a.least_exceeding(ge({1, 0})).has_value());
  CHECK(!a.least_exceeding(GroupElement::infinity()).has_value());
  AffineExp b{ge({0, 0}), ge({1, -2}), 1};      // n -> (n, -2n)
  CHECK(*b.least_exceeding(ge({3, 0})) == 4);   // (3,-6) < (3,0) < (4,-8)
  CHECK(*b.least_exceeding(ge({3, -7})) == 3);  // (3,-6) > (3,-7)
}

TEST_CASE("order is total and translation-invariant") {
  testsupport::Rng rng(20240901);
  for (int rank = 1; rank <= 3; ++rank) {
    for (int iter = 0; iter < 200; ++iter) {
      GroupElement a = testsupport::rand_group(rng, rank);
      GroupElement b = testsupport::rand_group(rng, rank);
      GroupElement c = testsupport::rand_group(rng, rank);
      int lt = a < b, eq = a == b, gt = a > b;
      CHECK(lt + eq + gt == 1);
      if (a < b && b < c) CHECK(a < c);
      GroupElement h = testsupport::rand_group(rng, rank);
      if (a < b) CHECK(a + h < b + h);
    }
  }
}

TEST_CASE("convex subgroup chain via leading_index") {
  testsupport::Rng rng(20240902);
  auto in_delta = [](const GroupElement& g, int j) {
    auto l = leading_index(g);
    return !l.has_value() || *l > j;
  };
  for (int iter = 0; iter < 300; ++iter) {
    int rank = 3;
    GroupElement a = testsupport::rand_group(rng, rank);
    GroupElement b = testsupport::rand_group(rng, rank);
    for (int j = 0; j <= rank; ++j) {
      if (in_delta(a, j) && in_delta(b, j)) CHECK(in_delta(a + b, j));
      // convexity: 0 <= b <= a with a in Delta_j forces b in Delta_j
      GroupElement zero = GroupElement::zero(rank);
      if (in_delta(a, j) && zero <= b && b <= a) CHECK(in_delta(b, j));
    }
  }
}

TEST_CASE("affine solve round-trips eval") {
  testsupport::Rng rng(20240903);
  for (int iter = 0; iter < 200; ++iter) {
    int rank = 1 + static_cast<int>(iter % 3);
    AffineExp a{testsupport::rand_group(rng, rank),
                testsupport::rand_positive_group(rng, rank),
                testsupport::rand_int(rng, 0, 3)};
    Int n = testsupport::rand_int(rng, 0, 20) + a.start;
    auto back = a.solve(a.eval(n));
    REQUIRE(back.has_value());
    CHECK(*back == n);
  }
}
