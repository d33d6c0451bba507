#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "matrix.hpp"

using namespace otwb;

TEST_CASE("rref of an invertible matrix is the identity") {
  RationalMatrix m(2, 2);
  m.at(0, 0) = 1;
  m.at(0, 1) = 2;
  m.at(1, 0) = 3;
  m.at(1, 1) = 4;
  auto [r, pivots] = m.rref();
  CHECK(r == RationalMatrix::identity(2));
  CHECK(pivots == std::vector<int>{0, 1});
  CHECK(m.rank() == 2);
}

TEST_CASE("rank detects dependent rows") {
  RationalMatrix m(3, 3);
  for (int j = 0; j < 3; ++j) {
    m.at(0, j) = j + 1;
    m.at(1, j) = 2 * (j + 1);
    m.at(2, j) = rat(1, j + 2);
  }
  CHECK(m.rank() == 2);
}

TEST_CASE("rref is idempotent") {
  RationalMatrix m(3, 4);
  int v = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 4; ++j) m.at(i, j) = rat(++v, 7);
  auto [r1, p1] = m.rref();
  auto [r2, p2] = r1.rref();
  CHECK(r1 == r2);
  CHECK(p1 == p2);
}

TEST_CASE("solve returns the exact solution or nothing") {
  RationalMatrix m(2, 2);
  m.at(0, 0) = 2;
  m.at(0, 1) = 1;
  m.at(1, 0) = 1;
  m.at(1, 1) = 3;
  RationalMatrix b(2, 1);
  b.at(0, 0) = 4;
  b.at(1, 0) = 7;
  auto x = m.solve(b);
  REQUIRE(x.has_value());
  CHECK(x->at(0, 0) == 1);
  CHECK(x->at(1, 0) == 2);

  RationalMatrix sing(2, 2);
  sing.at(0, 0) = 1;
  sing.at(0, 1) = 1;
  sing.at(1, 0) = 2;
  sing.at(1, 1) = 2;
  RationalMatrix c(2, 1);
  c.at(0, 0) = 0;
  c.at(1, 0) = 1;
  CHECK(!sing.solve(c).has_value());
}

TEST_CASE("trace requires a square matrix") {
  RationalMatrix m(2, 3);
  CHECK_THROWS_AS(m.trace(), std::invalid_argument);
  RationalMatrix s(2, 2);
  s.at(0, 0) = rat(1, 2);
  s.at(1, 1) = rat(1, 3);
  CHECK(s.trace() == rat(5, 6));
}

TEST_CASE("matrix product") {
  RationalMatrix a(1, 2), b(2, 1);
  a.at(0, 0) = rat(1, 2);
  a.at(0, 1) = 3;
  b.at(0, 0) = 4;
  b.at(1, 0) = rat(1, 3);
  CHECK((a * b).at(0, 0) == 3);
}
