#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "whitehouse.hpp"

using namespace otwb;

TEST_CASE("three-index generators by hand in the smallest case") {
  NormalFormTable table(3, AlgebraTag::U, 2);
  OTElement v123 = v_elem(1, 2, 3, table);
  OTElement expected = normal_form(
      ot_gen(3, AlgebraTag::U, 1, 2) + ot_gen(3, AlgebraTag::U, 2, 3) + ot_gen(3, AlgebraTag::U, 3, 1),
      table);
  CHECK(v123 == expected);
  CHECK(v_elem(2, 1, 3, table) == v123 * Rational(-1));
  CHECK_THROWS_AS(v_elem(1, 1, 3, table), std::invalid_argument);
}

TEST_CASE("the embedding sends generators to three-index elements") {
  NormalFormTable table(3, AlgebraTag::U, 2);
  CHECK(phi(ot_gen(2, AlgebraTag::U, 1, 2), table) == v_elem(1, 2, 3, table));
}

TEST_CASE("the retraction undoes the embedding") {
  NormalFormTable t4(4, AlgebraTag::U, 3);
  NormalFormTable t3(3, AlgebraTag::U, 2);
  for (int i = 1; i <= 3; ++i)
    for (int j = i + 1; j <= 3; ++j) {
      OTElement u = ot_gen(3, AlgebraTag::U, i, j);
      CHECK(psi(v_elem(i, j, 4, t4), t3) == normal_form(u, t3));
      CHECK(psi(phi(u, t4), t3) == normal_form(u, t3));
    }
}

TEST_CASE("all four generator identities hold exhaustively for n=4") {
  NormalFormTable table(4, AlgebraTag::U, 3);
  CHECK(v_identity_check(4, table).empty());
}

TEST_CASE("subalgebra dimensions for n=4") {
  NormalFormTable table(4, AlgebraTag::U, 3);
  long expected[] = {1, 3, 2};  // c(3, 3-d)
  long total = 0;
  for (int d = 0; d <= 2; ++d) {
    CHECK(static_cast<long>(v_subalgebra_basis(4, d, table).size()) == expected[d]);
    RationalMatrix m = v_basis_matrix(4, d, table);
    CHECK(m.rank() == expected[d]);
    total += m.rank();
  }
  CHECK(total == 6);
}

TEST_CASE("permutation-indexed elements of the subalgebra") {
  NormalFormTable table(4, AlgebraTag::U, 3);
  CHECK(v_of_w(Permutation::identity(3), table) == ot_one(4, AlgebraTag::U));
  CHECK(v_of_w(Permutation({2, 1, 3}), table) == v_elem(1, 2, 4, table));
}

TEST_CASE("graded character of the subalgebra for n=3") {
  NormalFormTable table(3, AlgebraTag::U, 2);
  GradedCharacter gc = v_graded_character(3, table);
  REQUIRE(gc.coeffs.size() >= 2);
  Partition id_class{{1, 1, 1}};
  CHECK(gc.coeffs[0].at(id_class) == 1);
  CHECK(gc.coeffs[1].at(id_class) == 1);
  CHECK(gc.coeffs[0] == trivial_character(3));
}
