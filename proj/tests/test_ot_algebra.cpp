#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ot_algebra.hpp"

using namespace otwb;

namespace {

OTElement mono(int n, AlgebraTag tag, std::vector<std::pair<int, int>> pairs, Rational c = 1) {
  OTMonomial m{std::move(pairs)};
  OTElement x = ot_zero(n, tag);
  x.add_term(m, c);
  return x;
}

}  // namespace

TEST_CASE("generators are sign-normalized") {
  CHECK(ot_gen(3, AlgebraTag::U, 2, 1) == mono(3, AlgebraTag::U, {{1, 2}}, -1));
  CHECK_THROWS_AS(ot_gen(3, AlgebraTag::U, 1, 1), std::invalid_argument);
}

TEST_CASE("squares vanish on multiplication in the square-free algebra") {
  OTElement u12 = ot_gen(3, AlgebraTag::U, 1, 2);
  CHECK(ot_raw_multiply(u12, u12).is_zero());
  // ... but not before reduction in the bigger quotient
  OTElement m12 = ot_gen(3, AlgebraTag::M, 1, 2);
  CHECK(!ot_raw_multiply(m12, m12).is_zero());
}

TEST_CASE("graded dimensions for small n") {
  NormalFormTable t3(3, AlgebraTag::U, 2);
  CHECK(t3.dim(0) == 1);
  CHECK(t3.dim(1) == 3);
  CHECK(t3.dim(2) == 2);
  NormalFormTable t4(4, AlgebraTag::U, 3);
  long dims4[] = {1, 6, 11, 6};
  for (int d = 0; d <= 3; ++d) CHECK(t4.dim(d) == dims4[d]);
}

TEST_CASE("a hand reduction in degree 2") {
  NormalFormTable table(3, AlgebraTag::U, 2);
  OTElement lhs = normal_form(mono(3, AlgebraTag::U, {{1, 3}, {2, 3}}), table);
  OTElement rhs = mono(3, AlgebraTag::U, {{1, 2}, {2, 3}}) - mono(3, AlgebraTag::U, {{1, 2}, {1, 3}});
  CHECK(lhs == rhs);
}

TEST_CASE("relation generators reduce to zero") {
  NormalFormTable table(4, AlgebraTag::U, 3);
  for (int i = 1; i <= 4; ++i)
    for (int j = i + 1; j <= 4; ++j)
      for (int k = j + 1; k <= 4; ++k)
        CHECK(normal_form(arnold_element(4, AlgebraTag::U, i, j, k), table).is_zero());
}

TEST_CASE("column-sum relations hold in the quotient with stars") {
  NormalFormTable table(4, AlgebraTag::M, 2);
  for (int i = 1; i <= 4; ++i) CHECK(normal_form(ot_z(4, AlgebraTag::M, i), table).is_zero());
}

TEST_CASE("graded dimensions of the star quotient for n=3") {
  NormalFormTable table(3, AlgebraTag::M, 2);
  CHECK(table.dim(0) == 1);
  CHECK(table.dim(1) == 1);
  CHECK(table.dim(2) == 0);
}

TEST_CASE("column-restricted monomial counts") {
  for (int d = 0; d <= 4; ++d)
    CHECK(static_cast<long>(nbc_monomials(5, d).size()) == stirling_cycle_count(5, 5 - d));
  CHECK_THROWS_AS(nbc_monomials(5, 5), std::out_of_range);
}

TEST_CASE("monomials from permutations") {
  CHECK(u_of_w(Permutation({2, 1})) == mono(2, AlgebraTag::U, {{1, 2}}));
  // the 3-cycle 1 -> 3 -> 2 -> 1 reads off u_13 u_32 = -u_13 u_23
  CHECK(u_of_w(Permutation({3, 1, 2})) == mono(3, AlgebraTag::U, {{1, 3}, {2, 3}}, -1));
  CHECK(u_of_w(Permutation::identity(3)) == ot_one(3, AlgebraTag::U));
}

TEST_CASE("permutation-indexed elements form bases") {
  NormalFormTable table(4, AlgebraTag::U, 3);
  for (int d = 0; d <= 3; ++d) {
    RationalMatrix m = u_basis_matrix(4, d, table);
    CHECK(m.rows() == table.dim(d));
    CHECK(m.rank() == m.rows());
  }
}

TEST_CASE("relabeling acts as a ring automorphism") {
  NormalFormTable table(4, AlgebraTag::U, 3);
  Permutation g({2, 3, 1, 4});
  CHECK(act(g, ot_gen(4, AlgebraTag::U, 1, 3), table) == ot_gen(4, AlgebraTag::U, 2, 1));
  OTElement x = normal_form(mono(4, AlgebraTag::U, {{1, 2}, {3, 4}}) + ot_gen(4, AlgebraTag::U, 1, 4),
                            table);
  OTElement y = normal_form(mono(4, AlgebraTag::U, {{2, 3}}), table);
  CHECK(act(g, ot_multiply(x, y, table), table) ==
        ot_multiply(act(g, x, table), act(g, y, table), table));
}

TEST_CASE("graded character dimensions at the identity class") {
  NormalFormTable table(4, AlgebraTag::U, 3);
  GradedCharacter gc = ot_graded_character(table);
  Partition id_class{{1, 1, 1, 1}};
  for (int d = 0; d <= 3; ++d) CHECK(gc.coeffs[d].at(id_class) == Rational(table.dim(d)));
}

TEST_CASE("normal form is a linear idempotent projection") {
  NormalFormTable table(4, AlgebraTag::U, 3);
  OTElement x = mono(4, AlgebraTag::U, {{1, 4}, {2, 4}, {3, 4}}, rat(2, 3)) -
                mono(4, AlgebraTag::U, {{1, 2}, {1, 3}, {1, 4}});
  OTElement once = normal_form(x, table);
  CHECK(normal_form(once, table) == once);
}

TEST_CASE("tables can grow degree by degree") {
  NormalFormTable table(4, AlgebraTag::U, 1);
  CHECK(table.max_degree() == 1);
  table.extend(3);
  CHECK(table.dim(3) == 6);
  CHECK_THROWS_AS(table.basis(4), std::out_of_range);
}
