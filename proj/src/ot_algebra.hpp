#pragma once

#include <map>
#include <string>
#include <vector>

#include "characters.hpp"
#include "matrix.hpp"
#include "permutation.hpp"
#include "rational.hpp"

namespace otwb {

// Product of sign-normalized generators u_{ij} with i < j, kept sorted.
// Repeated pairs are allowed before reduction (needed for M_n, where
// u_{ij}^2 is not a relation).
struct OTMonomial {
  std::vector<std::pair<int, int>> pairs;

  int degree() const { return static_cast<int>(pairs.size()); }
  bool square_free() const;
  auto operator<=>(const OTMonomial& o) const = default;
  std::string to_string() const;  // "1" or "u12.u13"
};

enum class AlgebraTag { U, M };

// Sparse exact-rational combination of monomials over a fixed (n, tag).
struct OTElement {
  int n = 0;
  AlgebraTag tag = AlgebraTag::U;
  std::map<OTMonomial, Rational> terms;

  void add_term(const OTMonomial& m, const Rational& c);
  OTElement& operator+=(const OTElement& o);
  OTElement& operator-=(const OTElement& o);
  OTElement operator+(const OTElement& o) const;
  OTElement operator-(const OTElement& o) const;
  OTElement operator*(const Rational& c) const;
  bool operator==(const OTElement& o) const = default;
  bool is_zero() const { return terms.empty(); }
};

OTElement ot_zero(int n, AlgebraTag tag);
OTElement ot_one(int n, AlgebraTag tag);
// u_{ij}; u_{ji} with j < i is stored as -u_{ij} on construction.
OTElement ot_gen(int n, AlgebraTag tag, int i, int j);
// z_i = sum_j u_{ij}.
OTElement ot_z(int n, AlgebraTag tag, int i);

// Raw commutative product, no reduction.  In U, terms acquiring a
// square vanish.
OTElement ot_raw_multiply(const OTElement& a, const OTElement& b);

// Arnold relation generator for i < j < k, sign-normalized:
// u_ij u_jk - u_ik u_jk - u_ij u_ik.  Lies in the defining ideal.
OTElement arnold_element(int n, AlgebraTag tag, int i, int j, int k);

// Per-degree linear-algebra normal forms for U^n or M_n.
//
// For each degree the candidate monomials are enumerated, the degree-d
// slice of the ideal is spanned by relation generators times
// complementary monomials, and its reduced row echelon form fixes a
// complement basis.  For U the complement must come out as the nbc
// monomials; anything else signals a relation-generation bug.  For M
// the basis is the set of non-pivot monomials under degrevlex on pairs
// ordered by (j, i).
class NormalFormTable {
 public:
  NormalFormTable(int n, AlgebraTag tag, int max_degree);

  // Builds any missing degrees up to max_degree.
  void extend(int max_degree);

  int n() const { return n_; }
  AlgebraTag tag() const { return tag_; }
  int max_degree() const { return max_degree_; }

  const std::vector<OTMonomial>& basis(int degree) const;
  int dim(int degree) const { return static_cast<int>(basis(degree).size()); }

  // Expansion of a monomial over the degree basis.
  const std::vector<std::pair<int, Rational>>& monomial_nf(const OTMonomial& m) const;

 private:
  struct DegreeData {
    std::vector<OTMonomial> basis;
    std::map<OTMonomial, std::vector<std::pair<int, Rational>>> nf;
  };
  void build_degree(int d);

  int n_;
  AlgebraTag tag_;
  int max_degree_;
  std::vector<DegreeData> degrees_;
};

// Linear idempotent projection onto the basis monomials.
OTElement normal_form(const OTElement& x, const NormalFormTable& table);

OTElement ot_multiply(const OTElement& a, const OTElement& b, const NormalFormTable& table);

// Degree-d nbc monomials of U^n: at most one generator u_{i,k} per
// column k.  Count c(n, n-d).
std::vector<OTMonomial> nbc_monomials(int n, int d);

// u(w): product over min-first cycles of u_{c1,c2} u_{c2,c3} ...
// A single signed monomial; degree n - #cycles.
OTElement u_of_w(const Permutation& w, AlgebraTag tag = AlgebraTag::U);

// Matrix expressing {u(w) : w in S_n with n-d cycles} in nbc
// coordinates; square by construction, invertible per the basis claim.
RationalMatrix u_basis_matrix(int n, int d, const NormalFormTable& table);

// Subscript relabeling action, a ring automorphism.
OTElement act(const Permutation& g, const OTElement& x, const NormalFormTable& table);

// Per degree and class: trace of act(g, .) on the degree basis.
GradedCharacter ot_graded_character(const NormalFormTable& table);

}  // namespace otwb
