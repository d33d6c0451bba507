#pragma once

#include <map>

#include "characters.hpp"
#include "matrix.hpp"
#include "permutation.hpp"
#include "rational.hpp"

namespace otwb {

// Sparse exact element of Q S_n.  Zero coefficients are never stored.
class GroupAlgebraElement {
 public:
  explicit GroupAlgebraElement(int n) : n_(n) {}

  static GroupAlgebraElement unit(int n);
  static GroupAlgebraElement of(const Permutation& w, Rational c = 1);

  int n() const { return n_; }
  const std::map<Permutation, Rational>& coeffs() const { return coeffs_; }
  Rational coeff(const Permutation& w) const;

  void add_term(const Permutation& w, const Rational& c);

  GroupAlgebraElement& operator+=(const GroupAlgebraElement& o);
  GroupAlgebraElement& operator-=(const GroupAlgebraElement& o);
  GroupAlgebraElement operator+(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator-(const GroupAlgebraElement& o) const;
  GroupAlgebraElement operator*(const Rational& c) const;
  bool operator==(const GroupAlgebraElement& o) const;

  bool is_zero() const { return coeffs_.empty(); }
  bool is_idempotent() const;

 private:
  int n_;
  std::map<Permutation, Rational> coeffs_;
};

// Convolution product: bilinear extension of composition.
GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b);

// s_{i,n-i}: sum of sgn(w) w over w increasing on positions 1..i and
// i+1..n.  Support size C(n,i).
GroupAlgebraElement shuffle_element(int n, int i);

// s_n = sum_{i=1}^{n-1} s_{i,n-i}.
GroupAlgebraElement s_total(int n);

// Spectral projections of s_n onto the eigenvalues 2^j - 2, j = 1..n,
// by Lagrange interpolation.  Index j-1 holds e^(j).
std::vector<GroupAlgebraElement> eulerian_idempotents(int n);

// (1/n) sum_i sgn(c)^i c^i for the n-cycle c = (1 2 ... n).  The
// unnormalized sum squares to n times itself; we store the normalized,
// literally idempotent version.
GroupAlgebraElement lambda_idempotent(int n);

// Embed an element of Q S_{n-1} into Q S_n via the inclusion fixing n.
GroupAlgebraElement embed(const GroupAlgebraElement& a, int n);

// Lambda_n * embed(e^(j)_{n-1}) for j = 1..n-1.
std::vector<GroupAlgebraElement> whitehouse_idempotents(int n);

// Character of the right module e Q S_n: a basis is read off from the
// row-reduced span of {e x : x in S_n}; the value at a class
// representative g is the trace of right multiplication by g on it.
CharacterVector module_character(const GroupAlgebraElement& e);

}  // namespace otwb
