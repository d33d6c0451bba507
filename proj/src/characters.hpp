#pragma once

#include <map>
#include <vector>

#include "permutation.hpp"
#include "rational.hpp"

namespace otwb {

// Class function on S_n, values indexed by cycle type.
struct CharacterVector {
  int n = 0;
  std::map<Partition, Rational> values;

  Rational at(const Partition& p) const;

  CharacterVector& operator+=(const CharacterVector& o);
  CharacterVector& operator-=(const CharacterVector& o);
  CharacterVector operator+(const CharacterVector& o) const;
  CharacterVector operator-(const CharacterVector& o) const;
  bool operator==(const CharacterVector& o) const = default;
};

CharacterVector zero_character(int n);
CharacterVector trivial_character(int n);
CharacterVector sign_character(int n);
CharacterVector regular_character(int n);
// V^{(n-1,1)}: chi(g) = fix(g) - 1.
CharacterVector reflection_character(int n);

// Full irreducible table via the Murnaghan-Nakayama rule.  Cached per n.
const std::map<Partition, CharacterVector>& character_table(int n);

Rational inner_product(const CharacterVector& a, const CharacterVector& b);

// Multiplicities of irreducibles; throws if some inner product is not
// an integer (signals a corrupted virtual character upstream).
std::map<Partition, long> decompose(const CharacterVector& a);

CharacterVector restrict_character(const CharacterVector& a);  // n -> n-1
// Induction n-1 -> n via Frobenius reciprocity against the full table.
CharacterVector induce_character(const CharacterVector& a);

CharacterVector tensor(const CharacterVector& a, const CharacterVector& b);
CharacterVector sgn_twist(const CharacterVector& a);

// chi_{Sym^2 V}(g) = (chi(g)^2 + chi(g^2)) / 2.
CharacterVector sym2_character(const CharacterVector& a);

struct GradedCharacter {
  int n = 0;
  std::vector<CharacterVector> coeffs;  // index = degree of t

  void trim();  // drop trailing zero coefficients
  bool operator==(const GradedCharacter& o) const = default;
};

GradedCharacter graded_multiply(const GradedCharacter& a, const GradedCharacter& b);

}  // namespace otwb
