#pragma once

#include "ot_algebra.hpp"

namespace otwb {

// v_{ijk} = u_ij + u_jk + u_ki in normal form; antisymmetric in (i,j,k).
OTElement v_elem(int i, int j, int k, const NormalFormTable& table);

// Algebra map U^{n-1} -> U^n sending u_ij to v_{ijn}.  `table` is the
// normal-form table of the target U^n.
OTElement phi(const OTElement& x, const NormalFormTable& table);

// Algebra map U^n -> U^{n-1} killing every generator touching n.
// `target` is the table of U^{n-1}.  Satisfies psi(phi(x)) = x.
OTElement psi(const OTElement& x, const NormalFormTable& target);

// Exhaustive check of the four v-identities over all index tuples:
//   (a) v_ijk^2 = 0
//   (b) antisymmetry under all of S_3
//   (c) v_ijl v_jkl + v_jkl v_kil + v_kil v_ijl = 0
//   (d) v_ijk - v_ijl + v_ikl - v_jkl = 0
// Returns a description of every failing tuple (empty = all pass).
std::vector<std::string> v_identity_check(int n, const NormalFormTable& table);

// phi-images of the degree-d nbc basis of U^{n-1}; a basis of (V^n)_d.
std::vector<OTElement> v_subalgebra_basis(int n, int d, const NormalFormTable& table);

// v(w) := phi(u(w)) for w in S_{n-1}.
OTElement v_of_w(const Permutation& w, const NormalFormTable& table);

// Rows express the degree-d V^n basis in nbc coordinates of (U^n)_d.
RationalMatrix v_basis_matrix(int n, int d, const NormalFormTable& table);

// S_n-character of each (V^n)_d, computed by solving act(g, basis)
// against the basis matrix; throws if some act(g, .) image leaves the
// span (which would contradict S_n-stability).
GradedCharacter v_graded_character(int n, const NormalFormTable& table);

}  // namespace otwb
