#include "whitehouse.hpp"

#include <stdexcept>

namespace otwb {

OTElement v_elem(int i, int j, int k, const NormalFormTable& table) {
  int n = table.n();
  if (i == j || j == k || i == k) throw std::invalid_argument("v_elem: repeated index");
  OTElement raw = ot_gen(n, table.tag(), i, j) + ot_gen(n, table.tag(), j, k) +
                  ot_gen(n, table.tag(), k, i);
  return normal_form(raw, table);
}

OTElement phi(const OTElement& x, const NormalFormTable& table) {
  int n = table.n();
  if (x.n != n - 1) throw std::invalid_argument("phi: source must live over n-1 symbols");
  OTElement out = ot_zero(n, table.tag());
  for (const auto& [m, c] : x.terms) {
    OTElement prod = ot_one(n, table.tag());
    for (const auto& [i, j] : m.pairs) {
      OTElement v = ot_gen(n, table.tag(), i, j) + ot_gen(n, table.tag(), j, n) +
                    ot_gen(n, table.tag(), n, i);
      prod = ot_raw_multiply(prod, v);
    }
    out += prod * c;
  }
  return normal_form(out, table);
}

OTElement psi(const OTElement& x, const NormalFormTable& target) {
  int n = x.n;
  if (target.n() != n - 1) throw std::invalid_argument("psi: target must live over n-1 symbols");
  OTElement out = ot_zero(n - 1, x.tag);
  for (const auto& [m, c] : x.terms) {
    bool touches_n = false;
    for (const auto& [i, j] : m.pairs)
      if (i == n || j == n) touches_n = true;
    if (!touches_n) out.add_term(m, c);
  }
  return normal_form(out, target);
}

std::vector<std::string> v_identity_check(int n, const NormalFormTable& table) {
  std::vector<std::string> failures;
  auto tuple_name = [](const char* id, std::initializer_list<int> idx) {
    std::string s = std::string("(") + id + ")";
    for (int v : idx) s += " " + std::to_string(v);
    return s;
  };

  // (a) and (b) over all distinct triples.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k) {
        if (i == j || j == k || i == k) continue;
        OTElement v = v_elem(i, j, k, table);
        if (!ot_multiply(v, v, table).is_zero()) failures.push_back(tuple_name("a", {i, j, k}));
        if (i < j && j < k) {
          int idx[3] = {i, j, k};
          for (const auto& s : all_permutations(3)) {
            OTElement lhs = v_elem(idx[s(1) - 1], idx[s(2) - 1], idx[s(3) - 1], table);
            OTElement rhs = v * Rational(sign(s));
            if (!(lhs == rhs)) failures.push_back(tuple_name("b", {i, j, k}));
          }
        }
      }

  // (c) and (d) over all distinct quadruples.
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (i == j || i == k || i == l || j == k || j == l || k == l) continue;
          OTElement vij = v_elem(i, j, l, table);
          OTElement vjk = v_elem(j, k, l, table);
          OTElement vki = v_elem(k, i, l, table);
          OTElement c3 = ot_multiply(vij, vjk, table) + ot_multiply(vjk, vki, table) +
                         ot_multiply(vki, vij, table);
          if (!c3.is_zero()) failures.push_back(tuple_name("c", {i, j, k, l}));
          OTElement d4 = v_elem(i, j, k, table) - vij + v_elem(i, k, l, table) -
                         v_elem(j, k, l, table);
          if (!d4.is_zero()) failures.push_back(tuple_name("d", {i, j, k, l}));
        }
  return failures;
}

std::vector<OTElement> v_subalgebra_basis(int n, int d, const NormalFormTable& table) {
  std::vector<OTElement> out;
  for (const auto& b : nbc_monomials(n - 1, d)) {
    OTElement e = ot_zero(n - 1, table.tag());
    e.terms.emplace(b, 1);
    out.push_back(phi(e, table));
  }
  return out;
}

OTElement v_of_w(const Permutation& w, const NormalFormTable& table) {
  return phi(u_of_w(w, table.tag()), table);
}

RationalMatrix v_basis_matrix(int n, int d, const NormalFormTable& table) {
  auto vbasis = v_subalgebra_basis(n, d, table);
  const auto& ubasis = table.basis(d);
  std::map<OTMonomial, int> bi;
  for (size_t i = 0; i < ubasis.size(); ++i) bi[ubasis[i]] = static_cast<int>(i);
  RationalMatrix m(static_cast<int>(vbasis.size()), static_cast<int>(ubasis.size()));
  for (size_t r = 0; r < vbasis.size(); ++r)
    for (const auto& [mon, c] : vbasis[r].terms) m.at(static_cast<int>(r), bi.at(mon)) = c;
  return m;
}

GradedCharacter v_graded_character(int n, const NormalFormTable& table) {
  GradedCharacter gc{n, {}};
  for (int d = 0; d <= n - 2; ++d) {
    auto vbasis = v_subalgebra_basis(n, d, table);
    int r = static_cast<int>(vbasis.size());
    const auto& ubasis = table.basis(d);
    int N = static_cast<int>(ubasis.size());
    std::map<OTMonomial, int> bi;
    for (int i = 0; i < N; ++i) bi[ubasis[i]] = i;

    RationalMatrix bt(N, r);  // columns = V basis vectors
    for (int c = 0; c < r; ++c)
      for (const auto& [mon, v] : vbasis[c].terms) bt.at(bi.at(mon), c) = v;

    CharacterVector chi = zero_character(n);
    for (const auto& cls : conjugacy_classes(n)) {
      RationalMatrix yt(N, r);  // columns = images act(g, basis vector)
      for (int c = 0; c < r; ++c) {
        OTElement img = act(cls.rep, vbasis[c], table);
        for (const auto& [mon, v] : img.terms) yt.at(bi.at(mon), c) = v;
      }
      auto coords = bt.solve(yt);
      if (!coords)
        throw std::runtime_error("v_graded_character: action left the span of V^n in degree " +
                                 std::to_string(d));
      chi.values[cls.type] = coords->trace();
    }
    gc.coeffs.push_back(std::move(chi));
  }
  return gc;
}

}  // namespace otwb
