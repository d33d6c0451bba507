#include "group_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace otwb {

GroupAlgebraElement GroupAlgebraElement::unit(int n) {
  return of(Permutation::identity(n));
}

GroupAlgebraElement GroupAlgebraElement::of(const Permutation& w, Rational c) {
  GroupAlgebraElement e(w.n());
  e.add_term(w, c);
  return e;
}

Rational GroupAlgebraElement::coeff(const Permutation& w) const {
  auto it = coeffs_.find(w);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

void GroupAlgebraElement::add_term(const Permutation& w, const Rational& c) {
  if (w.n() != n_) throw std::invalid_argument("add_term: size mismatch");
  auto it = coeffs_.find(w);
  if (it == coeffs_.end()) {
    if (c != 0) coeffs_.emplace(w, c);
  } else {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

GroupAlgebraElement& GroupAlgebraElement::operator+=(const GroupAlgebraElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("group algebra sum: size mismatch");
  for (const auto& [w, c] : o.coeffs_) add_term(w, c);
  return *this;
}

GroupAlgebraElement& GroupAlgebraElement::operator-=(const GroupAlgebraElement& o) {
  if (n_ != o.n_) throw std::invalid_argument("group algebra difference: size mismatch");
  for (const auto& [w, c] : o.coeffs_) add_term(w, -c);
  return *this;
}

GroupAlgebraElement GroupAlgebraElement::operator+(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r = *this;
  r += o;
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator-(const GroupAlgebraElement& o) const {
  GroupAlgebraElement r = *this;
  r -= o;
  return r;
}

GroupAlgebraElement GroupAlgebraElement::operator*(const Rational& c) const {
  GroupAlgebraElement r(n_);
  if (c == 0) return r;
  for (const auto& [w, v] : coeffs_) r.coeffs_.emplace(w, v * c);
  return r;
}

bool GroupAlgebraElement::operator==(const GroupAlgebraElement& o) const {
  return n_ == o.n_ && coeffs_ == o.coeffs_;
}

bool GroupAlgebraElement::is_idempotent() const {
  return ga_multiply(*this, *this) == *this;
}

GroupAlgebraElement ga_multiply(const GroupAlgebraElement& a, const GroupAlgebraElement& b) {
  if (a.n() != b.n()) throw std::invalid_argument("ga_multiply: size mismatch");
  GroupAlgebraElement r(a.n());
  for (const auto& [u, cu] : a.coeffs())
    for (const auto& [v, cv] : b.coeffs()) r.add_term(compose(u, v), cu * cv);
  return r;
}

GroupAlgebraElement shuffle_element(int n, int i) {
  if (i < 1 || i > n - 1) throw std::out_of_range("shuffle_element: i out of range");
  GroupAlgebraElement r(n);
  for (const auto& w : all_permutations(n)) {
    const auto& word = w.word();
    bool ok = true;
    for (int k = 1; k < i && ok; ++k) ok = word[k - 1] < word[k];
    for (int k = i + 1; k < n && ok; ++k) ok = word[k - 1] < word[k];
    if (ok) r.add_term(w, sign(w));
  }
  return r;
}

GroupAlgebraElement s_total(int n) {
  if (n < 2) throw std::invalid_argument("s_total: n >= 2 required");
  GroupAlgebraElement r(n);
  for (int i = 1; i <= n - 1; ++i) r += shuffle_element(n, i);
  return r;
}

std::vector<GroupAlgebraElement> eulerian_idempotents(int n) {
  if (n < 1) throw std::invalid_argument("eulerian_idempotents: n >= 1 required");
  if (n == 1) return {GroupAlgebraElement::unit(1)};
  GroupAlgebraElement s = s_total(n);
  std::vector<Rational> eig;
  for (int j = 1; j <= n; ++j) eig.push_back(rat((1L << j) - 2));
  std::vector<GroupAlgebraElement> out;
  for (int j = 0; j < n; ++j) {
    GroupAlgebraElement e = GroupAlgebraElement::unit(n);
    for (int i = 0; i < n; ++i) {
      if (i == j) continue;
      GroupAlgebraElement factor = s - GroupAlgebraElement::unit(n) * eig[i];
      e = ga_multiply(e, factor) * (1 / (eig[j] - eig[i]));
    }
    out.push_back(std::move(e));
  }
  return out;
}

GroupAlgebraElement lambda_idempotent(int n) {
  if (n < 1) throw std::invalid_argument("lambda_idempotent: n >= 1 required");
  std::vector<int> cyc(n);
  for (int i = 0; i < n; ++i) cyc[i] = i + 1;
  Permutation c = Permutation::from_cycles(n, {cyc});
  int sgn_c = sign(c);
  GroupAlgebraElement r(n);
  Permutation p = Permutation::identity(n);
  int s = 1;
  for (int i = 0; i < n; ++i) {
    r.add_term(p, rat(s, n));
    p = compose(p, c);
    s *= sgn_c;
  }
  return r;
}

GroupAlgebraElement embed(const GroupAlgebraElement& a, int n) {
  if (n < a.n()) throw std::invalid_argument("embed: target smaller than source");
  GroupAlgebraElement r(n);
  for (const auto& [w, c] : a.coeffs()) {
    std::vector<int> word = w.word();
    for (int v = w.n() + 1; v <= n; ++v) word.push_back(v);
    r.add_term(Permutation(std::move(word)), c);
  }
  return r;
}

std::vector<GroupAlgebraElement> whitehouse_idempotents(int n) {
  if (n < 2) throw std::invalid_argument("whitehouse_idempotents: n >= 2 required");
  GroupAlgebraElement lam = lambda_idempotent(n);
  std::vector<GroupAlgebraElement> out;
  for (const auto& e : eulerian_idempotents(n - 1))
    out.push_back(ga_multiply(lam, embed(e, n)));
  return out;
}

CharacterVector module_character(const GroupAlgebraElement& e) {
  if (!e.is_idempotent()) throw std::invalid_argument("module_character: element is not idempotent");
  int n = e.n();
  auto perms = all_permutations(n);
  int N = static_cast<int>(perms.size());
  std::map<Permutation, int> index;
  for (int i = 0; i < N; ++i) index[perms[i]] = i;

  // Span of {e x : x in S_n} in lexicographic permutation coordinates.
  RationalMatrix span(N, N);
  for (int col = 0; col < N; ++col)
    for (const auto& [u, c] : e.coeffs()) span.at(col, index[compose(u, perms[col])]) = c;
  auto [basis, pivots] = span.rref();
  int r = static_cast<int>(pivots.size());

  // The RREF rows have unit pivot coordinates, so the coordinates of
  // b_i g on the basis can be read off at the pivot columns.  Right
  // multiplication by g sends the coefficient at x to position x g, so
  // (b g)[y] = b[y g^{-1}].
  CharacterVector chi = zero_character(n);
  for (const auto& cls : conjugacy_classes(n)) {
    Permutation ginv = cls.rep.inverse();
    Rational t = 0;
    for (int i = 0; i < r; ++i) t += basis.at(i, index[compose(perms[pivots[i]], ginv)]);
    chi.values[cls.type] = t;
  }
  return chi;
}

}  // namespace otwb
