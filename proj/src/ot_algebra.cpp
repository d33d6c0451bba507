#include "ot_algebra.hpp"

#include <algorithm>
#include <stdexcept>

namespace otwb {

bool OTMonomial::square_free() const {
  for (size_t i = 1; i < pairs.size(); ++i)
    if (pairs[i] == pairs[i - 1]) return false;
  return true;
}

std::string OTMonomial::to_string() const {
  if (pairs.empty()) return "1";
  std::string s;
  for (size_t i = 0; i < pairs.size(); ++i) {
    if (i) s += '.';
    s += "u" + std::to_string(pairs[i].first) + std::to_string(pairs[i].second);
  }
  return s;
}

void OTElement::add_term(const OTMonomial& m, const Rational& c) {
  auto it = terms.find(m);
  if (it == terms.end()) {
    if (c != 0) terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

OTElement& OTElement::operator+=(const OTElement& o) {
  if (n != o.n || tag != o.tag) throw std::invalid_argument("ot sum: algebra mismatch");
  for (const auto& [m, c] : o.terms) add_term(m, c);
  return *this;
}

OTElement& OTElement::operator-=(const OTElement& o) {
  if (n != o.n || tag != o.tag) throw std::invalid_argument("ot difference: algebra mismatch");
  for (const auto& [m, c] : o.terms) add_term(m, -c);
  return *this;
}

OTElement OTElement::operator+(const OTElement& o) const {
  OTElement r = *this;
  r += o;
  return r;
}

OTElement OTElement::operator-(const OTElement& o) const {
  OTElement r = *this;
  r -= o;
  return r;
}

OTElement OTElement::operator*(const Rational& c) const {
  OTElement r{n, tag, {}};
  if (c == 0) return r;
  for (const auto& [m, v] : terms) r.terms.emplace(m, v * c);
  return r;
}

OTElement ot_zero(int n, AlgebraTag tag) { return OTElement{n, tag, {}}; }

OTElement ot_one(int n, AlgebraTag tag) {
  OTElement r{n, tag, {}};
  r.terms.emplace(OTMonomial{}, 1);
  return r;
}

OTElement ot_gen(int n, AlgebraTag tag, int i, int j) {
  if (i == j || i < 1 || j < 1 || i > n || j > n)
    throw std::invalid_argument("ot_gen: bad generator indices");
  OTElement r{n, tag, {}};
  OTMonomial m{{{std::min(i, j), std::max(i, j)}}};
  r.terms.emplace(m, i < j ? 1 : -1);
  return r;
}

OTElement ot_z(int n, AlgebraTag tag, int i) {
  OTElement r = ot_zero(n, tag);
  for (int j = 1; j <= n; ++j)
    if (j != i) r += ot_gen(n, tag, i, j);
  return r;
}

namespace {

// Merge sorted pair lists; in U a repeated pair kills the term.
bool merge_monomials(const OTMonomial& a, const OTMonomial& b, AlgebraTag tag, OTMonomial& out) {
  out.pairs.clear();
  out.pairs.reserve(a.pairs.size() + b.pairs.size());
  std::merge(a.pairs.begin(), a.pairs.end(), b.pairs.begin(), b.pairs.end(),
             std::back_inserter(out.pairs));
  if (tag == AlgebraTag::U && !out.square_free()) return false;
  return true;
}

}  // namespace

OTElement ot_raw_multiply(const OTElement& a, const OTElement& b) {
  if (a.n != b.n || a.tag != b.tag) throw std::invalid_argument("ot product: algebra mismatch");
  OTElement r{a.n, a.tag, {}};
  OTMonomial m;
  for (const auto& [ma, ca] : a.terms)
    for (const auto& [mb, cb] : b.terms)
      if (merge_monomials(ma, mb, a.tag, m)) r.add_term(m, ca * cb);
  return r;
}

OTElement arnold_element(int n, AlgebraTag tag, int i, int j, int k) {
  OTElement r = ot_raw_multiply(ot_gen(n, tag, i, j), ot_gen(n, tag, j, k));
  r -= ot_raw_multiply(ot_gen(n, tag, i, k), ot_gen(n, tag, j, k));
  r -= ot_raw_multiply(ot_gen(n, tag, i, j), ot_gen(n, tag, i, k));
  return r;
}

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
  std::vector<std::pair<int, int>> p;
  for (int i = 1; i < n; ++i)
    for (int j = i + 1; j <= n; ++j) p.emplace_back(i, j);
  return p;
}

// Variable order used for the M_n monomial order: pairs sorted by (j, i).
int var_index(const std::pair<int, int>& p) {
  return (p.second - 1) * (p.second - 2) / 2 + (p.first - 1);
}

std::vector<int> exponent_vector(const OTMonomial& m, int nvars) {
  std::vector<int> e(nvars, 0);
  for (const auto& p : m.pairs) ++e[var_index(p)];
  return e;
}

// Degrevlex on equal degrees: a > b iff the last nonzero entry of
// exp(a) - exp(b) is negative.
bool degrevlex_greater(const OTMonomial& a, const OTMonomial& b, int nvars) {
  std::vector<int> ea = exponent_vector(a, nvars), eb = exponent_vector(b, nvars);
  for (int k = nvars - 1; k >= 0; --k)
    if (ea[k] != eb[k]) return ea[k] < eb[k];
  return false;
}

void enumerate_monomials_rec(const std::vector<std::pair<int, int>>& pairs, size_t from, int d,
                             bool allow_repeats, OTMonomial& cur, std::vector<OTMonomial>& out) {
  if (d == 0) {
    out.push_back(cur);
    return;
  }
  for (size_t k = from; k < pairs.size(); ++k) {
    cur.pairs.push_back(pairs[k]);
    enumerate_monomials_rec(pairs, allow_repeats ? k : k + 1, d - 1, allow_repeats, cur, out);
    cur.pairs.pop_back();
  }
}

std::vector<OTMonomial> enumerate_monomials(int n, int d, AlgebraTag tag) {
  std::vector<OTMonomial> out;
  OTMonomial cur;
  enumerate_monomials_rec(all_pairs(n), 0, d, tag == AlgebraTag::M, cur, out);
  return out;
}

// Sparse incremental reduced row echelon form over Q, used only for
// building normal-form tables, where relation rows have a handful of
// nonzeros each.
class SparseEliminator {
 public:
  using Row = std::vector<std::pair<int, Rational>>;  // sorted by column

  bool add(Row r) {
    while (!r.empty()) {
      int c = r.front().first;
      auto it = rows_.find(c);
      if (it == rows_.end()) {
        Rational inv = 1 / r.front().second;
        for (auto& [col, v] : r) v *= inv;
        rows_.emplace(c, std::move(r));
        return true;
      }
      axpy(r, -r.front().second, it->second);
    }
    return false;
  }

  // Full back-substitution; afterwards each row is supported on its
  // pivot plus non-pivot columns only.  Processing pivots in
  // descending order means every substituted row is already fully
  // reduced, so one pass per row suffices.
  void finalize() {
    for (auto it = rows_.rbegin(); it != rows_.rend(); ++it) {
      Row& row = it->second;
      Row subs;
      for (size_t k = 1; k < row.size(); ++k)
        if (rows_.count(row[k].first)) subs.push_back(row[k]);
      for (const auto& [c2, v] : subs) axpy(row, -v, rows_.at(c2));
    }
  }

  const std::map<int, Row>& rows() const { return rows_; }

 private:
  static void axpy(Row& r, const Rational& c, const Row& other) {
    Row out;
    out.reserve(r.size() + other.size());
    size_t a = 0, b = 0;
    while (a < r.size() || b < other.size()) {
      if (b == other.size() || (a < r.size() && r[a].first < other[b].first)) {
        out.push_back(r[a++]);
      } else if (a == r.size() || other[b].first < r[a].first) {
        out.emplace_back(other[b].first, c * other[b].second);
        ++b;
      } else {
        Rational v = r[a].second + c * other[b].second;
        if (v != 0) out.emplace_back(r[a].first, std::move(v));
        ++a;
        ++b;
      }
    }
    r = std::move(out);
  }

  std::map<int, Row> rows_;
};

}  // namespace

NormalFormTable::NormalFormTable(int n, AlgebraTag tag, int max_degree)
    : n_(n), tag_(tag), max_degree_(-1) {
  if (n < 1) throw std::invalid_argument("NormalFormTable: n >= 1 required");
  extend(max_degree);
}

void NormalFormTable::extend(int max_degree) {
  if (max_degree <= max_degree_) return;
  degrees_.resize(max_degree + 1);
  for (int d = max_degree_ + 1; d <= max_degree; ++d) build_degree(d);
  max_degree_ = max_degree;
}

void NormalFormTable::build_degree(int d) {
  DegreeData& data = degrees_[d];
  if (d == 0) {
    data.basis = {OTMonomial{}};
    data.nf[OTMonomial{}] = {{0, Rational(1)}};
    return;
  }

  std::vector<OTMonomial> mons = enumerate_monomials(n_, d, tag_);

  // Column order fixes the quotient basis: basis candidates go last so
  // the ideal pivots fall on the complementary columns.
  std::vector<OTMonomial> order;
  std::vector<OTMonomial> expected_basis;
  if (tag_ == AlgebraTag::U) {
    auto nbc = nbc_monomials(n_, d);
    std::sort(nbc.begin(), nbc.end());
    std::vector<OTMonomial> non_nbc;
    for (const auto& m : mons)
      if (!std::binary_search(nbc.begin(), nbc.end(), m)) non_nbc.push_back(m);
    order = non_nbc;
    order.insert(order.end(), nbc.begin(), nbc.end());
    expected_basis = nbc;
  } else {
    int nvars = n_ * (n_ - 1) / 2;
    order = mons;
    std::sort(order.begin(), order.end(), [nvars](const OTMonomial& a, const OTMonomial& b) {
      return degrevlex_greater(a, b, nvars);
    });
  }
  std::map<OTMonomial, int> col;
  for (size_t i = 0; i < order.size(); ++i) col[order[i]] = static_cast<int>(i);

  auto to_row = [&](const OTElement& e) {
    SparseEliminator::Row r;
    for (const auto& [m, c] : e.terms) r.emplace_back(col.at(m), c);
    std::sort(r.begin(), r.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return r;
  };

  SparseEliminator elim;
  if (d >= 2) {
    std::vector<OTMonomial> mults = enumerate_monomials(n_, d - 2, tag_);
    for (int i = 1; i <= n_; ++i)
      for (int j = i + 1; j <= n_; ++j)
        for (int k = j + 1; k <= n_; ++k) {
          OTElement rel = arnold_element(n_, tag_, i, j, k);
          for (const auto& m : mults) {
            OTElement mul{n_, tag_, {{m, Rational(1)}}};
            OTElement row = ot_raw_multiply(rel, mul);
            if (!row.is_zero()) elim.add(to_row(row));
          }
        }
  }
  if (tag_ == AlgebraTag::M && d >= 1) {
    std::vector<OTMonomial> mults = enumerate_monomials(n_, d - 1, tag_);
    for (int i = 1; i <= n_; ++i) {
      OTElement z = ot_z(n_, tag_, i);
      for (const auto& m : mults) {
        OTElement mul{n_, tag_, {{m, Rational(1)}}};
        elim.add(to_row(ot_raw_multiply(z, mul)));
      }
    }
  }
  elim.finalize();

  std::vector<bool> is_pivot(order.size(), false);
  for (const auto& [p, row] : elim.rows()) is_pivot[p] = true;
  for (size_t i = 0; i < order.size(); ++i)
    if (!is_pivot[i]) data.basis.push_back(order[i]);

  if (tag_ == AlgebraTag::U) {
    if (data.basis != expected_basis)
      throw std::runtime_error("normal form table: nbc monomials are not a complement of the "
                               "degree-" + std::to_string(d) + " ideal slice");
  }
  std::sort(data.basis.begin(), data.basis.end());
  std::map<OTMonomial, int> basis_index;
  for (size_t i = 0; i < data.basis.size(); ++i) basis_index[data.basis[i]] = static_cast<int>(i);

  for (const auto& m : data.basis) data.nf[m] = {{basis_index.at(m), Rational(1)}};
  for (const auto& [p, row] : elim.rows()) {
    std::vector<std::pair<int, Rational>> expansion;
    for (size_t k = 1; k < row.size(); ++k)
      expansion.emplace_back(basis_index.at(order[row[k].first]), -row[k].second);
    std::sort(expansion.begin(), expansion.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    data.nf[order[p]] = std::move(expansion);
  }
}

const std::vector<OTMonomial>& NormalFormTable::basis(int degree) const {
  if (degree < 0 || degree > max_degree_)
    throw std::out_of_range("NormalFormTable: degree out of range");
  return degrees_[degree].basis;
}

const std::vector<std::pair<int, Rational>>& NormalFormTable::monomial_nf(
    const OTMonomial& m) const {
  int d = m.degree();
  if (d > max_degree_) throw std::out_of_range("normal_form: degree exceeds table");
  auto it = degrees_[d].nf.find(m);
  if (it == degrees_[d].nf.end())
    throw std::invalid_argument("normal_form: unknown monomial " + m.to_string());
  return it->second;
}

OTElement normal_form(const OTElement& x, const NormalFormTable& table) {
  if (x.n != table.n() || x.tag != table.tag())
    throw std::invalid_argument("normal_form: table mismatch");
  OTElement r = ot_zero(x.n, x.tag);
  for (const auto& [m, c] : x.terms) {
    if (x.tag == AlgebraTag::U && !m.square_free()) continue;
    const auto& basis = table.basis(m.degree());
    for (const auto& [bi, v] : table.monomial_nf(m)) r.add_term(basis[bi], c * v);
  }
  return r;
}

OTElement ot_multiply(const OTElement& a, const OTElement& b, const NormalFormTable& table) {
  return normal_form(ot_raw_multiply(a, b), table);
}

namespace {

void nbc_rec(int n, int d, int column, OTMonomial& cur, std::vector<OTMonomial>& out) {
  if (d == 0) {
    OTMonomial m = cur;
    std::sort(m.pairs.begin(), m.pairs.end());
    out.push_back(std::move(m));
    return;
  }
  if (column > n) return;
  for (int i = 1; i < column; ++i) {
    cur.pairs.emplace_back(i, column);
    nbc_rec(n, d - 1, column + 1, cur, out);
    cur.pairs.pop_back();
  }
  nbc_rec(n, d, column + 1, cur, out);
}

}  // namespace

std::vector<OTMonomial> nbc_monomials(int n, int d) {
  if (d < 0 || d > n - 1) throw std::out_of_range("nbc_monomials: degree out of range");
  std::vector<OTMonomial> out;
  OTMonomial cur;
  nbc_rec(n, d, 2, cur, out);
  std::sort(out.begin(), out.end());
  return out;
}

OTElement u_of_w(const Permutation& w, AlgebraTag tag) {
  OTMonomial m;
  int sgn = 1;
  for (const auto& cyc : canonical_cycles(w).cycles)
    for (size_t k = 0; k + 1 < cyc.size(); ++k) {
      int a = cyc[k], b = cyc[k + 1];
      if (a > b) {
        std::swap(a, b);
        sgn = -sgn;
      }
      m.pairs.emplace_back(a, b);
    }
  std::sort(m.pairs.begin(), m.pairs.end());
  OTElement r = ot_zero(w.n(), tag);
  r.terms.emplace(std::move(m), sgn);
  return r;
}

RationalMatrix u_basis_matrix(int n, int d, const NormalFormTable& table) {
  std::vector<Permutation> ws;
  for (const auto& w : all_permutations(n))
    if (static_cast<int>(canonical_cycles(w).cycles.size()) == n - d) ws.push_back(w);
  const auto& basis = table.basis(d);
  RationalMatrix m(static_cast<int>(ws.size()), static_cast<int>(basis.size()));
  std::map<OTMonomial, int> bi;
  for (size_t i = 0; i < basis.size(); ++i) bi[basis[i]] = static_cast<int>(i);
  for (size_t r = 0; r < ws.size(); ++r) {
    OTElement e = normal_form(u_of_w(ws[r], table.tag()), table);
    for (const auto& [mon, c] : e.terms) m.at(static_cast<int>(r), bi.at(mon)) = c;
  }
  return m;
}

OTElement act(const Permutation& g, const OTElement& x, const NormalFormTable& table) {
  if (g.n() != x.n) throw std::invalid_argument("act: size mismatch");
  OTElement moved = ot_zero(x.n, x.tag);
  for (const auto& [m, c] : x.terms) {
    OTMonomial img;
    int sgn = 1;
    for (const auto& [i, j] : m.pairs) {
      int a = g(i), b = g(j);
      if (a > b) {
        std::swap(a, b);
        sgn = -sgn;
      }
      img.pairs.emplace_back(a, b);
    }
    std::sort(img.pairs.begin(), img.pairs.end());
    moved.add_term(img, c * sgn);
  }
  return normal_form(moved, table);
}

GradedCharacter ot_graded_character(const NormalFormTable& table) {
  int n = table.n();
  GradedCharacter gc{n, {}};
  for (int d = 0; d <= table.max_degree(); ++d) {
    const auto& basis = table.basis(d);
    std::map<OTMonomial, int> bi;
    for (size_t i = 0; i < basis.size(); ++i) bi[basis[i]] = static_cast<int>(i);
    CharacterVector chi = zero_character(n);
    for (const auto& cls : conjugacy_classes(n)) {
      Rational t = 0;
      for (const auto& b : basis) {
        OTElement e = ot_zero(n, table.tag());
        e.terms.emplace(b, 1);
        OTElement img = act(cls.rep, e, table);
        auto it = img.terms.find(b);
        if (it != img.terms.end()) t += it->second;
      }
      chi.values[cls.type] = t;
    }
    gc.coeffs.push_back(std::move(chi));
  }
  return gc;
}

}  // namespace otwb
