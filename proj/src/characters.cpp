#include "characters.hpp"

#include <algorithm>
#include <stdexcept>

namespace otwb {

Rational CharacterVector::at(const Partition& p) const {
  auto it = values.find(p);
  if (it == values.end()) throw std::invalid_argument("character: unknown class " + p.to_string());
  return it->second;
}

CharacterVector& CharacterVector::operator+=(const CharacterVector& o) {
  if (n != o.n) throw std::invalid_argument("character sum: size mismatch");
  for (const auto& [p, v] : o.values) values[p] += v;
  return *this;
}

CharacterVector& CharacterVector::operator-=(const CharacterVector& o) {
  if (n != o.n) throw std::invalid_argument("character difference: size mismatch");
  for (const auto& [p, v] : o.values) values[p] -= v;
  return *this;
}

CharacterVector CharacterVector::operator+(const CharacterVector& o) const {
  CharacterVector r = *this;
  r += o;
  return r;
}

CharacterVector CharacterVector::operator-(const CharacterVector& o) const {
  CharacterVector r = *this;
  r -= o;
  return r;
}

CharacterVector zero_character(int n) {
  CharacterVector c{n, {}};
  for (const auto& p : partitions_of(n)) c.values[p] = 0;
  return c;
}

CharacterVector trivial_character(int n) {
  CharacterVector c = zero_character(n);
  for (auto& [p, v] : c.values) v = 1;
  return c;
}

CharacterVector sign_character(int n) {
  CharacterVector c = zero_character(n);
  for (auto& [p, v] : c.values)
    v = ((n - static_cast<int>(p.parts.size())) % 2 == 0) ? 1 : -1;
  return c;
}

CharacterVector regular_character(int n) {
  CharacterVector c = zero_character(n);
  c.values[Partition{std::vector<int>(n, 1)}] = factorial(n);
  return c;
}

CharacterVector reflection_character(int n) {
  if (n < 2) throw std::invalid_argument("reflection_character: n >= 2 required");
  CharacterVector c = zero_character(n);
  for (auto& [p, v] : c.values) {
    long fix = std::count(p.parts.begin(), p.parts.end(), 1);
    v = fix - 1;
  }
  return c;
}

namespace {

// Murnaghan-Nakayama via beta-numbers: removing a border strip of size
// l corresponds to replacing some beta-number b by b - l when b - l is
// fresh; the strip height is the number of beta-numbers jumped over.
long long mn_value(const std::vector<int>& lambda, const std::vector<int>& mu,
                   std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& memo) {
  if (mu.empty()) return 1;
  auto key = std::make_pair(lambda, mu);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  int l = mu[0];
  std::vector<int> rest(mu.begin() + 1, mu.end());
  int m = static_cast<int>(lambda.size());
  std::vector<int> beta(m);
  for (int k = 0; k < m; ++k) beta[k] = lambda[k] + (m - 1 - k);

  long long total = 0;
  for (int k = 0; k < m; ++k) {
    int nb = beta[k] - l;
    if (nb < 0) continue;
    if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
    int height = 0;
    for (int b : beta)
      if (nb < b && b < beta[k]) ++height;
    std::vector<int> nbeta = beta;
    nbeta[k] = nb;
    std::sort(nbeta.rbegin(), nbeta.rend());
    std::vector<int> nlambda;
    for (int i = 0; i < m; ++i) {
      int part = nbeta[i] - (m - 1 - i);
      if (part > 0) nlambda.push_back(part);
    }
    long long sub = mn_value(nlambda, rest, memo);
    total += (height % 2 == 0) ? sub : -sub;
  }
  memo[key] = total;
  return total;
}

}  // namespace

const std::map<Partition, CharacterVector>& character_table(int n) {
  static std::map<int, std::map<Partition, CharacterVector>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
  std::map<Partition, CharacterVector> table;
  auto parts = partitions_of(n);
  for (const auto& lambda : parts) {
    CharacterVector c = zero_character(n);
    for (const auto& mu : parts)
      c.values[mu] = Rational(static_cast<long>(mn_value(lambda.parts, mu.parts, memo)));
    table[lambda] = std::move(c);
  }
  return cache[n] = std::move(table);
}

Rational inner_product(const CharacterVector& a, const CharacterVector& b) {
  if (a.n != b.n) throw std::invalid_argument("inner_product: size mismatch");
  Rational s = 0;
  for (const auto& cls : conjugacy_classes(a.n))
    s += Rational(cls.size) * a.at(cls.type) * b.at(cls.type);
  return s / Rational(factorial(a.n));
}

std::map<Partition, long> decompose(const CharacterVector& a) {
  std::map<Partition, long> out;
  for (const auto& [lambda, chi] : character_table(a.n)) {
    Rational m = inner_product(a, chi);
    if (m.get_den() != 1)
      throw std::runtime_error("decompose: non-integer multiplicity at " + lambda.to_string());
    if (m != 0) out[lambda] = m.get_num().get_si();
  }
  return out;
}

CharacterVector restrict_character(const CharacterVector& a) {
  if (a.n < 2) throw std::invalid_argument("restrict: n >= 2 required");
  CharacterVector c = zero_character(a.n - 1);
  for (auto& [p, v] : c.values) {
    std::vector<int> parts = p.parts;
    parts.push_back(1);
    std::sort(parts.rbegin(), parts.rend());
    v = a.at(Partition{parts});
  }
  return c;
}

CharacterVector induce_character(const CharacterVector& a) {
  int n = a.n + 1;
  CharacterVector out = zero_character(n);
  for (const auto& [lambda, chi] : character_table(n)) {
    Rational m = inner_product(a, restrict_character(chi));
    if (m == 0) continue;
    for (auto& [p, v] : out.values) v += m * chi.at(p);
  }
  return out;
}

CharacterVector tensor(const CharacterVector& a, const CharacterVector& b) {
  if (a.n != b.n) throw std::invalid_argument("tensor: size mismatch");
  CharacterVector c = zero_character(a.n);
  for (auto& [p, v] : c.values) v = a.at(p) * b.at(p);
  return c;
}

CharacterVector sgn_twist(const CharacterVector& a) { return tensor(a, sign_character(a.n)); }

CharacterVector sym2_character(const CharacterVector& a) {
  CharacterVector c = zero_character(a.n);
  for (auto& [p, v] : c.values) v = (a.at(p) * a.at(p) + a.at(power_cycle_type(p, 2))) / 2;
  return c;
}

void GradedCharacter::trim() {
  while (!coeffs.empty()) {
    bool zero = true;
    for (const auto& [p, v] : coeffs.back().values)
      if (v != 0) zero = false;
    if (!zero) break;
    coeffs.pop_back();
  }
}

GradedCharacter graded_multiply(const GradedCharacter& a, const GradedCharacter& b) {
  if (a.n != b.n) throw std::invalid_argument("graded_multiply: size mismatch");
  GradedCharacter r{a.n, {}};
  if (a.coeffs.empty() || b.coeffs.empty()) return r;
  r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, zero_character(a.n));
  for (size_t i = 0; i < a.coeffs.size(); ++i)
    for (size_t j = 0; j < b.coeffs.size(); ++j) r.coeffs[i + j] += tensor(a.coeffs[i], b.coeffs[j]);
  r.trim();
  return r;
}

}  // namespace otwb
