#include "permutation.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace otwb {

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  std::vector<bool> seen(word_.size(), false);
  for (int v : word_) {
    if (v < 1 || v > static_cast<int>(word_.size()) || seen[v - 1])
      throw std::invalid_argument("not a permutation word");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::transposition(int n, int a, int b) {
  Permutation p = identity(n);
  std::swap(p.word_[a - 1], p.word_[b - 1]);
  return p;
}

Permutation Permutation::from_cycles(int n, const std::vector<std::vector<int>>& cycles) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  for (const auto& c : cycles)
    for (size_t i = 0; i < c.size(); ++i) w[c[i] - 1] = c[(i + 1) % c.size()];
  return Permutation(std::move(w));
}

bool Permutation::is_identity() const {
  for (int i = 1; i <= n(); ++i)
    if ((*this)(i) != i) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> w(word_.size());
  for (int i = 1; i <= n(); ++i) w[word_[i - 1] - 1] = i;
  return Permutation(std::move(w));
}

std::string Permutation::to_string() const {
  std::string s;
  for (size_t i = 0; i < word_.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(word_[i]);
  }
  return s;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.n() != b.n()) throw std::invalid_argument("compose: size mismatch");
  std::vector<int> w(a.n());
  for (int i = 1; i <= a.n(); ++i) w[i - 1] = a(b(i));
  return Permutation(std::move(w));
}

CanonicalCycles canonical_cycles(const Permutation& w) {
  CanonicalCycles cc;
  std::vector<bool> seen(w.n(), false);
  for (int start = 1; start <= w.n(); ++start) {
    if (seen[start - 1]) continue;
    std::vector<int> cyc;
    int cur = start;
    do {
      cyc.push_back(cur);
      seen[cur - 1] = true;
      cur = w(cur);
    } while (cur != start);
    cc.cycles.push_back(std::move(cyc));
  }
  return cc;
}

int sign(const Permutation& w) {
  int ncyc = static_cast<int>(canonical_cycles(w).cycles.size());
  return ((w.n() - ncyc) % 2 == 0) ? 1 : -1;
}

int Partition::n() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::to_string() const {
  std::string s;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) s += '.';
    s += std::to_string(parts[i]);
  }
  return s;
}

Partition cycle_type(const Permutation& w) {
  std::vector<int> lens;
  for (const auto& c : canonical_cycles(w).cycles) lens.push_back(static_cast<int>(c.size()));
  std::sort(lens.rbegin(), lens.rend());
  return Partition{std::move(lens)};
}

static void partitions_rec(int rem, int maxpart, std::vector<int>& cur,
                           std::vector<Partition>& out) {
  if (rem == 0) {
    out.push_back(Partition{cur});
    return;
  }
  for (int p = std::min(rem, maxpart); p >= 1; --p) {
    cur.push_back(p);
    partitions_rec(rem - p, p, cur, out);
    cur.pop_back();
  }
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

long factorial(int n) {
  long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

static long class_size(const Partition& lambda) {
  // n! / z_lambda with z_lambda = prod_i i^{m_i} m_i!.
  long z = 1;
  int i = 0;
  const auto& p = lambda.parts;
  while (i < static_cast<int>(p.size())) {
    int j = i;
    while (j < static_cast<int>(p.size()) && p[j] == p[i]) ++j;
    int mult = j - i;
    for (int k = 0; k < mult; ++k) z *= p[i];
    z *= factorial(mult);
    i = j;
  }
  return factorial(lambda.n()) / z;
}

std::vector<ConjClass> conjugacy_classes(int n) {
  if (n < 1) throw std::invalid_argument("conjugacy_classes: n >= 1 required");
  std::vector<ConjClass> out;
  for (const auto& lambda : partitions_of(n)) {
    std::vector<std::vector<int>> cycles;
    int next = 1;
    for (int len : lambda.parts) {
      std::vector<int> c(len);
      std::iota(c.begin(), c.end(), next);
      next += len;
      cycles.push_back(std::move(c));
    }
    out.push_back({lambda, class_size(lambda), Permutation::from_cycles(n, cycles)});
  }
  return out;
}

long stirling_cycle_count(int n, int j) {
  if (j < 1 || j > n) throw std::out_of_range("stirling_cycle_count: j out of range");
  // c(n,j) = c(n-1,j-1) + (n-1) c(n-1,j)
  std::vector<std::vector<long>> c(n + 1, std::vector<long>(n + 1, 0));
  c[0][0] = 1;
  for (int m = 1; m <= n; ++m)
    for (int k = 1; k <= m; ++k) c[m][k] = c[m - 1][k - 1] + (m - 1) * c[m - 1][k];
  return c[n][j];
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.push_back(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

Partition power_cycle_type(const Partition& type, long k) {
  std::vector<int> lens;
  for (int len : type.parts) {
    long g = std::gcd<long>(len, k);
    for (long i = 0; i < g; ++i) lens.push_back(static_cast<int>(len / g));
  }
  std::sort(lens.rbegin(), lens.rend());
  return Partition{std::move(lens)};
}

}  // namespace otwb
