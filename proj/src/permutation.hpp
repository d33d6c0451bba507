#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace otwb {

// Permutation of {1..n} stored in one-line form: word[i-1] = w(i).
// Lexicographic order on words gives the total order used to index
// group-algebra coordinates.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);
  static Permutation transposition(int n, int a, int b);
  // Cycles given as value lists; entries not mentioned are fixed.
  static Permutation from_cycles(int n, const std::vector<std::vector<int>>& cycles);

  int n() const { return static_cast<int>(word_.size()); }
  int operator()(int i) const { return word_[i - 1]; }
  const std::vector<int>& word() const { return word_; }

  bool is_identity() const;
  Permutation inverse() const;

  auto operator<=>(const Permutation& o) const = default;

  std::string to_string() const;

 private:
  std::vector<int> word_;
};

// (a o b)(i) = a(b(i)).
Permutation compose(const Permutation& a, const Permutation& b);

// (-1)^(n - #cycles).
int sign(const Permutation& w);

// Cycle decomposition with each cycle written starting at its minimum
// and cycles sorted by that minimum.  Singleton cycles included.
struct CanonicalCycles {
  std::vector<std::vector<int>> cycles;
};
CanonicalCycles canonical_cycles(const Permutation& w);

// Weakly decreasing positive parts summing to n.
struct Partition {
  std::vector<int> parts;

  int n() const;
  auto operator<=>(const Partition& o) const = default;
  std::string to_string() const;  // dot-separated parts, e.g. "2.1.1"
};

Partition cycle_type(const Permutation& w);
std::vector<Partition> partitions_of(int n);

struct ConjClass {
  Partition type;
  long size;
  Permutation rep;  // cycles (1..l1)(l1+1..l1+l2)...
};
std::vector<ConjClass> conjugacy_classes(int n);

long factorial(int n);
// Signless Stirling number of the first kind c(n,j).
long stirling_cycle_count(int n, int j);

// All of S_n in lexicographic word order.
std::vector<Permutation> all_permutations(int n);

// Cycle type of w^k for w of the given cycle type.
Partition power_cycle_type(const Partition& type, long k);

}  // namespace otwb
