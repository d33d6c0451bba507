#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "permutation.hpp"

using namespace otwb;

TEST_CASE("composition convention (a o b)(i) = a(b(i))") {
  Permutation a({2, 1, 3});  // (1 2)
  Permutation b({1, 3, 2});  // (2 3)
  Permutation ab = compose(a, b);
  CHECK(ab(1) == 2);
  CHECK(ab(2) == 3);
  CHECK(ab(3) == 1);
}

TEST_CASE("inverse") {
  Permutation w({3, 1, 4, 2});
  CHECK(compose(w, w.inverse()).is_identity());
  CHECK(compose(w.inverse(), w).is_identity());
}

TEST_CASE("sign is multiplicative on all of S_4") {
  for (const auto& a : all_permutations(4))
    for (const auto& b : all_permutations(4)) CHECK(sign(compose(a, b)) == sign(a) * sign(b));
}

TEST_CASE("canonical cycles round-trip on S_5") {
  for (const auto& w : all_permutations(5)) {
    auto cc = canonical_cycles(w);
    for (const auto& cyc : cc.cycles) CHECK(cyc.front() == *std::min_element(cyc.begin(), cyc.end()));
    CHECK(Permutation::from_cycles(5, cc.cycles) == w);
  }
}

TEST_CASE("cycle type and class sizes") {
  CHECK(cycle_type(Permutation({2, 1, 4, 3})) == Partition{{2, 2}});
  long total = 0;
  for (const auto& cls : conjugacy_classes(5)) {
    CHECK(cycle_type(cls.rep) == cls.type);
    total += cls.size;
  }
  CHECK(total == factorial(5));
}

TEST_CASE("Stirling cycle counts against enumeration") {
  CHECK(stirling_cycle_count(4, 2) == 11);
  for (int n = 1; n <= 6; ++n) {
    std::vector<long> count(n + 1, 0);
    for (const auto& w : all_permutations(n)) count[canonical_cycles(w).cycles.size()]++;
    long sum = 0;
    for (int j = 1; j <= n; ++j) {
      CHECK(stirling_cycle_count(n, j) == count[j]);
      sum += count[j];
    }
    CHECK(sum == factorial(n));
  }
  // row sums hold one size further up than we ever enumerate
  long sum7 = 0;
  for (int j = 1; j <= 7; ++j) sum7 += stirling_cycle_count(7, j);
  CHECK(sum7 == factorial(7));
}

TEST_CASE("partitions") {
  CHECK(partitions_of(5).size() == 7);
  CHECK(Partition{{2, 1, 1}}.to_string() == "2.1.1");
  CHECK(Partition{{2, 1, 1}}.n() == 4);
}

TEST_CASE("cycle type of powers") {
  CHECK(power_cycle_type(Partition{{4}}, 2) == Partition{{2, 2}});
  CHECK(power_cycle_type(Partition{{6, 2}}, 3) == Partition{{2, 2, 2, 2}});
  for (const auto& w : all_permutations(5)) {
    Permutation w2 = compose(w, w);
    CHECK(power_cycle_type(cycle_type(w), 2) == cycle_type(w2));
  }
}
