// Acceptance suite: one line per criterion.  Exit status is nonzero if
// any gating criterion fails; criterion 9 is informational only.
// Pass --long to include the n=6 runs.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <string>
#include <vector>

#include "verifier.hpp"

using namespace otwb;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(int criterion, bool ok, const std::string& what, double seconds, bool gating = true) {
  std::printf("criterion %2d: %s  (%.1f s)  %s%s\n", criterion, ok ? "pass" : "FAIL", seconds,
              what.c_str(), gating ? "" : "  [informational]");
  if (gating && !ok) ++failures;
}

bool all_pass(const std::vector<CheckReport>& rs) {
  for (const auto& r : rs) {
    if (r.status != CheckReport::Status::Pass) {
      for (const auto& w : r.witnesses)
        std::printf("    %s n=%d: %s\n", r.id.c_str(), r.n, w.c_str());
      return false;
    }
  }
  return true;
}

double secs(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
  bool long_run = false;
  for (int i = 1; i < argc; ++i)
    if (std::strcmp(argv[i], "--long") == 0) long_run = true;

  Workspace ws;
  auto suite_start = Clock::now();
  std::vector<CheckReport> rs;

  auto t0 = Clock::now();
  rs.clear();
  for (int n = 2; n <= 5; ++n) rs.push_back(verify_eulerian(ws, n));
  double t_eulerian = secs(t0);
  report(1, all_pass(rs) && t_eulerian < 30.0, "idempotent system, eigenvalues, cycle-count ranks, n=2..5",
         t_eulerian);

  t0 = Clock::now();
  rs.clear();
  for (int n = 2; n <= 5; ++n) rs.push_back(verify_whitehouse(ws, n));
  report(2, all_pass(rs), "lifted idempotents: idempotency, commutation, ranks, n=2..5", secs(t0));

  t0 = Clock::now();
  rs.clear();
  for (int n = 2; n <= 5; ++n) {
    rs.push_back(verify_prop_1_1(ws, n));
    rs.push_back(verify_eq_1_4_and_1_5(ws, n));
  }
  report(3, all_pass(rs), "graded character identity, restriction, virtual description, n=2..5",
         secs(t0));

  t0 = Clock::now();
  rs.clear();
  for (int n = 2; n <= (long_run ? 6 : 5); ++n) rs.push_back(verify_algebra_u(ws, n, long_run));
  report(4, all_pass(rs),
         std::string("square-free quotient: Hilbert function, ideal kills, basis fixed points, n=2..") +
             (long_run ? "6" : "5"),
         secs(t0));

  t0 = Clock::now();
  rs.clear();
  for (int n = 2; n <= 5; ++n) rs.push_back(verify_eq_1_1(ws, n));
  report(5, all_pass(rs), "sign-twisted graded pieces match the projector characters, n=2..5", secs(t0));

  t0 = Clock::now();
  rs.clear();
  for (int n = 2; n <= (long_run ? 6 : 5); ++n) rs.push_back(verify_thm_1_4(ws, n, long_run));
  report(6, all_pass(rs),
         std::string("section/retraction, subalgebra dimensions, character match, n=2..") +
             (long_run ? "6" : "5"),
         secs(t0));

  t0 = Clock::now();
  rs.clear();
  for (int n = 2; n <= 5; ++n) rs.push_back(verify_basis_5_3(ws, n));
  report(7, all_pass(rs), "permutation-indexed bases invertible, straightening recursion, n=2..5",
         secs(t0));

  t0 = Clock::now();
  rs.clear();
  for (int n = 3; n <= 6; ++n) rs.push_back(verify_identities(ws, n));
  report(8, all_pass(rs), "generator identities (a)-(d) exhaustive, n=3..6", secs(t0));

  t0 = Clock::now();
  bool conj_completed = true;
  bool hilbert_ok = false;
  for (int n = 3; n <= 5; ++n) {
    CheckReport r = verify_conj_5_2(ws, n);
    conj_completed = conj_completed && r.status != CheckReport::Status::Skipped;
    for (const auto& w : r.witnesses) {
      if (n == 3 && w.find("(1,1,0)") != std::string::npos) hilbert_ok = true;
      std::printf("    n=%d: %s\n", n, w.c_str());
    }
  }
  report(9, conj_completed && hilbert_ok, "quotient-with-stars comparison completed, n=3..5", secs(t0),
         /*gating=*/false);

  double total = secs(suite_start);
  bool perf_ok = long_run ? total < 3600.0 : total < 300.0;
  report(10, perf_ok, long_run ? "long suite under one hour" : "default suite under five minutes",
         total);

  return failures == 0 ? 0 : 1;
}
