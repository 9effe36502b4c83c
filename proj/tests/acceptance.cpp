// Copyright (c) 2026 The semibound authors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. Each criterion prints one PASS/FAIL line; the process
// exits nonzero if any criterion fails. Criteria 1-3 drive the installed
// CLI binary and compare its bytes against the golden tables.
//
// Usage: semibound_acceptance --cli <path-to-cli> --golden <dir>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "semibound/codes.hpp"
#include "semibound/enumerate.hpp"
#include "semibound/nu.hpp"
#include "semibound/reconstruct.hpp"
#include "semibound/semigroup.hpp"

namespace sb = semibound;
using sb::Int;

namespace {

int failures = 0;

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

void report(int criterion, bool ok, const std::string& what, double seconds) {
  std::printf("%s criterion %2d: %s (%.2fs)\n", ok ? "PASS" : "FAIL", criterion,
              what.c_str(), seconds);
  if (!ok) ++failures;
}

std::string run_cli(const std::string& cli, const std::string& args) {
  std::string cmd = cli + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return "<popen failed>";
  std::string out;
  char buf[512];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  pclose(pipe);
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// parse "i lambda nu d" rows from the table body (skips the header line)
std::vector<std::vector<Int>> parse_rows(const std::string& table) {
  std::vector<std::vector<Int>> rows;
  std::istringstream in(table);
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::vector<Int> row;
    Int v;
    while (ls >> v) row.push_back(v);
    if (!row.empty()) rows.push_back(row);
  }
  return rows;
}

void check_table(int criterion, const std::string& cli, const std::string& golden_dir,
                 const std::string& args, const std::string& golden_name,
                 const std::vector<std::vector<Int>>& expected, double limit) {
  Timer t;
  std::string out = run_cli(cli, args);
  double sec = t.seconds();
  std::string golden = slurp(golden_dir + "/" + golden_name);
  bool bytes_ok = !golden.empty() && out == golden;
  bool rows_ok = parse_rows(out) == expected;
  bool time_ok = sec < limit;
  std::string what = "table `" + args + "`";
  if (!bytes_ok) what += " [byte mismatch vs " + golden_name + "]";
  if (!rows_ok) what += " [row values differ from the reference table]";
  if (!time_ok) what += " [too slow]";
  report(criterion, bytes_ok && rows_ok && time_ok, what, sec);
}

void check_suite(int criterion, sb::Suite suite, Int gmax, const std::string& what) {
  Timer t;
  sb::VerificationReport r = sb::verify(suite, gmax);
  bool ok = r.failures == 0;
  std::string detail = what + ": " + std::to_string(r.semigroups_checked) +
                       " semigroups, " + std::to_string(r.checks) + " checks, " +
                       std::to_string(r.failures) + " failures";
  if (!ok && !r.failure_samples.empty())
    detail += " [first: " + r.failure_samples.front() + "]";
  report(criterion, ok, detail, t.seconds());
}

}  // namespace

int main(int argc, char** argv) {
  std::string cli, golden_dir;
  for (int i = 1; i + 1 < argc; i += 2) {
    std::string key = argv[i];
    if (key == "--cli") cli = argv[i + 1];
    else if (key == "--golden") golden_dir = argv[i + 1];
  }
  if (cli.empty() || golden_dir.empty()) {
    std::cerr << "usage: semibound_acceptance --cli <path> --golden <dir>\n";
    return 2;
  }

  // 1-3: reference tables, byte-exact through the CLI
  check_table(1, cli, golden_dir, "nu gaps:1,2,4 --upto 5", "table1.txt",
              {{0, 0, 1, 2}, {1, 3, 2, 2}, {2, 5, 2, 2},
               {3, 6, 3, 2}, {4, 7, 2, 4}, {5, 8, 4, 4}},
              1.0);
  check_table(2, cli, golden_dir, "nu gen:4,5 --upto 16", "table2.txt",
              {{0, 0, 1, 2}, {1, 4, 2, 2}, {2, 5, 2, 3}, {3, 8, 3, 3},
               {4, 9, 4, 3}, {5, 10, 3, 4}, {6, 12, 4, 4}, {7, 13, 6, 4},
               {8, 14, 6, 4}, {9, 15, 4, 5}, {10, 16, 5, 8}, {11, 17, 8, 8},
               {12, 18, 9, 8}, {13, 19, 8, 9}, {14, 20, 9, 10},
               {15, 21, 10, 12}, {16, 22, 12, 12}},
              1.0);
  check_table(3, cli, golden_dir, "nu gs:q=2,m=5 --upto 25", "table3.txt",
              {{0, 0, 1, 2},   {1, 16, 2, 2},  {2, 20, 2, 2},  {3, 24, 2, 2},
               {4, 25, 2, 2},  {5, 26, 2, 2},  {6, 27, 2, 2},  {7, 28, 2, 2},
               {8, 29, 2, 2},  {9, 30, 2, 2},  {10, 31, 2, 2}, {11, 32, 3, 2},
               {12, 33, 2, 2}, {13, 34, 2, 2}, {14, 35, 2, 2}, {15, 36, 4, 2},
               {16, 37, 2, 2}, {17, 38, 2, 2}, {18, 39, 2, 4}, {19, 40, 5, 4},
               {20, 41, 4, 4}, {21, 42, 4, 4}, {22, 43, 4, 6}, {23, 44, 6, 6},
               {24, 45, 6, 6}, {25, 46, 6, 6}},
              1.0);

  // 4: last nu-decrease formula on every acute non-ordinary semigroup
  check_suite(4, sb::Suite::AcuteTheorem, 15, "acute theorem, genus <= 15");

  // 5: non-decreasing <=> ordinary, strictly increasing <=> trivial
  check_suite(5, sb::Suite::OrdinaryTheorem, 15, "ordinary theorem, genus <= 15");

  // 6: reconstruction round trip + nu-prefix injectivity
  check_suite(6, sb::Suite::NuUniqueness, 12, "nu uniqueness, genus <= 12");

  // 7: class lattice + interval symmetry congruence
  check_suite(7, sb::Suite::ClassLattice, 12, "class lattice, genus <= 12");

  // 8: Hermitian code over GF(16)
  {
    Timer t;
    sb::HermitianCurve h(4);
    auto s = h.semigroup();
    sb::EvaluationCode code(h.field(), h.points(), h.pole_basis(72));
    sb::NuProfile prof(s);
    bool ok = h.points().size() == 64;
    for (std::size_t i = 0; i <= 57; ++i) ok = ok && code.rank_profile()[i];
    ok = ok && !code.rank_profile()[58];
    Int mismatches = 0;
    for (Int m = 0; m <= 56; ++m)
      if (sb::refined_order_bound(code, prof, m) != sb::d_ord(prof, m))
        ++mismatches;
    ok = ok && mismatches == 0;
    double sec = t.seconds();
    ok = ok && sec < 5.0;
    report(8, ok,
           "Hermitian q=4: 64 points, rows 0..57 independent, row 58 "
           "dependent, refined bound = order bound through m=56",
           sec);
  }

  // 9: nu computed two ways agrees everywhere
  check_suite(9, sb::Suite::NuFormulas, 12, "nu cross-implementation oracle, genus <= 12");

  // 10: conductor of <a,b> is (a-1)(b-1)
  {
    Timer t;
    Int bad = 0, pairs = 0;
    for (Int a = 2; a <= 30; ++a)
      for (Int b = a + 1; b <= 30; ++b) {
        if (std::gcd(a, b) != 1) continue;
        ++pairs;
        if (sb::NumericalSemigroup::from_generators({a, b}).conductor() !=
            (a - 1) * (b - 1))
          ++bad;
      }
    report(10, bad == 0,
           "two-generator conductor law on " + std::to_string(pairs) +
               " coprime pairs",
           t.seconds());
  }

  if (failures == 0) {
    std::printf("all 10 acceptance criteria passed\n");
    return 0;
  }
  std::printf("%d acceptance criteria FAILED\n", failures);
  return 1;
}
