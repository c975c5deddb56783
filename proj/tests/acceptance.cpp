// Acceptance suite: one PASS/FAIL line per criterion, each with its time cap.
// Exit status is nonzero if any gating criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "treextremal/extremal.hpp"
#include "treextremal/subtree_count.hpp"
#include "treextremal/verify.hpp"

using namespace treextremal;

namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double seconds_cap;
  std::function<Outcome()> run;
};

std::string summary(const VerificationReport& r) {
  std::ostringstream s;
  s << claim_id(r.claim) << " n<=" << r.universe.max_n << " instances=" << r.instances_checked
    << " failures=" << r.failures.size();
  for (const auto& f : r.failures)
    s << "\n      counterexample " << f.degree_sequence << ": expected " << f.expected << ", observed "
      << f.observed;
  return s.str();
}

std::string finding(const VerificationReport& r, const std::string& name) {
  for (const auto& [k, v] : r.findings)
    if (k == name) return v;
  return "";
}

Outcome exact_golden_values() {
  const BigCount fork = count_subtrees(caterpillar_build({{1, 0}}));
  const BigCount c100 = count_subtrees(caterpillar_build({{1, 0, 0}}));
  const BigCount form2 = closed_form_phi(parse_degree_sequence("3,2,1,1,1")).phi;
  const BigCount form3 = closed_form_phi(parse_degree_sequence("3,2,2,1,1,1")).phi;
  const bool ok = fork == 17 && c100 == 24 && form2 == 17 && form3 == 24;
  return {ok, "phi(fork)=" + fork.str() + " phi(C(1,0,0))=" + c100.str() + " closed forms " +
                  form2.str() + "/" + form3.str()};
}

Outcome oracle_equivalence() {
  std::size_t trees = 0, mismatches = 0;
  for (std::size_t n = 1; n <= 10; ++n)
    for (const auto& ds : enumerate_degree_sequences(n))
      for (const auto& t : enumerate_trees(ds)) {
        ++trees;
        if (count_subtrees(t) != brute_force_count(t)) ++mismatches;
      }
  return {trees == 201 && mismatches == 0,
          std::to_string(trees) + " trees, " + std::to_string(mismatches) + " mismatches"};
}

Outcome gate(const VerificationReport& r) { return {r.status == Status::kPass, summary(r)}; }

Outcome trichotomy() {
  const auto r = verify_trichotomy(13);
  auto instance = [](const char* s, Caterpillar expected) {
    const auto ds = parse_degree_sequence(s);
    const auto search = find_min_subtrees(ds, SearchMethod::kCaterpillar);
    const auto predicted = predict_min_k5(ds);
    return search.optimizers.size() == 1 && search.optimizers[0].caterpillar == expected &&
           predicted.minimizers == std::vector<Caterpillar>{expected};
  };
  const bool first = instance("8,3,3,3,2,1*11", {{6, 0, 1, 1, 1}});
  const bool second = instance("3,3,3,3,2,1*6", {{1, 1, 0, 1, 1}});
  return {r.status == Status::kPass && first && second,
          summary(r) + std::string(" (8,3,3,3,2,1*11)->{(6,0,1,1,1)} ") + (first ? "ok" : "MISMATCH") +
              " (3,3,3,3,2,1*6)->{(1,1,0,1,1)} " + (second ? "ok" : "MISMATCH")};
}

Outcome shapes() {
  const auto valley = verify_valley_shape(13, 6);
  const auto mountain = verify_mountain_shape(13, 6);
  return {valley.status == Status::kPass && mountain.status == Status::kPass,
          summary(valley) + "; " + summary(mountain)};
}

Outcome report_only_findings() {
  const auto tri = verify_trichotomy(13);
  const auto wiener = explore_wiener_correspondence(9);
  std::ostringstream s;
  const std::string equality = finding(tri, "equality_branch_instances");
  s << "equality-branch instances (k=5, d4!=d5, n<=13): " << equality << " (expected 0)";
  s << "\n      wiener correspondence, n<=9 (" << to_string(wiener.status) << "):";
  for (const auto& row : wiener.table) {
    s << "\n        ";
    for (const auto& cell : row) s << cell << '\t';
  }
  // Produced means: both findings present. Their values never gate.
  return {!equality.empty() && wiener.table.size() == 10 && wiener.status == Status::kReportOnly, s.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "exact golden values", 1, exact_golden_values},
      {2, "DP equals brute force on all 201 trees n<=10", 10, oracle_equivalence},
      {3, "minimizers are caterpillars, n<=9", 60, [] { return gate(verify_caterpillar_minimality(9)); }},
      {4, "k in {2,3,4} closed forms and unique minimizers, n<=12", 60,
       [] { return gate(verify_closed_forms(12)); }},
      {5, "k=5 trichotomy, n<=13", 60, trichotomy},
      {6, "valley and mountain shapes, k<=6, n<=13", 120, shapes},
      {7, "branch shift strictly lowers phi, n<=9", 60,
       [] { return gate(verify_transformation_monotonicity(9)); }},
      {8, "path unique min and star unique max, n<=9", 30, [] { return gate(verify_path_star_extremes(9)); }},
      {9, "report-only findings produced", 120, report_only_findings},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.seconds_cap;
    const bool pass = out.ok && in_time;
    if (!pass) ++failed;
    std::printf("[%s] criterion %d: %s (%.2fs, cap %.0fs%s)\n      %s\n", pass ? "PASS" : "FAIL", c.id,
                c.name.c_str(), secs, c.seconds_cap, in_time ? "" : ", OVER TIME", out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
