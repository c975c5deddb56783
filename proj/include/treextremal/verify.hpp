#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "treextremal/enumeration.hpp"

namespace treextremal {

enum class Claim {
  kCaterpillarMinimality,        // thm-2.1
  kValleyShape,                  // thm-3.5
  kMountainShape,                // thm-3.6-shape
  kClosedForms,                  // thm-4.1
  kTrichotomy,                   // thm-4.2
  kTransformationMonotonicity,   // eq-2.1-monotonic
  kWienerCorrespondence,         // wiener-correspondence (report-only)
  kPathStarExtremes,             // path-star-extremes
};

std::string_view claim_id(Claim c);
/// Throws InputError for unknown ids.
Claim parse_claim(std::string_view id);
const std::vector<Claim>& all_claims();

enum class Status { kPass, kFail, kReportOnly };
std::string_view to_string(Status s);

/// One counterexample. Carries enough to re-run the instance alone.
struct Failure {
  std::string degree_sequence;
  /// Canonical codes of the trees involved.
  std::vector<std::string> witnesses;
  std::string expected;
  std::string observed;
};

struct Universe {
  std::size_t min_n = 1;
  std::size_t max_n = 0;
  std::size_t min_k = 0;
  std::size_t max_k = 0;
  std::string search_space;
};

struct VerificationReport {
  Claim claim = Claim::kCaterpillarMinimality;
  Universe universe;
  std::size_t instances_checked = 0;
  std::vector<Failure> failures;
  Status status = Status::kPass;
  /// Ordered report-only observations (name, value).
  std::vector<std::pair<std::string, std::string>> findings;
  /// Optional report-only table; first row is the header.
  std::vector<std::vector<std::string>> table;
};

VerificationReport verify_caterpillar_minimality(std::size_t max_n, const EnumerationBudget& budget = {});
VerificationReport verify_valley_shape(std::size_t max_n, std::size_t max_k);
VerificationReport verify_mountain_shape(std::size_t max_n, std::size_t max_k);
VerificationReport verify_closed_forms(std::size_t max_n);
VerificationReport verify_trichotomy(std::size_t max_n);
VerificationReport verify_transformation_monotonicity(std::size_t max_n,
                                                      const EnumerationBudget& budget = {});
VerificationReport explore_wiener_correspondence(std::size_t max_n, const EnumerationBudget& budget = {});
VerificationReport verify_path_star_extremes(std::size_t max_n, const EnumerationBudget& budget = {});

/// Dispatches on the claim; `max_k` only applies to the shape claims.
VerificationReport run_claim(Claim claim, std::size_t max_n, std::size_t max_k,
                             const EnumerationBudget& budget = {});

}  // namespace treextremal
