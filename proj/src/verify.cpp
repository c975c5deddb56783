#include "treextremal/verify.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

#include "treextremal/errors.hpp"
#include "treextremal/extremal.hpp"
#include "treextremal/subtree_count.hpp"

namespace treextremal {

namespace {

constexpr std::array<std::pair<Claim, std::string_view>, 8> kClaimIds{{
    {Claim::kCaterpillarMinimality, "thm-2.1"},
    {Claim::kValleyShape, "thm-3.5"},
    {Claim::kMountainShape, "thm-3.6-shape"},
    {Claim::kClosedForms, "thm-4.1"},
    {Claim::kTrichotomy, "thm-4.2"},
    {Claim::kTransformationMonotonicity, "eq-2.1-monotonic"},
    {Claim::kWienerCorrespondence, "wiener-correspondence"},
    {Claim::kPathStarExtremes, "path-star-extremes"},
}};

std::vector<std::string> codes_of(const ExtremalReport& r) {
  std::vector<std::string> out;
  for (const auto& o : r.optimizers) out.push_back(o.code.code);
  return out;
}

std::string pendants_of(const ExtremalReport& r) {
  std::string out = "{";
  for (std::size_t i = 0; i < r.optimizers.size(); ++i) {
    if (i) out += ", ";
    const auto& c = r.optimizers[i].caterpillar;
    out += c ? format_pendants(c->y) : r.optimizers[i].code.code;
  }
  return out + "}";
}

void finalize(VerificationReport& r, bool report_only = false) {
  if (report_only) r.status = Status::kReportOnly;
  else r.status = r.failures.empty() ? Status::kPass : Status::kFail;
}

// Every degree sequence of order min_n..max_n with min_k <= k <= max_k.
template <typename Fn>
void for_each_sequence(std::size_t min_n, std::size_t max_n, std::size_t min_k, std::size_t max_k,
                       Fn&& fn) {
  for (std::size_t n = std::max<std::size_t>(min_n, 1); n <= max_n; ++n)
    for (const auto& ds : enumerate_degree_sequences(n))
      if (ds.k() >= min_k && ds.k() <= max_k) fn(ds);
}

struct Scored {
  Tree tree;
  CanonicalCode code;
  BigCount phi;
};

std::vector<Scored> score_all(const DegreeSequence& ds, const EnumerationBudget& budget) {
  std::vector<Scored> out;
  TreeEnumerator stream(ds, budget);
  while (auto t = stream.next()) {
    auto code = canonical_form(*t);
    auto phi = count_subtrees(*t);
    out.push_back({std::move(*t), std::move(code), std::move(phi)});
  }
  return out;
}

// Codes of the entries attaining the min (or max) of `key`.
template <typename Key>
std::set<std::string> arg_extreme(const std::vector<Scored>& items, Key key, bool minimum) {
  std::set<std::string> best;
  std::optional<BigCount> value;
  for (const auto& s : items) {
    BigCount v = key(s);
    if (!value || (minimum ? v < *value : v > *value)) {
      value = v;
      best.clear();
    }
    if (v == *value) best.insert(s.code.code);
  }
  return best;
}

std::string join(const std::set<std::string>& s) {
  std::string out = "{";
  for (const auto& x : s) out += (out.size() > 1 ? ", " : "") + x;
  return out + "}";
}

}  // namespace

std::string_view claim_id(Claim c) {
  for (auto [claim, id] : kClaimIds)
    if (claim == c) return id;
  return "unknown";
}

Claim parse_claim(std::string_view id) {
  for (auto [claim, name] : kClaimIds)
    if (name == id) return claim;
  throw InputError("unknown claim '" + std::string(id) + "'");
}

const std::vector<Claim>& all_claims() {
  static const std::vector<Claim> claims = [] {
    std::vector<Claim> v;
    for (auto [claim, id] : kClaimIds) v.push_back(claim);
    return v;
  }();
  return claims;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::kPass: return "pass";
    case Status::kFail: return "fail";
    case Status::kReportOnly: return "report-only";
  }
  return "fail";
}

VerificationReport verify_caterpillar_minimality(std::size_t max_n, const EnumerationBudget& budget) {
  VerificationReport r;
  r.claim = Claim::kCaterpillarMinimality;
  r.universe = {1, max_n, 0, max_n, "all trees"};
  std::size_t minimizers = 0;
  for_each_sequence(1, max_n, 0, max_n, [&](const DegreeSequence& ds) {
    ++r.instances_checked;
    const auto report = find_min_subtrees(ds, SearchMethod::kBrute, budget);
    for (const auto& o : report.optimizers) {
      ++minimizers;
      if (!is_caterpillar(o.tree))
        r.failures.push_back({ds.to_string(), {o.code.code}, "caterpillar", "non-caterpillar minimizer"});
    }
  });
  r.findings.emplace_back("minimizers_checked", std::to_string(minimizers));
  finalize(r);
  return r;
}

namespace {

VerificationReport verify_shape(Claim claim, std::size_t max_n, std::size_t max_k) {
  const bool minimum = claim == Claim::kValleyShape;
  VerificationReport r;
  r.claim = claim;
  r.universe = {1, max_n, 3, max_k, "caterpillars"};
  std::size_t optimizers = 0, end_claims = 0;
  for_each_sequence(1, max_n, 3, max_k, [&](const DegreeSequence& ds) {
    ++r.instances_checked;
    const auto report = find_extremal(
        ds, minimum ? Objective::kMinSubtrees : Objective::kMaxSubtrees, SearchMethod::kCaterpillar);
    const std::size_t floor = ds.d(ds.k()) - 2;
    for (const auto& o : report.optimizers) {
      ++optimizers;
      const auto& z = o.caterpillar->y;
      if (!o.shape_index) {
        r.failures.push_back({ds.to_string(), {o.code.code},
                              minimum ? "valley with z_t = d_k - 2" : "mountain",
                              format_pendants(z)});
        continue;
      }
      // With d2 > dk the minimizer's far end must exceed d_k - 2.
      if (minimum && ds.d(2) > ds.d(ds.k())) {
        ++end_claims;
        if (z.back() <= floor)
          r.failures.push_back({ds.to_string(), {o.code.code}, "z_k > d_k - 2", format_pendants(z)});
      }
    }
  });
  r.findings.emplace_back("optimizers_checked", std::to_string(optimizers));
  if (minimum) r.findings.emplace_back("end_claims_checked", std::to_string(end_claims));
  finalize(r);
  return r;
}

}  // namespace

VerificationReport verify_valley_shape(std::size_t max_n, std::size_t max_k) {
  return verify_shape(Claim::kValleyShape, max_n, max_k);
}

VerificationReport verify_mountain_shape(std::size_t max_n, std::size_t max_k) {
  return verify_shape(Claim::kMountainShape, max_n, max_k);
}

VerificationReport verify_closed_forms(std::size_t max_n) {
  VerificationReport r;
  r.claim = Claim::kClosedForms;
  r.universe = {1, max_n, 2, 4, "caterpillars"};
  std::size_t display_order_minimal = 0, k3_instances = 0;
  for_each_sequence(1, max_n, 2, 4, [&](const DegreeSequence& ds) {
    ++r.instances_checked;
    const auto form = closed_form_phi(ds);
    const auto search = find_min_subtrees(ds, SearchMethod::kCaterpillar);
    const auto stated = canonical_form(caterpillar_build(form.minimizer)).code;
    if (search.optimum != form.phi)
      r.failures.push_back({ds.to_string(), codes_of(search), "phi = " + to_decimal(form.phi),
                            "phi = " + to_decimal(search.optimum)});
    if (search.optimizers.size() != 1 || search.optimizers.front().code.code != stated)
      r.failures.push_back({ds.to_string(), codes_of(search),
                            "unique minimizer " + format_pendants(form.minimizer.y),
                            pendants_of(search)});
    if (ds.k() == 3) {
      ++k3_instances;
      // The other k = 3 ordering, C(d1-2, d2-2, d3-2).
      const Caterpillar other{{ds.d(1) - 2, ds.d(2) - 2, ds.d(3) - 2}};
      if (count_subtrees(caterpillar_build(other)) == search.optimum) ++display_order_minimal;
    }
  });
  r.findings.emplace_back("k3_instances", std::to_string(k3_instances));
  r.findings.emplace_back("k3_order_d1_d2_d3_also_minimal", std::to_string(display_order_minimal));
  finalize(r);
  return r;
}

VerificationReport verify_trichotomy(std::size_t max_n) {
  VerificationReport r;
  r.claim = Claim::kTrichotomy;
  r.universe = {1, max_n, 5, 5, "caterpillars"};
  std::map<std::string, std::size_t> tags;
  std::map<std::size_t, std::size_t> cardinality;
  std::size_t equality_branch = 0;
  for_each_sequence(1, max_n, 5, 5, [&](const DegreeSequence& ds) {
    ++r.instances_checked;
    const auto predicted = predict_min_k5(ds);
    const auto search = find_min_subtrees(ds, SearchMethod::kCaterpillar);
    ++tags[std::string(to_string(predicted.which.tag))];
    ++cardinality[search.optimizers.size()];
    if (!predicted.which.d4_equals_d5 && predicted.which.lhs == predicted.which.rhs) ++equality_branch;

    std::vector<Caterpillar> observed;
    for (const auto& o : search.optimizers) observed.push_back(*o.caterpillar);
    std::sort(observed.begin(), observed.end());
    if (observed != predicted.minimizers) {
      std::string expected = "{";
      for (const auto& c : predicted.minimizers) expected += (expected.size() > 1 ? ", " : "") + format_pendants(c.y);
      r.failures.push_back({ds.to_string(), codes_of(search), expected + "}", pendants_of(search)});
    }
    // The factored difference identity between the two candidate shapes.
    auto d = [&](std::size_t i) { return ds.d(i) - 2; };
    const BigCount diff =
        BigCount(count_subtrees(caterpillar_build({{d(1), d(5), d(4), d(3), d(2)}}))) -
        count_subtrees(caterpillar_build({{d(1), d(4), d(5), d(3), d(2)}}));
    const BigCount identity = k5_difference_identity(ds);
    if (diff != identity)
      r.failures.push_back({ds.to_string(), {}, "difference " + identity.str(), "difference " + diff.str()});
  });
  for (auto& [tag, count] : tags) r.findings.emplace_back("case_" + tag, std::to_string(count));
  for (auto& [size, count] : cardinality)
    r.findings.emplace_back("minimizer_sets_of_size_" + std::to_string(size), std::to_string(count));
  r.findings.emplace_back("equality_branch_instances", std::to_string(equality_branch));
  finalize(r);
  return r;
}

VerificationReport verify_transformation_monotonicity(std::size_t max_n, const EnumerationBudget& budget) {
  VerificationReport r;
  r.claim = Claim::kTransformationMonotonicity;
  r.universe = {1, max_n, 0, max_n, "non-caterpillar trees"};
  std::size_t trees = 0, non_caterpillars = 0, candidates = 0, stuck = 0;
  for_each_sequence(1, max_n, 0, max_n, [&](const DegreeSequence& ds) {
    TreeEnumerator stream(ds, budget);
    while (auto t = stream.next()) {
      ++trees;
      if (is_caterpillar(*t)) continue;
      ++non_caterpillars;
      const BigCount before = count_subtrees(*t);
      bool any = false;
      for (const auto& inst : branch_shift_instances(*t)) {
        ++candidates;
        if (!inst.precondition_holds()) continue;
        any = true;
        ++r.instances_checked;
        const Tree shifted = shift_branch_to_end(*t, inst.y, inst.path.back());
        const BigCount after = count_subtrees(shifted);
        if (shifted.degree_multiset() != t->degree_multiset() || !(after < before))
          r.failures.push_back({ds.to_string(),
                                {canonical_form(*t).code, canonical_form(shifted).code},
                                "phi < " + before.str() + " with same degrees",
                                "phi = " + after.str()});
      }
      if (!any) ++stuck;
    }
  });
  r.findings.emplace_back("trees_scanned", std::to_string(trees));
  r.findings.emplace_back("non_caterpillars", std::to_string(non_caterpillars));
  r.findings.emplace_back("candidate_instances", std::to_string(candidates));
  r.findings.emplace_back("non_caterpillars_without_applicable_instance", std::to_string(stuck));
  finalize(r);
  return r;
}

VerificationReport explore_wiener_correspondence(std::size_t max_n, const EnumerationBudget& budget) {
  VerificationReport r;
  r.claim = Claim::kWienerCorrespondence;
  r.universe = {1, max_n, 0, max_n, "all trees"};
  r.table.push_back({"n", "sequences", "max_phi_eq_min_wiener", "min_phi_eq_max_wiener"});
  std::size_t agree_max_total = 0, agree_min_total = 0;
  for (std::size_t n = 1; n <= max_n; ++n) {
    std::size_t sequences = 0, agree_max = 0, agree_min = 0;
    for (const auto& ds : enumerate_degree_sequences(n)) {
      ++sequences;
      ++r.instances_checked;
      const auto scored = score_all(ds, budget);
      std::map<std::string, BigCount> wiener_of;
      for (const auto& s : scored) wiener_of[s.code.code] = wiener_index(s.tree);
      auto phi = [](const Scored& s) { return s.phi; };
      auto w = [&](const Scored& s) { return wiener_of.at(s.code.code); };
      const auto phi_max = arg_extreme(scored, phi, false);
      const auto phi_min = arg_extreme(scored, phi, true);
      const auto w_min = arg_extreme(scored, w, true);
      const auto w_max = arg_extreme(scored, w, false);
      if (phi_max == w_min) ++agree_max;
      else r.failures.push_back({ds.to_string(), {}, "max-phi " + join(phi_max), "min-wiener " + join(w_min)});
      if (phi_min == w_max) ++agree_min;
      else r.failures.push_back({ds.to_string(), {}, "min-phi " + join(phi_min), "max-wiener " + join(w_max)});
    }
    agree_max_total += agree_max;
    agree_min_total += agree_min;
    r.table.push_back({std::to_string(n), std::to_string(sequences), std::to_string(agree_max),
                       std::to_string(agree_min)});
  }
  r.findings.emplace_back("sequences", std::to_string(r.instances_checked));
  r.findings.emplace_back("max_phi_eq_min_wiener", std::to_string(agree_max_total));
  r.findings.emplace_back("min_phi_eq_max_wiener", std::to_string(agree_min_total));
  finalize(r, /*report_only=*/true);
  return r;
}

VerificationReport verify_path_star_extremes(std::size_t max_n, const EnumerationBudget& budget) {
  VerificationReport r;
  r.claim = Claim::kPathStarExtremes;
  r.universe = {1, max_n, 0, max_n, "all trees of order n"};
  for (std::size_t n = 1; n <= max_n; ++n) {
    ++r.instances_checked;
    std::vector<Scored> universe;
    for (const auto& ds : enumerate_degree_sequences(n)) {
      auto part = score_all(ds, budget);
      std::move(part.begin(), part.end(), std::back_inserter(universe));
    }
    auto phi = [](const Scored& s) { return s.phi; };
    const std::set<std::string> path{canonical_form(path_tree(n)).code};
    const std::set<std::string> star{canonical_form(star_tree(n)).code};
    const auto lo = arg_extreme(universe, phi, true);
    const auto hi = arg_extreme(universe, phi, false);
    const std::string ds = "n=" + std::to_string(n);
    if (lo != path) r.failures.push_back({ds, {lo.begin(), lo.end()}, "unique minimizer path", join(lo)});
    if (hi != star) r.failures.push_back({ds, {hi.begin(), hi.end()}, "unique maximizer star", join(hi)});
  }
  finalize(r);
  return r;
}

VerificationReport run_claim(Claim claim, std::size_t max_n, std::size_t max_k,
                             const EnumerationBudget& budget) {
  switch (claim) {
    case Claim::kCaterpillarMinimality: return verify_caterpillar_minimality(max_n, budget);
    case Claim::kValleyShape: return verify_valley_shape(max_n, max_k);
    case Claim::kMountainShape: return verify_mountain_shape(max_n, max_k);
    case Claim::kClosedForms: return verify_closed_forms(max_n);
    case Claim::kTrichotomy: return verify_trichotomy(max_n);
    case Claim::kTransformationMonotonicity: return verify_transformation_monotonicity(max_n, budget);
    case Claim::kWienerCorrespondence: return explore_wiener_correspondence(max_n, budget);
    case Claim::kPathStarExtremes: return verify_path_star_extremes(max_n, budget);
  }
  throw InputError("unknown claim");
}

}  // namespace treextremal
