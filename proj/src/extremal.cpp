#include "treextremal/extremal.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "treextremal/errors.hpp"
#include "treextremal/subtree_count.hpp"

namespace treextremal {

std::string_view to_string(Objective o) {
  return o == Objective::kMinSubtrees ? "min" : "max";
}

std::string_view to_string(SearchMethod m) {
  switch (m) {
    case SearchMethod::kBrute: return "brute";
    case SearchMethod::kCaterpillar: return "caterpillar";
    case SearchMethod::kClosedForm: return "closed-form";
    case SearchMethod::kAuto: return "auto";
  }
  return "auto";
}

Objective parse_objective(std::string_view s) {
  if (s == "min") return Objective::kMinSubtrees;
  if (s == "max") return Objective::kMaxSubtrees;
  throw InputError("unknown objective '" + std::string(s) + "' (expected min|max)");
}

SearchMethod parse_method(std::string_view s) {
  for (auto m : {SearchMethod::kBrute, SearchMethod::kCaterpillar, SearchMethod::kClosedForm,
                 SearchMethod::kAuto})
    if (s == to_string(m)) return m;
  throw InputError("unknown method '" + std::string(s) +
                   "' (expected auto|brute|caterpillar|closed-form)");
}

std::string_view to_string(TrichotomyTag tag) {
  switch (tag) {
    case TrichotomyTag::kI: return "I";
    case TrichotomyTag::kII: return "II";
    case TrichotomyTag::kIII: return "III";
  }
  return "II";
}

namespace {

unsigned u(std::size_t x) { return static_cast<unsigned>(x); }

std::optional<std::size_t> shape_of(const Caterpillar& c, Objective objective, std::size_t floor) {
  if (c.k() < 3) return std::nullopt;
  std::vector<std::size_t> mirrored(c.y.rbegin(), c.y.rend());
  if (objective == Objective::kMinSubtrees) {
    // Canonical orientation already has z1 >= zk.
    if (auto t = valley_index(c.y, floor)) return t;
    if (c.y.front() == c.y.back()) return valley_index(mirrored, floor);
    return std::nullopt;
  }
  if (auto t = mountain_index(c.y)) return t;
  return mountain_index(mirrored);
}

// Keeps the best value and every tree attaining it.
class OptimumTracker {
 public:
  OptimumTracker(const DegreeSequence& ds, Objective objective) : ds_(ds), objective_(objective) {}

  void offer(Tree t, const BigCount& phi) {
    ++examined_;
    if (!best_ || better(phi, *best_)) {
      best_ = phi;
      trees_.clear();
    } else if (phi != *best_) {
      return;
    }
    trees_.push_back(std::move(t));
  }

  ExtremalReport finish(SearchMethod method) && {
    ExtremalReport r{ds_, objective_, best_.value_or(0), {}, method, examined_, false};
    const std::size_t floor = ds_.k() > 0 ? ds_.d(ds_.k()) - 2 : 0;
    std::set<CanonicalCode> codes;
    for (auto& t : trees_) {
      auto code = canonical_form(t);
      if (!codes.insert(code).second) continue;
      Optimizer o{std::move(t), std::move(code), std::nullopt, std::nullopt};
      o.caterpillar = caterpillar_recognize(o.tree);
      if (o.caterpillar) o.shape_index = shape_of(*o.caterpillar, objective_, floor);
      r.optimizers.push_back(std::move(o));
    }
    std::sort(r.optimizers.begin(), r.optimizers.end(),
              [](const Optimizer& a, const Optimizer& b) { return a.code < b.code; });
    return r;
  }

 private:
  bool better(const BigCount& a, const BigCount& b) const {
    return objective_ == Objective::kMinSubtrees ? a < b : a > b;
  }

  const DegreeSequence& ds_;
  Objective objective_;
  std::optional<BigCount> best_;
  std::vector<Tree> trees_;
  std::size_t examined_ = 0;
};

// The unique realization when k <= 1: a single vertex, an edge, or a star.
Tree unique_realization(const DegreeSequence& ds) {
  return ds.k() == 0 ? path_tree(ds.n()) : star_tree(ds.n());
}

ExtremalReport search_brute(const DegreeSequence& ds, Objective objective,
                            const EnumerationBudget& budget) {
  OptimumTracker tracker(ds, objective);
  TreeEnumerator stream(ds, budget);
  while (auto t = stream.next()) {
    BigCount phi = count_subtrees(*t);
    tracker.offer(std::move(*t), phi);
  }
  return std::move(tracker).finish(SearchMethod::kBrute);
}

ExtremalReport search_caterpillars(const DegreeSequence& ds, Objective objective) {
  OptimumTracker tracker(ds, objective);
  if (ds.k() == 0) {
    Tree t = unique_realization(ds);
    BigCount phi = count_subtrees(t);
    tracker.offer(std::move(t), phi);
  } else {
    CaterpillarEnumerator stream(ds);
    while (auto c = stream.next()) {
      Tree t = caterpillar_build(*c);
      BigCount phi = count_subtrees(t);
      tracker.offer(std::move(t), phi);
    }
  }
  return std::move(tracker).finish(SearchMethod::kCaterpillar);
}

ExtremalReport search_closed_form(const DegreeSequence& ds) {
  OptimumTracker tracker(ds, Objective::kMinSubtrees);
  const std::size_t k = ds.k();
  if (k <= 1) {
    Tree t = unique_realization(ds);
    BigCount phi = count_subtrees(t);
    tracker.offer(std::move(t), phi);
  } else if (k <= 4) {
    auto form = closed_form_phi(ds);
    tracker.offer(caterpillar_build(form.minimizer), form.phi);
  } else if (k == 5) {
    for (const auto& c : predict_min_k5(ds).minimizers) {
      Tree t = caterpillar_build(c);
      BigCount phi = count_subtrees(t);
      tracker.offer(std::move(t), phi);
    }
  } else {
    throw ClosedFormUnavailable("no closed form for k = " + std::to_string(k) + " > 5");
  }
  return std::move(tracker).finish(SearchMethod::kClosedForm);
}

bool same_answer(const ExtremalReport& a, const ExtremalReport& b) {
  if (a.optimum != b.optimum || a.optimizers.size() != b.optimizers.size()) return false;
  for (std::size_t i = 0; i < a.optimizers.size(); ++i)
    if (a.optimizers[i].code != b.optimizers[i].code) return false;
  return true;
}

bool brute_fits(const DegreeSequence& ds, const EnumerationBudget& budget) {
  return ds.n() <= budget.max_n && count_labeled_trees(ds) <= budget.max_labeled;
}

}  // namespace

ExtremalReport find_extremal(const DegreeSequence& ds, Objective objective, SearchMethod method,
                             const EnumerationBudget& budget) {
  if (objective == Objective::kMaxSubtrees) {
    if (method == SearchMethod::kClosedForm)
      throw ClosedFormUnavailable("no closed form exists for the maximum objective");
    if (method == SearchMethod::kAuto)
      method = brute_fits(ds, budget) ? SearchMethod::kBrute : SearchMethod::kCaterpillar;
  }
  switch (method) {
    case SearchMethod::kBrute: return search_brute(ds, objective, budget);
    case SearchMethod::kCaterpillar: return search_caterpillars(ds, objective);
    case SearchMethod::kClosedForm: return search_closed_form(ds);
    case SearchMethod::kAuto: break;
  }
  // Minimum, auto: closed form when available, caterpillar search otherwise.
  if (ds.k() > 5) return search_caterpillars(ds, objective);
  ExtremalReport report = search_closed_form(ds);
  if (ds.k() >= 1 && count_caterpillars(ds) <= kCrossCheckCaterpillarLimit) {
    ExtremalReport check = search_caterpillars(ds, objective);
    if (!same_answer(report, check))
      throw std::logic_error("closed form disagrees with caterpillar search for " + ds.to_string());
    report.cross_checked = true;
    report.trees_examined += check.trees_examined;
  }
  return report;
}

ExtremalReport find_min_subtrees(const DegreeSequence& ds, SearchMethod method,
                                 const EnumerationBudget& budget) {
  return find_extremal(ds, Objective::kMinSubtrees, method, budget);
}

ExtremalReport find_max_subtrees(const DegreeSequence& ds, SearchMethod method,
                                 const EnumerationBudget& budget) {
  return find_extremal(ds, Objective::kMaxSubtrees, method, budget);
}

ClosedForm closed_form_phi(const DegreeSequence& ds) {
  const std::size_t k = ds.k();
  const std::size_t n = ds.n();
  auto d = [&](std::size_t i) { return ds.d(i); };
  switch (k) {
    case 2:
      return {pow2(u(n - 2)) + pow2(u(d(1) - 1)) + pow2(u(d(2) - 1)) + (n - 2),
              Caterpillar{{d(1) - 2, d(2) - 2}}};
    case 3:
      return {BigCount(n - 3) + pow2(u(d(1) - 1)) + pow2(u(d(2) - 1)) + pow2(u(d(3) - 2)) +
                  pow2(u(d(1) + d(3) - 3)) + pow2(u(d(3) + d(2) - 3)) + pow2(u(n - 3)),
              caterpillar_canonical(Caterpillar{{d(1) - 2, d(3) - 2, d(2) - 2}})};
    case 4:
      return {BigCount(n - 4) + pow2(u(d(1) - 1)) + pow2(u(d(2) - 1)) + pow2(u(d(3) - 2)) +
                  pow2(u(d(4) - 2)) + pow2(u(d(1) + d(4) - 3)) + pow2(u(d(3) + d(4) - 4)) +
                  pow2(u(d(3) + d(2) - 3)) + pow2(u(d(1) + d(4) + d(3) - 5)) +
                  pow2(u(d(2) + d(3) + d(4) - 5)) + pow2(u(n - 4)),
              caterpillar_canonical(Caterpillar{{d(1) - 2, d(4) - 2, d(3) - 2, d(2) - 2}})};
    default:
      throw WrongK("closed form needs k in {2,3,4}, got k = " + std::to_string(k));
  }
}

TrichotomyCase classify_k5(const DegreeSequence& ds) {
  if (ds.k() != 5) throw WrongK("trichotomy needs k = 5, got k = " + std::to_string(ds.k()));
  TrichotomyCase c;
  c.lhs = pow2(u(ds.d(1)));
  c.rhs = pow2(u(ds.d(3) - 1)) * (1 + pow2(u(ds.d(2) - 1)));
  c.d4_equals_d5 = ds.d(4) == ds.d(5);
  if (c.d4_equals_d5 || c.lhs == c.rhs) c.tag = TrichotomyTag::kII;
  else c.tag = c.lhs > c.rhs ? TrichotomyTag::kI : TrichotomyTag::kIII;
  return c;
}

K5Prediction predict_min_k5(const DegreeSequence& ds) {
  K5Prediction p{classify_k5(ds), {}};
  auto d = [&](std::size_t i) { return ds.d(i) - 2; };
  const Caterpillar inner_small{{d(1), d(5), d(4), d(3), d(2)}};
  const Caterpillar inner_large{{d(1), d(4), d(5), d(3), d(2)}};
  if (p.which.tag != TrichotomyTag::kIII) p.minimizers.push_back(caterpillar_canonical(inner_small));
  if (p.which.tag != TrichotomyTag::kI) p.minimizers.push_back(caterpillar_canonical(inner_large));
  std::sort(p.minimizers.begin(), p.minimizers.end());
  p.minimizers.erase(std::unique(p.minimizers.begin(), p.minimizers.end()), p.minimizers.end());
  return p;
}

BigCount k5_difference_identity(const DegreeSequence& ds) {
  const auto which = classify_k5(ds);
  return (pow2(u(ds.d(5) - 2)) - pow2(u(ds.d(4) - 2))) * (which.lhs - which.rhs) / 2;
}

Tree shift_branch_to_end(const Tree& t, Vertex y, Vertex end) {
  if (y >= t.size() || end >= t.size()) throw VertexOutOfRange("shift vertex out of range");
  if (is_caterpillar(t)) throw NotApplicable("tree is already a caterpillar");
  if (y == end || !t.is_leaf(end)) throw NotApplicable("target must be a leaf distinct from y");
  const Vertex toward = tree_path(t, y, end)[1];
  std::vector<Vertex> moved;
  for (Vertex x : t.neighbors(y))
    if (x != toward) moved.push_back(x);
  if (moved.empty()) throw NotApplicable("vertex has no branch to move");
  std::vector<Edge> edges;
  for (auto [a, b] : t.edges()) {
    const bool cut = (a == y && std::find(moved.begin(), moved.end(), b) != moved.end()) ||
                     (b == y && std::find(moved.begin(), moved.end(), a) != moved.end());
    if (!cut) edges.emplace_back(a, b);
  }
  for (Vertex x : moved) edges.emplace_back(end, x);
  return Tree(t.size(), std::move(edges));
}

namespace {

// Subtrees containing `root` inside its component once `blocked` vertices
// are removed.
BigCount blocked_count(const Tree& t, Vertex root, const std::vector<Vertex>& blocked) {
  const std::size_t n = t.size();
  std::vector<Vertex> parent(n, n), order{root};
  for (Vertex b : blocked) parent[b] = b;
  parent[root] = root;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : t.neighbors(order[i]))
      if (parent[w] == n) {
        parent[w] = order[i];
        order.push_back(w);
      }
  std::vector<BigCount> down(n, BigCount(1));
  for (std::size_t i = order.size(); i-- > 1;) down[parent[order[i]]] *= 1 + down[order[i]];
  return down[root];
}

}  // namespace

std::vector<BranchShiftInstance> branch_shift_instances(const Tree& t) {
  std::vector<BranchShiftInstance> out;
  if (is_caterpillar(t)) return out;
  const std::size_t r = diameter(t);
  for (Vertex start = 0; start < t.size(); ++start) {
    const auto dist = distances_from(t, start);
    for (Vertex end = 0; end < t.size(); ++end) {
      if (dist[end] != r || end == start) continue;
      const auto path = tree_path(t, start, end);
      std::vector<bool> on_path(t.size(), false);
      for (Vertex v : path) on_path[v] = true;
      for (std::size_t l = 2; l + 2 <= r; ++l) {
        for (Vertex y : t.neighbors(path[l])) {
          if (on_path[y] || t.degree(y) < 2) continue;
          BranchShiftInstance inst;
          inst.path = path;
          inst.l = l;
          inst.y = y;
          inst.b_l = blocked_count(t, path[l], {path[l + 1], y});
          inst.a = blocked_count(t, y, {path[l]});
          // a_i for l+1 <= i <= r, with a_r = 1 for the leaf end.
          std::vector<BigCount> a(r + 1, BigCount(1));
          for (std::size_t i = l + 1; i < r; ++i)
            a[i] = blocked_count(t, path[i], {path[i - 1], path[i + 1]});
          BigCount sum = 1, prod = 1;
          for (std::size_t i = l + 2; i <= r; ++i) {
            prod *= a[i];
            sum += prod;
          }
          inst.rhs = a[l + 1] * sum;
          out.push_back(std::move(inst));
        }
      }
    }
  }
  return out;
}

namespace {

void check_odd_segment(const Caterpillar& c, std::size_t p, std::size_t q) {
  const std::size_t k = c.k();
  if (p < 2 || p + 1 > k || q > std::min(k - p, p - 1))
    throw IndexOutOfRange("segment (p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                          ") outside 2 <= p <= k-1, q <= min(k-p, p-1) for k = " + std::to_string(k));
}

void check_even_segment(const Caterpillar& c, std::size_t p, std::size_t q) {
  const std::size_t k = c.k();
  if (p < 1 || p + 1 > k || q > std::min(k - p - 1, p - 1))
    throw IndexOutOfRange("segment (p=" + std::to_string(p) + ", q=" + std::to_string(q) +
                          ") outside 1 <= p <= k-1, q <= min(k-p-1, p-1) for k = " +
                          std::to_string(k));
}

Caterpillar reversed_range(const Caterpillar& c, std::size_t first, std::size_t last) {
  Caterpillar r = c;
  std::reverse(r.y.begin() + static_cast<std::ptrdiff_t>(first - 1),
               r.y.begin() + static_cast<std::ptrdiff_t>(last));
  return r;
}

}  // namespace

Caterpillar reverse_segment(const Caterpillar& c, std::size_t p, std::size_t q) {
  check_odd_segment(c, p, q);
  return reversed_range(c, p - q, p + q);
}

bool reverse_segment_improves(const Caterpillar& c, std::size_t p, std::size_t q) {
  check_odd_segment(c, p, q);
  const auto rows = component_counts(c);
  bool strict = false;
  for (std::size_t i = 1; i <= q; ++i) {
    if (rows[p - i].own < rows[p + i].own) return false;
    strict = strict || rows[p - i].own > rows[p + i].own;
  }
  return strict && rows[p - q - 1].left > rows[p + q + 1].right;
}

Caterpillar reverse_even_segment(const Caterpillar& c, std::size_t p, std::size_t q) {
  check_even_segment(c, p, q);
  return reversed_range(c, p - q, p + q + 1);
}

bool reverse_even_segment_improves(const Caterpillar& c, std::size_t p, std::size_t q) {
  check_even_segment(c, p, q);
  const auto rows = component_counts(c);
  bool strict = false;
  for (std::size_t i = 0; i <= q; ++i) {
    if (rows[p - i].own < rows[p + i + 1].own) return false;
    strict = strict || rows[p - i].own > rows[p + i + 1].own;
  }
  return strict && rows[p - q - 1].left > rows[p + q + 2].right;
}

}  // namespace treextremal
