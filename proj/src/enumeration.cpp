#include "treextremal/enumeration.hpp"

#include <algorithm>
#include <map>

#include "treextremal/errors.hpp"
#include "treextremal/prufer.hpp"

namespace treextremal {

namespace {

BigCount factorial(std::size_t m) {
  BigCount r = 1;
  for (std::size_t i = 2; i <= m; ++i) r *= i;
  return r;
}

}  // namespace

BigCount count_labeled_trees(const DegreeSequence& ds) {
  if (ds.n() <= 2) return 1;
  BigCount r = factorial(ds.n() - 2);
  for (std::size_t d : ds.degrees()) r /= factorial(d - 1);
  return r;
}

BigCount count_caterpillars(const DegreeSequence& ds) {
  const auto y = ds.internal_pendants();
  if (y.empty()) return 0;
  std::map<std::size_t, std::size_t> mult;
  for (auto v : y) ++mult[v];
  BigCount perms = factorial(y.size());
  std::size_t odd = 0;
  for (auto [v, m] : mult) {
    perms /= factorial(m);
    odd += m % 2;
  }
  BigCount palindromes = 0;
  if (odd <= 1) {
    palindromes = factorial(y.size() / 2);
    for (auto [v, m] : mult) palindromes /= factorial(m / 2);
  }
  return (perms + palindromes) / 2;
}

void check_budget(const DegreeSequence& ds, const EnumerationBudget& budget) {
  const BigCount labeled = count_labeled_trees(ds);
  if (ds.n() > budget.max_n)
    throw BudgetExceeded("tree enumeration of " + ds.to_string() + " exceeds max_n = " +
                             std::to_string(budget.max_n) + " (predicted labeled count " +
                             to_decimal(labeled) + ")",
                         to_decimal(labeled));
  if (labeled > budget.max_labeled)
    throw BudgetExceeded("tree enumeration of " + ds.to_string() + " needs " + to_decimal(labeled) +
                             " labeled trees, budget is " + std::to_string(budget.max_labeled),
                         to_decimal(labeled));
}

TreeEnumerator::TreeEnumerator(const DegreeSequence& ds, const EnumerationBudget& budget)
    : n_(ds.n()) {
  check_budget(ds, budget);
  if (n_ <= 2) {
    short_circuit_ = true;
    return;
  }
  for (Vertex v = 0; v < n_; ++v) word_.insert(word_.end(), ds.degrees()[v] - 1, v);
}

std::optional<Tree> TreeEnumerator::next() {
  if (exhausted_) return std::nullopt;
  if (short_circuit_) {
    exhausted_ = true;
    ++labeled_visited_;
    return path_tree(n_);
  }
  while (true) {
    Tree t = prufer_decode(word_, n_);
    ++labeled_visited_;
    const bool more = std::next_permutation(word_.begin(), word_.end());
    const bool fresh = seen_.insert(canonical_form(t)).second;
    if (!more) exhausted_ = true;
    if (fresh) return t;
    if (exhausted_) return std::nullopt;
  }
}

std::vector<Tree> enumerate_trees(const DegreeSequence& ds, const EnumerationBudget& budget) {
  TreeEnumerator stream(ds, budget);
  std::vector<Tree> out;
  while (auto t = stream.next()) out.push_back(std::move(*t));
  return out;
}

CaterpillarEnumerator::CaterpillarEnumerator(const DegreeSequence& ds) : y_(ds.internal_pendants()) {
  if (y_.empty()) throw NoInternalVertices("degree sequence " + ds.to_string() + " has k = 0");
  std::sort(y_.begin(), y_.end());
}

std::optional<Caterpillar> CaterpillarEnumerator::next() {
  while (!exhausted_) {
    Caterpillar c{y_};
    exhausted_ = !std::next_permutation(y_.begin(), y_.end());
    // Keep the orientation that is lexicographically >= its mirror.
    if (std::lexicographical_compare(c.y.rbegin(), c.y.rend(), c.y.begin(), c.y.end()) ||
        std::equal(c.y.begin(), c.y.end(), c.y.rbegin()))
      return c;
  }
  return std::nullopt;
}

std::vector<Caterpillar> enumerate_caterpillars(const DegreeSequence& ds) {
  CaterpillarEnumerator stream(ds);
  std::vector<Caterpillar> out;
  while (auto c = stream.next()) out.push_back(std::move(*c));
  return out;
}

std::vector<DegreeSequence> enumerate_degree_sequences(std::size_t n) {
  if (n == 1) return {DegreeSequence({0})};
  std::vector<DegreeSequence> out;
  std::vector<std::size_t> parts;
  // Partitions of 2(n-1) into n parts >= 1, parts nonincreasing, largest first.
  auto rec = [&](auto&& self, std::size_t remaining, std::size_t slots, std::size_t cap) -> void {
    if (slots == 0) {
      if (remaining == 0) out.emplace_back(parts);
      return;
    }
    const std::size_t hi = std::min(cap, remaining - (slots - 1));
    for (std::size_t d = hi; d >= 1; --d) {
      if (d * slots < remaining) break;
      parts.push_back(d);
      self(self, remaining - d, slots - 1, d);
      parts.pop_back();
    }
  };
  rec(rec, 2 * (n - 1), n, 2 * (n - 1));
  return out;
}

}  // namespace treextremal
