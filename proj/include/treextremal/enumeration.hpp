#pragma once

#include <cstddef>
#include <optional>
#include <unordered_set>
#include <vector>

#include "treextremal/big_count.hpp"
#include "treextremal/canonical.hpp"
#include "treextremal/caterpillar.hpp"
#include "treextremal/degree_sequence.hpp"
#include "treextremal/tree.hpp"

namespace treextremal {

struct EnumerationBudget {
  static constexpr std::size_t kDefaultMaxLabeled = 10'000'000;
  static constexpr std::size_t kDefaultMaxN = 16;

  /// Cap on the number of labeled trees (Prufer words) to be decoded.
  std::size_t max_labeled = kDefaultMaxLabeled;
  /// Cap on the vertex count for full tree enumeration.
  std::size_t max_n = kDefaultMaxN;
};

/// (n-2)! / prod (d_i - 1)!: labeled trees where vertex i has degree d_i.
BigCount count_labeled_trees(const DegreeSequence& ds);

/// Number of caterpillar classes C(y) realizing ds (multiset permutations
/// of the pendant vector up to reversal).
BigCount count_caterpillars(const DegreeSequence& ds);

/// Throws BudgetExceeded when full enumeration of ds would exceed budget.
void check_budget(const DegreeSequence& ds, const EnumerationBudget& budget);

/// Stream of one representative per isomorphism class of trees realizing
/// ds. Prufer words are visited as lexicographic multiset permutations and
/// deduplicated by canonical code. Single consumer.
class TreeEnumerator {
 public:
  /// Throws BudgetExceeded before any work is done.
  TreeEnumerator(const DegreeSequence& ds, const EnumerationBudget& budget = {});

  std::optional<Tree> next();
  /// Labeled trees decoded so far.
  std::size_t labeled_visited() const noexcept { return labeled_visited_; }

 private:
  std::size_t n_;
  std::vector<Vertex> word_;
  bool exhausted_ = false;
  bool short_circuit_ = false;
  std::size_t labeled_visited_ = 0;
  std::unordered_set<CanonicalCode> seen_;
};

std::vector<Tree> enumerate_trees(const DegreeSequence& ds, const EnumerationBudget& budget = {});

/// Stream of canonical pendant vectors of C_pi. Throws NoInternalVertices
/// when k = 0.
class CaterpillarEnumerator {
 public:
  explicit CaterpillarEnumerator(const DegreeSequence& ds);
  std::optional<Caterpillar> next();

 private:
  std::vector<std::size_t> y_;
  bool exhausted_ = false;
};

std::vector<Caterpillar> enumerate_caterpillars(const DegreeSequence& ds);

/// Every tree degree sequence of order n, in descending lexicographic order.
std::vector<DegreeSequence> enumerate_degree_sequences(std::size_t n);

}  // namespace treextremal
