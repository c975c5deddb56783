#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "treextremal/big_count.hpp"
#include "treextremal/canonical.hpp"
#include "treextremal/caterpillar.hpp"
#include "treextremal/degree_sequence.hpp"
#include "treextremal/enumeration.hpp"
#include "treextremal/tree.hpp"

namespace treextremal {

enum class Objective { kMinSubtrees, kMaxSubtrees };

/// Search space used for an extremal query. kAuto resolves to one of the
/// other three before the search runs; the report always carries the
/// resolved method.
enum class SearchMethod { kBrute, kCaterpillar, kClosedForm, kAuto };

std::string_view to_string(Objective o);
std::string_view to_string(SearchMethod m);
/// Throws InputError for unknown names.
Objective parse_objective(std::string_view s);
SearchMethod parse_method(std::string_view s);

struct Optimizer {
  Tree tree;
  CanonicalCode code;
  /// Pendant vector when the optimizer is a caterpillar with k >= 1.
  std::optional<Caterpillar> caterpillar;
  /// Valley index (minimizers) or mountain index (maximizers), when the
  /// pendant vector has that shape in its canonical orientation.
  std::optional<std::size_t> shape_index;
};

struct ExtremalReport {
  DegreeSequence degree_sequence;
  Objective objective = Objective::kMinSubtrees;
  BigCount optimum;
  /// Pairwise non-isomorphic, sorted by canonical code.
  std::vector<Optimizer> optimizers;
  SearchMethod method = SearchMethod::kBrute;
  std::size_t trees_examined = 0;
  /// Set when a closed-form answer was re-derived by caterpillar search.
  bool cross_checked = false;
};

/// Auto mode cross-checks closed forms against caterpillar search when at
/// most this many caterpillars realize the sequence.
inline constexpr std::size_t kCrossCheckCaterpillarLimit = 10'000;

/// Minimum-phi trees. Throws BudgetExceeded (brute) and
/// ClosedFormUnavailable (closed-form with k > 5).
ExtremalReport find_min_subtrees(const DegreeSequence& ds, SearchMethod method = SearchMethod::kAuto,
                                 const EnumerationBudget& budget = {});

/// Maximum-phi trees. Auto uses brute force when the budget allows and the
/// caterpillar space otherwise. No closed form exists for this objective.
ExtremalReport find_max_subtrees(const DegreeSequence& ds, SearchMethod method = SearchMethod::kAuto,
                                 const EnumerationBudget& budget = {});

ExtremalReport find_extremal(const DegreeSequence& ds, Objective objective, SearchMethod method,
                             const EnumerationBudget& budget = {});

struct ClosedForm {
  BigCount phi;
  Caterpillar minimizer;
};

/// Closed-form minimum and its minimizer for k in {2, 3, 4}:
///   k=2: C(d1-2, d2-2)
///   k=3: C(d1-2, d3-2, d2-2)
///   k=4: C(d1-2, d4-2, d3-2, d2-2)
/// Throws WrongK.
ClosedForm closed_form_phi(const DegreeSequence& ds);

enum class TrichotomyTag { kI, kII, kIII };
std::string_view to_string(TrichotomyTag tag);

/// Sign split for k = 5 on 2^d1 versus 2^(d3-1) (1 + 2^(d2-1)) and d4 versus d5.
struct TrichotomyCase {
  TrichotomyTag tag = TrichotomyTag::kII;
  BigCount lhs;
  BigCount rhs;
  bool d4_equals_d5 = false;
};

TrichotomyCase classify_k5(const DegreeSequence& ds);

struct K5Prediction {
  TrichotomyCase which;
  /// Canonical pendant vectors, sorted, without duplicates.
  std::vector<Caterpillar> minimizers;
};

/// Case I -> {C(d1-2,d5-2,d4-2,d3-2,d2-2)}, case III -> {C(d1-2,d4-2,d5-2,d3-2,d2-2)},
/// case II -> both. Throws WrongK.
K5Prediction predict_min_k5(const DegreeSequence& ds);

/// phi(C(d1-2,d5-2,d4-2,d3-2,d2-2)) - phi(C(d1-2,d4-2,d5-2,d3-2,d2-2)) from
/// the factored identity (2^(d5-2) - 2^(d4-2)) (2^(d1-1) - 2^(d3-2) (1 + 2^(d2-1))).
/// lhs - rhs is always even, so halving it is exact.
BigCount k5_difference_identity(const DegreeSequence& ds);

/// Moves every neighbour of `y` except the one towards `end` onto `end`.
/// Throws NotApplicable for caterpillars, when y has no such neighbours,
/// or when `end` is not a leaf; VertexOutOfRange for bad labels.
Tree shift_branch_to_end(const Tree& t, Vertex y, Vertex end);

/// One candidate for the branch shift: a longest path v0..vr oriented
/// towards `path.back()`, an off-path vertex y adjacent to v_l with
/// 2 <= l <= r-2 and at least one further neighbour.
struct BranchShiftInstance {
  std::vector<Vertex> path;
  std::size_t l = 0;
  Vertex y = 0;
  /// f_{W1}(v_l): v_l's side after cutting v_l v_(l+1) and v_l y.
  BigCount b_l;
  /// a_(l+1) (1 + a_(l+2) + ... + a_(l+2)...a_r) = f_{W2}(v_(l+1)).
  BigCount rhs;
  /// f_{W3}(y).
  BigCount a;
  bool precondition_holds() const { return b_l > rhs && a > 1; }
};

/// Every instance over every longest path, both orientations.
std::vector<BranchShiftInstance> branch_shift_instances(const Tree& t);

/// Reverses y_(p-q) .. y_(p+q) (1-based). Requires 2 <= p <= k-1 and
/// 0 <= q <= min(k-p, p-1); throws IndexOutOfRange.
Caterpillar reverse_segment(const Caterpillar& c, std::size_t p, std::size_t q);

/// Hypotheses under which reverse_segment strictly lowers phi:
/// f_{V_(p-i)} >= f_{V_(p+i)} for i = 1..q with one strict, and
/// f_{V_{<=p-q-1}}(v_(p-q-1)) > f_{V_{>=p+q+1}}(v_(p+q+1)).
bool reverse_segment_improves(const Caterpillar& c, std::size_t p, std::size_t q);

/// Even-length variant: reverses y_(p-q) .. y_(p+q+1). Requires
/// 1 <= p <= k-1 and 0 <= q <= min(k-p-1, p-1).
Caterpillar reverse_even_segment(const Caterpillar& c, std::size_t p, std::size_t q);
bool reverse_even_segment_improves(const Caterpillar& c, std::size_t p, std::size_t q);

}  // namespace treextremal
