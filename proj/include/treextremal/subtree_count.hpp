#pragma once

#include <cstddef>
#include <vector>

#include "treextremal/big_count.hpp"
#include "treextremal/caterpillar.hpp"
#include "treextremal/tree.hpp"

namespace treextremal {

/// Per-vertex table v -> f_T(v).
using VertexCountMap = std::vector<BigCount>;

/// Number of nonempty subtrees (connected vertex subsets) of t.
BigCount count_subtrees(const Tree& t);

/// Number of subtrees containing v. Throws VertexOutOfRange.
BigCount count_subtrees_containing(const Tree& t, Vertex v);

/// f_T(v) for every v via one downward and one upward (rerooting) sweep.
VertexCountMap count_all_containing(const Tree& t);

/// Number of subtrees containing every vertex of `vs`. The Steiner tree of
/// `vs` is contracted to a single vertex. Throws VertexOutOfRange, InputError.
BigCount count_subtrees_containing_set(const Tree& t, const std::vector<Vertex>& vs);

/// Independent oracle: counts connected subsets by growing each set from
/// its smallest vertex. Throws TooLarge above kBruteForceMaxVertices.
inline constexpr std::size_t kBruteForceMaxVertices = 20;
BigCount brute_force_count(const Tree& t);

/// Sum of distances over unordered vertex pairs.
BigCount wiener_index(const Tree& t);

/// Counts for the components around spine vertex v_j of C(y):
///   own   = f_{V_j}(v_j)      (v_j plus its pendants)
///   left  = f_{V_{<=j}}(v_j)  (after deleting v_j v_{j+1})
///   right = f_{V_{>=j}}(v_j)  (after deleting v_{j-1} v_j)
/// Rows 0 and k+1 are the single spine ends and are all 1.
struct ComponentCounts {
  BigCount own;
  BigCount left;
  BigCount right;
};

/// Rows j = 0..k+1.
std::vector<ComponentCounts> component_counts(const Caterpillar& c);
/// Single row; throws IndexOutOfRange when j > k+1.
ComponentCounts component_counts(const Caterpillar& c, std::size_t j);

}  // namespace treextremal
