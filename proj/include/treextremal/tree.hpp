#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <utility>
#include <vector>

namespace treextremal {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Unrooted tree on vertices 0..n-1.
///
/// Construction validates the tree invariants (n-1 edges, no loops, no
/// duplicates, connected), so every live Tree is a valid tree.
class Tree {
 public:
  /// Single vertex tree.
  Tree() : Tree(1, {}) {}
  Tree(std::size_t n, std::vector<Edge> edges);

  std::size_t size() const noexcept { return adjacency_.size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adjacency_.at(v); }
  std::size_t degree(Vertex v) const { return adjacency_.at(v).size(); }
  bool is_leaf(Vertex v) const { return degree(v) == 1; }

  /// Edges normalized to (min, max), sorted.
  std::vector<Edge> edges() const;
  /// Degrees in nonincreasing order.
  std::vector<std::size_t> degree_multiset() const;

 private:
  std::vector<std::vector<Vertex>> adjacency_;
};

Tree path_tree(std::size_t n);
Tree star_tree(std::size_t n);

/// BFS distances from `source`.
std::vector<std::size_t> distances_from(const Tree& t, Vertex source);
/// Vertices of the unique path from `from` to `to`, inclusive.
std::vector<Vertex> tree_path(const Tree& t, Vertex from, Vertex to);

/// Longest path length in edges (double BFS). 0 for a single vertex.
std::size_t diameter(const Tree& t);

/// True iff deleting every leaf leaves a path (or at most one vertex).
bool is_caterpillar(const Tree& t);

/// Reads the edge-list format: `n` on the first line, then n-1 lines `u v`.
Tree read_edge_list(std::istream& in);
Tree parse_edge_list(const std::string& text);
std::string format_edge_list(const Tree& t);

}  // namespace treextremal
