#include "treextremal/subtree_count.hpp"

#include <cstdint>

#include "treextremal/errors.hpp"

namespace treextremal {

namespace {

// BFS order from `root` with parent links; parent[root] == root.
struct RootedView {
  std::vector<Vertex> order;
  std::vector<Vertex> parent;
};

RootedView root_at(const Tree& t, Vertex root) {
  const std::size_t n = t.size();
  RootedView view;
  view.parent.assign(n, n);
  view.order.reserve(n);
  view.parent[root] = root;
  view.order.push_back(root);
  for (std::size_t i = 0; i < view.order.size(); ++i) {
    Vertex u = view.order[i];
    for (Vertex w : t.neighbors(u))
      if (view.parent[w] == n) {
        view.parent[w] = u;
        view.order.push_back(w);
      }
  }
  return view;
}

// down[v] = subtrees of v's rooted subtree that contain v.
std::vector<BigCount> down_counts(const Tree& t, const RootedView& view) {
  std::vector<BigCount> down(t.size(), BigCount(1));
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    Vertex u = *it;
    if (view.parent[u] != u) down[view.parent[u]] *= 1 + down[u];
  }
  return down;
}

void check_vertex(const Tree& t, Vertex v) {
  if (v >= t.size())
    throw VertexOutOfRange("vertex " + std::to_string(v) + " not in tree of order " +
                           std::to_string(t.size()));
}

}  // namespace

BigCount count_subtrees(const Tree& t) {
  auto down = down_counts(t, root_at(t, 0));
  BigCount total = 0;
  for (const auto& d : down) total += d;
  return total;
}

BigCount count_subtrees_containing(const Tree& t, Vertex v) {
  check_vertex(t, v);
  return down_counts(t, root_at(t, v))[v];
}

VertexCountMap count_all_containing(const Tree& t) {
  const std::size_t n = t.size();
  const auto view = root_at(t, 0);
  const auto down = down_counts(t, view);
  // up[v]: subtrees containing parent(v) that avoid v's branch.
  std::vector<BigCount> up(n, BigCount(0));
  VertexCountMap all(n);
  for (Vertex u : view.order) {
    all[u] = down[u] * (1 + up[u]);
    std::vector<Vertex> kids;
    for (Vertex w : t.neighbors(u))
      if (view.parent[w] == u && w != u) kids.push_back(w);
    const std::size_t m = kids.size();
    // suffix[i] = prod_{j >= i} (1 + down[kid_j])
    std::vector<BigCount> suffix(m + 1, BigCount(1));
    for (std::size_t i = m; i-- > 0;) suffix[i] = suffix[i + 1] * (1 + down[kids[i]]);
    BigCount prefix = 1 + up[u];
    for (std::size_t i = 0; i < m; ++i) {
      up[kids[i]] = prefix * suffix[i + 1];
      prefix *= 1 + down[kids[i]];
    }
  }
  return all;
}

BigCount count_subtrees_containing_set(const Tree& t, const std::vector<Vertex>& vs) {
  if (vs.empty()) throw InputError("vertex set must be nonempty");
  for (Vertex v : vs) check_vertex(t, v);
  const auto view = root_at(t, vs.front());
  const auto down = down_counts(t, view);
  std::vector<bool> steiner(t.size(), false);
  for (Vertex v : vs) steiner[v] = true;
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it)
    if (steiner[*it]) steiner[view.parent[*it]] = true;
  BigCount result = 1;
  for (Vertex u : view.order) {
    if (!steiner[u]) continue;
    for (Vertex w : t.neighbors(u))
      if (view.parent[w] == u && w != u && !steiner[w]) result *= 1 + down[w];
  }
  return result;
}

namespace {

using Mask = std::uint32_t;

// Connected sets that contain `set`, may grow through `frontier`, and never
// use `banned`. Branches on the lowest frontier vertex: exclude or include.
std::uint64_t grow(const std::vector<Mask>& adj, Mask set, Mask frontier, Mask banned) {
  if (frontier == 0) return 1;
  const int w = __builtin_ctz(frontier);
  const Mask bit = Mask{1} << w;
  std::uint64_t without = grow(adj, set, frontier & ~bit, banned | bit);
  const Mask grown = set | bit;
  std::uint64_t with = grow(adj, grown, (frontier | adj[w]) & ~grown & ~banned, banned);
  return without + with;
}

}  // namespace

BigCount brute_force_count(const Tree& t) {
  const std::size_t n = t.size();
  if (n > kBruteForceMaxVertices)
    throw TooLarge("brute-force oracle limited to " + std::to_string(kBruteForceMaxVertices) +
                   " vertices");
  std::vector<Mask> adj(n, 0);
  for (auto [u, v] : t.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  std::uint64_t total = 0;
  for (std::size_t v = 0; v < n; ++v) {
    // Sets whose smallest vertex is v: everything below v is banned.
    const Mask below = (Mask{1} << v) - 1;
    const Mask self = Mask{1} << v;
    total += grow(adj, self, adj[v] & ~below, below);
  }
  return BigCount(total);
}

BigCount wiener_index(const Tree& t) {
  BigCount twice = 0;
  for (Vertex v = 0; v < t.size(); ++v)
    for (std::size_t d : distances_from(t, v)) twice += d;
  return twice / 2;
}

std::vector<ComponentCounts> component_counts(const Caterpillar& c) {
  const std::size_t k = c.k();
  std::vector<ComponentCounts> rows(k + 2, ComponentCounts{1, 1, 1});
  for (std::size_t j = 1; j <= k; ++j) {
    rows[j].own = pow2(static_cast<unsigned>(c.y[j - 1]));
    rows[j].left = rows[j].own * (1 + rows[j - 1].left);
  }
  for (std::size_t j = k; j >= 1; --j) rows[j].right = rows[j].own * (1 + rows[j + 1].right);
  return rows;
}

ComponentCounts component_counts(const Caterpillar& c, std::size_t j) {
  if (j > c.k() + 1)
    throw IndexOutOfRange("spine index " + std::to_string(j) + " outside 0.." +
                          std::to_string(c.k() + 1));
  return component_counts(c)[j];
}

}  // namespace treextremal
