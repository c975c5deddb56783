#include "treextremal/canonical.hpp"

#include <algorithm>

namespace treextremal {

std::vector<Vertex> tree_centers(const Tree& t) {
  const std::size_t n = t.size();
  if (n <= 2) {
    std::vector<Vertex> all(n);
    for (Vertex v = 0; v < n; ++v) all[v] = v;
    return all;
  }
  std::vector<std::size_t> degree(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer)
      for (Vertex w : t.neighbors(leaf))
        if (--degree[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

std::string rooted_code(const Tree& t, Vertex root) {
  const std::size_t n = t.size();
  // Iterative post-order so deep paths do not recurse.
  std::vector<Vertex> order;
  std::vector<Vertex> parent(n, n);
  order.reserve(n);
  std::vector<Vertex> stack{root};
  parent[root] = root;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    order.push_back(u);
    for (Vertex w : t.neighbors(u))
      if (parent[w] == n) {
        parent[w] = u;
        stack.push_back(w);
      }
  }
  std::vector<std::vector<std::string>> child_codes(n);
  std::vector<std::string> code(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    Vertex u = *it;
    auto& kids = child_codes[u];
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& c : kids) s += c;
    s += ')';
    kids.clear();
    if (u != root) child_codes[parent[u]].push_back(std::move(s));
    else code[u] = std::move(s);
  }
  return code[root];
}

CanonicalCode canonical_form(const Tree& t) {
  std::string best;
  for (Vertex c : tree_centers(t)) {
    std::string s = rooted_code(t, c);
    if (best.empty() || s < best) best = std::move(s);
  }
  return CanonicalCode{std::move(best)};
}

}  // namespace treextremal
