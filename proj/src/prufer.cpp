#include "treextremal/prufer.hpp"

#include <functional>
#include <queue>

#include "treextremal/errors.hpp"

namespace treextremal {

namespace {
using MinHeap = std::priority_queue<Vertex, std::vector<Vertex>, std::greater<>>;
}

Tree prufer_decode(const std::vector<Vertex>& word, std::size_t n) {
  if (n < 2) throw LengthMismatch("Prufer decoding needs n >= 2");
  if (word.size() != n - 2)
    throw LengthMismatch("Prufer word of length " + std::to_string(word.size()) +
                         " does not match n = " + std::to_string(n));
  std::vector<std::size_t> degree(n, 1);
  for (Vertex v : word) {
    if (v >= n) throw LabelOutOfRange("Prufer label " + std::to_string(v) + " >= n");
    ++degree[v];
  }
  MinHeap leaves;
  for (Vertex v = 0; v < n; ++v)
    if (degree[v] == 1) leaves.push(v);

  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (Vertex v : word) {
    Vertex leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  Vertex a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return Tree(n, std::move(edges));
}

std::vector<Vertex> prufer_encode(const Tree& t) {
  const std::size_t n = t.size();
  if (n < 2) throw LengthMismatch("Prufer encoding needs n >= 2");
  std::vector<std::size_t> degree(n);
  MinHeap leaves;
  for (Vertex v = 0; v < n; ++v) {
    degree[v] = t.degree(v);
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<bool> removed(n, false);
  std::vector<Vertex> word;
  word.reserve(n - 2);
  while (word.size() + 2 < n) {
    Vertex leaf = leaves.top();
    leaves.pop();
    removed[leaf] = true;
    for (Vertex w : t.neighbors(leaf)) {
      if (removed[w]) continue;
      word.push_back(w);
      if (--degree[w] == 1) leaves.push(w);
      break;
    }
  }
  return word;
}

}  // namespace treextremal
