#include "treextremal/tree.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <queue>
#include <set>
#include <sstream>

#include "treextremal/errors.hpp"

namespace treextremal {

Tree::Tree(std::size_t n, std::vector<Edge> edges) {
  if (n == 0) throw InvalidTree("tree must have at least one vertex");
  if (edges.size() != n - 1)
    throw InvalidTree("tree on " + std::to_string(n) + " vertices needs " + std::to_string(n - 1) +
                      " edges, got " + std::to_string(edges.size()));
  adjacency_.assign(n, {});
  std::set<Edge> seen;
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidTree("edge endpoint out of range");
    if (u == v) throw InvalidTree("self-loop at vertex " + std::to_string(u));
    if (!seen.insert(std::minmax(u, v)).second)
      throw InvalidTree("duplicate edge " + std::to_string(u) + "-" + std::to_string(v));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
  // n-1 distinct edges plus connectivity implies acyclic.
  const auto dist = distances_from(*this, 0);
  if (std::count(dist.begin(), dist.end(), std::numeric_limits<std::size_t>::max()) != 0)
    throw InvalidTree("graph is not connected");
}

std::vector<Edge> Tree::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < size(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<std::size_t> Tree::degree_multiset() const {
  std::vector<std::size_t> d;
  d.reserve(size());
  for (const auto& nb : adjacency_) d.push_back(nb.size());
  std::sort(d.rbegin(), d.rend());
  return d;
}

Tree path_tree(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Tree(n, std::move(e));
}

Tree star_tree(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 1; i < n; ++i) e.emplace_back(0, i);
  return Tree(n, std::move(e));
}

std::vector<std::size_t> distances_from(const Tree& t, Vertex source) {
  constexpr auto kUnseen = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> dist(t.size(), kUnseen);
  std::queue<Vertex> q;
  dist.at(source) = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : t.neighbors(u))
      if (dist[w] == kUnseen) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

std::vector<Vertex> tree_path(const Tree& t, Vertex from, Vertex to) {
  if (from >= t.size() || to >= t.size()) throw VertexOutOfRange("path endpoint out of range");
  auto dist = distances_from(t, to);
  std::vector<Vertex> path{from};
  while (path.back() != to) {
    Vertex u = path.back();
    for (Vertex w : t.neighbors(u))
      if (dist[w] + 1 == dist[u]) {
        path.push_back(w);
        break;
      }
  }
  return path;
}

std::size_t diameter(const Tree& t) {
  auto d0 = distances_from(t, 0);
  Vertex far = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  auto d1 = distances_from(t, far);
  return *std::max_element(d1.begin(), d1.end());
}

bool is_caterpillar(const Tree& t) {
  // Every non-leaf keeps its non-leaf neighbours; the remainder is a path iff
  // all such induced degrees are at most 2 (it is connected as a subtree).
  for (Vertex v = 0; v < t.size(); ++v) {
    if (t.size() > 2 && t.is_leaf(v)) continue;
    std::size_t inner = 0;
    for (Vertex w : t.neighbors(v))
      if (!t.is_leaf(w)) ++inner;
    if (inner > 2) return false;
  }
  return true;
}

Tree read_edge_list(std::istream& in) {
  std::string line;
  auto next_content_line = [&](std::string& out) {
    while (std::getline(in, out)) {
      if (out.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_content_line(line)) throw ParseError("edge list: missing vertex count");
  std::istringstream header(line);
  long long n = 0;
  std::string extra;
  if (!(header >> n) || (header >> extra) || n < 1)
    throw ParseError("edge list: first line must be a positive vertex count");
  std::vector<Edge> edges;
  for (long long i = 0; i + 1 < n; ++i) {
    if (!next_content_line(line))
      throw ParseError("edge list: expected " + std::to_string(n - 1) + " edges, got " +
                       std::to_string(i));
    std::istringstream row(line);
    long long u = -1, v = -1;
    if (!(row >> u >> v) || (row >> extra) || u < 0 || v < 0)
      throw ParseError("edge list: malformed edge line '" + line + "'");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (next_content_line(line)) throw ParseError("edge list: trailing content after edges");
  return Tree(static_cast<std::size_t>(n), std::move(edges));
}

Tree parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  return read_edge_list(in);
}

std::string format_edge_list(const Tree& t) {
  std::ostringstream out;
  out << t.size() << '\n';
  for (auto [u, v] : t.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace treextremal
