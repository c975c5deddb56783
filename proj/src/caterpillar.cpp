#include "treextremal/caterpillar.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "treextremal/errors.hpp"

namespace treextremal {

std::size_t Caterpillar::vertex_count() const {
  return k() + 2 + std::accumulate(y.begin(), y.end(), std::size_t{0});
}

Tree caterpillar_build(const Caterpillar& c) {
  const std::size_t k = c.k();
  if (k == 0) throw EmptySpine("caterpillar needs at least one spine vertex");
  std::vector<Edge> edges;
  for (Vertex i = 0; i <= k; ++i) edges.emplace_back(i, i + 1);
  Vertex next = k + 2;
  for (std::size_t j = 1; j <= k; ++j)
    for (std::size_t p = 0; p < c.y[j - 1]; ++p) edges.emplace_back(j, next++);
  return Tree(next, std::move(edges));
}

Caterpillar caterpillar_canonical(const Caterpillar& c) {
  Caterpillar r{std::vector<std::size_t>(c.y.rbegin(), c.y.rend())};
  return std::max(c, r);
}

std::optional<Caterpillar> caterpillar_recognize(const Tree& t) {
  if (t.size() <= 2 || !is_caterpillar(t)) return std::nullopt;
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < t.size(); ++v)
    if (!t.is_leaf(v)) inner.push_back(v);
  auto inner_degree = [&](Vertex v) {
    return std::count_if(t.neighbors(v).begin(), t.neighbors(v).end(),
                         [&](Vertex w) { return !t.is_leaf(w); });
  };
  // Walk the spine from one end.
  Vertex start = inner.front();
  for (Vertex v : inner)
    if (inner_degree(v) <= 1) {
      start = v;
      break;
    }
  Caterpillar c;
  Vertex prev = start, cur = start;
  while (true) {
    // Spine ends contribute their leaves minus the one used as v0 / v(k+1).
    std::size_t leaves = 0;
    for (Vertex w : t.neighbors(cur))
      if (t.is_leaf(w)) ++leaves;
    c.y.push_back(leaves);
    Vertex next = cur;
    for (Vertex w : t.neighbors(cur))
      if (!t.is_leaf(w) && w != prev) next = w;
    if (next == cur) break;
    prev = cur;
    cur = next;
  }
  if (c.y.size() == 1) {
    c.y[0] -= 2;
  } else {
    c.y.front() -= 1;
    c.y.back() -= 1;
  }
  return caterpillar_canonical(c);
}

std::string format_pendants(const std::vector<std::size_t>& y) {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < y.size(); ++i) out << (i ? "," : "") << y[i];
  out << ')';
  return out.str();
}

std::vector<std::size_t> parse_pendants(const std::string& text) {
  std::string cleaned;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != '[' && ch != ']' && ch != ' ') cleaned += ch;
  std::vector<std::size_t> y;
  if (cleaned.empty()) return y;
  std::istringstream in(cleaned);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("malformed pendant list '" + text + "'");
    y.push_back(std::stoul(item));
  }
  if (cleaned.back() == ',') throw ParseError("malformed pendant list '" + text + "'");
  return y;
}

std::optional<std::size_t> valley_index(const std::vector<std::size_t>& z, std::size_t floor) {
  const std::size_t k = z.size();
  for (std::size_t t = 1; t + 1 <= k; ++t) {
    const std::size_t i = t - 1;
    if (z[i] != floor) continue;
    bool ok = i == 0 || z[i - 1] > z[i];
    for (std::size_t j = 0; ok && j + 2 <= i; ++j) ok = z[j] >= z[j + 1];
    for (std::size_t j = i; ok && j + 1 < k; ++j) ok = z[j] <= z[j + 1];
    if (ok) return t;
  }
  return std::nullopt;
}

std::optional<std::size_t> mountain_index(const std::vector<std::size_t>& z) {
  const std::size_t k = z.size();
  for (std::size_t t = 1; t + 1 <= k; ++t) {
    const std::size_t i = t - 1;
    bool ok = i == 0 || z[i - 1] < z[i];
    for (std::size_t j = 0; ok && j + 2 <= i; ++j) ok = z[j] <= z[j + 1];
    for (std::size_t j = i; ok && j + 1 < k; ++j) ok = z[j] >= z[j + 1];
    if (ok) return t;
  }
  return std::nullopt;
}

}  // namespace treextremal
