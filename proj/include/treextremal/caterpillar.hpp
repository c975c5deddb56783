#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "treextremal/tree.hpp"

namespace treextremal {

/// C(y1, ..., yk): spine v0 v1 ... vk v(k+1) with y_j pendant edges at v_j.
struct Caterpillar {
  std::vector<std::size_t> y;

  std::size_t k() const noexcept { return y.size(); }
  std::size_t vertex_count() const;
  auto operator<=>(const Caterpillar&) const = default;
};

/// Labels: spine v0..v(k+1) -> 0..k+1, then pendants in spine order.
/// Throws EmptySpine when k = 0.
Tree caterpillar_build(const Caterpillar& c);

/// The lexicographically greater of y and reverse(y).
Caterpillar caterpillar_canonical(const Caterpillar& c);

/// Recovers the pendant vector of a caterpillar with at least one internal
/// vertex, oriented canonically. Empty for non-caterpillars and for n <= 2.
std::optional<Caterpillar> caterpillar_recognize(const Tree& t);

/// "(1,0,0)".
std::string format_pendants(const std::vector<std::size_t>& y);
/// Parses a comma list "1,0,0" (brackets/parentheses optional).
std::vector<std::size_t> parse_pendants(const std::string& text);

/// Valley index t (1-based): z1 >= ... >= z(t-1) > z_t = floor and
/// z_t <= ... <= zk, with 1 <= t <= k-1. Returns nullopt when no such t.
std::optional<std::size_t> valley_index(const std::vector<std::size_t>& z, std::size_t floor);

/// Mountain index t (1-based): z1 <= ... <= z(t-1) < z_t and
/// z_t >= ... >= zk, with 1 <= t <= k-1.
std::optional<std::size_t> mountain_index(const std::vector<std::size_t>& z);

}  // namespace treextremal
