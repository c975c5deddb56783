#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "treextremal/tree.hpp"

namespace treextremal {

/// Isomorphism-invariant key for unrooted trees; equal iff isomorphic.
///
/// The code is the lexicographically smallest parenthesis encoding of the
/// tree rooted at one of its (one or two) centers, with child encodings
/// sorted at every vertex.
struct CanonicalCode {
  std::string code;
  auto operator<=>(const CanonicalCode&) const = default;
};

/// Graph centers (one or two vertices), ascending.
std::vector<Vertex> tree_centers(const Tree& t);

/// Sorted-children parenthesis encoding of `t` rooted at `root`.
std::string rooted_code(const Tree& t, Vertex root);

CanonicalCode canonical_form(const Tree& t);

}  // namespace treextremal

template <>
struct std::hash<treextremal::CanonicalCode> {
  std::size_t operator()(const treextremal::CanonicalCode& c) const noexcept {
    return std::hash<std::string>{}(c.code);
  }
};
