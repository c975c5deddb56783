#pragma once

#include <cstddef>
#include <vector>

#include "treextremal/tree.hpp"

namespace treextremal {

/// Labeled tree with the given Prufer word. Requires n >= 2 and
/// word.size() == n-2; throws LengthMismatch / LabelOutOfRange.
Tree prufer_decode(const std::vector<Vertex>& word, std::size_t n);

/// Inverse of prufer_decode. Requires t.size() >= 2.
std::vector<Vertex> prufer_encode(const Tree& t);

}  // namespace treextremal
