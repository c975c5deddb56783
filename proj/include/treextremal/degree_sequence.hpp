#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace treextremal {

/// Nonincreasing degree multiset of a tree: d1 >= ... >= dk >= 2 > d(k+1) = ... = dn = 1.
///
/// The single-vertex tree has the sequence (0).
class DegreeSequence {
 public:
  /// Sorts `degrees` nonincreasingly and validates it as a tree sequence.
  /// Throws NotATreeSequence.
  explicit DegreeSequence(std::vector<std::size_t> degrees);

  const std::vector<std::size_t>& degrees() const noexcept { return degrees_; }
  std::size_t n() const noexcept { return degrees_.size(); }
  /// Number of internal (degree >= 2) entries.
  std::size_t k() const noexcept { return k_; }
  /// 1-based access matching the d1..dn indexing.
  std::size_t d(std::size_t i) const { return degrees_.at(i - 1); }
  /// Pendant counts (d1-2, ..., dk-2) of the internal vertices.
  std::vector<std::size_t> internal_pendants() const;

  /// Compact form with run-length suffixes, e.g. "8,3,3,3,2,1*11".
  std::string to_string() const;

  auto operator<=>(const DegreeSequence&) const = default;

 private:
  std::vector<std::size_t> degrees_;
  std::size_t k_ = 0;
};

/// Parses "int(,int)*" where each item may carry a `*m` repetition suffix.
/// Throws ParseError on malformed text, NotATreeSequence on invalid sums.
DegreeSequence parse_degree_sequence(std::string_view text);

}  // namespace treextremal
