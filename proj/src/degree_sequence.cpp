#include "treextremal/degree_sequence.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "treextremal/errors.hpp"

namespace treextremal {

DegreeSequence::DegreeSequence(std::vector<std::size_t> degrees) : degrees_(std::move(degrees)) {
  std::sort(degrees_.rbegin(), degrees_.rend());
  const std::size_t n = degrees_.size();
  if (n == 0) throw NotATreeSequence("empty degree sequence");
  if (n == 1) {
    if (degrees_[0] != 0) throw NotATreeSequence("a one-vertex tree has degree sequence (0)");
    return;
  }
  if (degrees_.back() < 1) throw NotATreeSequence("every degree must be at least 1 when n >= 2");
  const std::size_t sum = std::accumulate(degrees_.begin(), degrees_.end(), std::size_t{0});
  if (sum != 2 * (n - 1))
    throw NotATreeSequence("degree sum " + std::to_string(sum) + " != 2(n-1) = " +
                           std::to_string(2 * (n - 1)));
  k_ = static_cast<std::size_t>(
      std::count_if(degrees_.begin(), degrees_.end(), [](std::size_t d) { return d >= 2; }));
}

std::vector<std::size_t> DegreeSequence::internal_pendants() const {
  std::vector<std::size_t> y;
  for (std::size_t i = 0; i < k_; ++i) y.push_back(degrees_[i] - 2);
  return y;
}

std::string DegreeSequence::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < degrees_.size();) {
    std::size_t j = i;
    while (j < degrees_.size() && degrees_[j] == degrees_[i]) ++j;
    const std::size_t run = j - i;
    // Short runs are spelled out; long runs use the repetition suffix.
    if (run >= 4) {
      if (!out.empty()) out += ',';
      out += std::to_string(degrees_[i]) + '*' + std::to_string(run);
    } else {
      for (std::size_t r = 0; r < run; ++r) {
        if (!out.empty()) out += ',';
        out += std::to_string(degrees_[i]);
      }
    }
    i = j;
  }
  return out;
}

namespace {

std::size_t parse_count(std::string_view token, std::string_view whole) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
    return s;
  };
  token = trim(token);
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (token.empty() || ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError("malformed degree sequence '" + std::string(whole) + "'");
  return value;
}

}  // namespace

DegreeSequence parse_degree_sequence(std::string_view text) {
  std::vector<std::size_t> degrees;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    const std::size_t star = item.find('*');
    const std::size_t value = parse_count(item.substr(0, star), text);
    std::size_t repeat = 1;
    if (star != std::string_view::npos) {
      repeat = parse_count(item.substr(star + 1), text);
      if (repeat == 0) throw ParseError("repetition count must be positive in '" + std::string(text) + "'");
    }
    if (repeat > 1'000'000) throw ParseError("repetition count too large");
    degrees.insert(degrees.end(), repeat, value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return DegreeSequence(std::move(degrees));
}

}  // namespace treextremal
