#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "treextremal/canonical.hpp"
#include "treextremal/enumeration.hpp"
#include "treextremal/errors.hpp"
#include "treextremal/prufer.hpp"

using namespace treextremal;

namespace {

DegreeSequence ds(const char* s) { return parse_degree_sequence(s); }

std::set<std::string> codes(const std::vector<Tree>& trees) {
  std::set<std::string> out;
  for (const auto& t : trees) out.insert(canonical_form(t).code);
  return out;
}

}  // namespace

TEST_CASE("enumerate_trees examples") {
  auto p4 = enumerate_trees(ds("2,2,1,1"));
  REQUIRE(p4.size() == 1);
  CHECK(canonical_form(p4[0]) == canonical_form(path_tree(4)));

  auto fork = enumerate_trees(ds("3,2,1,1,1"));
  REQUIRE(fork.size() == 1);
  CHECK(canonical_form(fork[0]) == canonical_form(caterpillar_build({{1, 0}})));

  auto six = enumerate_trees(ds("3,2,2,1,1,1"));
  CHECK(codes(six) == std::set<std::string>{canonical_form(caterpillar_build({{1, 0, 0}})).code,
                                            canonical_form(caterpillar_build({{0, 1, 0}})).code});
}

TEST_CASE("enumerate_trees handles tiny and star sequences") {
  CHECK(enumerate_trees(ds("0")).size() == 1);
  CHECK(enumerate_trees(ds("0"))[0].size() == 1);
  CHECK(enumerate_trees(ds("1,1")).size() == 1);
  auto star = enumerate_trees(ds("5,1*5"));
  REQUIRE(star.size() == 1);
  CHECK(canonical_form(star[0]) == canonical_form(star_tree(6)));
}

TEST_CASE("unlabeled tree counts for n <= 10") {
  const std::vector<std::size_t> known{1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
  for (std::size_t n = 1; n <= 10; ++n) {
    std::set<std::string> all;
    std::size_t yielded = 0;
    for (const auto& s : enumerate_degree_sequences(n)) {
      for (const auto& t : enumerate_trees(s)) {
        REQUIRE(t.degree_multiset() == s.degrees());
        ++yielded;
        all.insert(canonical_form(t).code);
      }
    }
    CHECK(yielded == known[n - 1]);
    CHECK(all.size() == yielded);
  }
}

TEST_CASE("enumerate_caterpillars examples") {
  auto six = enumerate_caterpillars(ds("3,2,2,1,1,1"));
  CHECK(six == std::vector<Caterpillar>{{{0, 1, 0}}, {{1, 0, 0}}});
  CHECK(enumerate_caterpillars(ds("5,3,1*6")).size() == 1);
  CHECK(enumerate_caterpillars(ds("2,2,1,1")).size() == 1);
  // k = 5 with distinct pendant counts: 5!/2.
  CHECK(enumerate_caterpillars(ds("6,5,4,3,2,1*12")).size() == 60);
  CHECK_THROWS_AS(enumerate_caterpillars(ds("1,1")), NoInternalVertices);
}

TEST_CASE("caterpillars are exactly the caterpillar subset of all trees, n <= 10") {
  for (std::size_t n = 3; n <= 10; ++n)
    for (const auto& s : enumerate_degree_sequences(n)) {
      std::set<std::string> from_trees;
      for (const auto& t : enumerate_trees(s))
        if (is_caterpillar(t)) from_trees.insert(canonical_form(t).code);
      std::set<std::string> from_cats;
      const auto cats = enumerate_caterpillars(s);
      for (const auto& c : cats) {
        const Tree t = caterpillar_build(c);
        REQUIRE(is_caterpillar(t));
        REQUIRE(t.degree_multiset() == s.degrees());
        from_cats.insert(canonical_form(t).code);
      }
      CHECK(from_cats.size() == cats.size());
      CHECK(from_cats == from_trees);
      CHECK(count_caterpillars(s) == cats.size());
    }
}

TEST_CASE("count_labeled_trees") {
  CHECK(count_labeled_trees(ds("2,2,1,1")) == 2);
  CHECK(count_labeled_trees(ds("3,1,1,1")) == 1);
  CHECK(count_labeled_trees(ds("2,2,2,1,1")) == 6);
}

TEST_CASE("count_labeled_trees equals the number of distinct Prufer words, n <= 8") {
  for (std::size_t n = 2; n <= 8; ++n)
    for (const auto& s : enumerate_degree_sequences(n)) {
      std::vector<Vertex> word;
      for (Vertex v = 0; v < n; ++v) word.insert(word.end(), s.degrees()[v] - 1, v);
      std::set<std::vector<Vertex>> words;
      do words.insert(word);
      while (std::next_permutation(word.begin(), word.end()));
      CHECK(count_labeled_trees(s) == words.size());
      TreeEnumerator stream(s);
      while (stream.next()) {
      }
      CHECK(stream.labeled_visited() == words.size());
    }
}

TEST_CASE("enumerate_degree_sequences") {
  auto as_vectors = [](std::size_t n) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : enumerate_degree_sequences(n)) out.push_back(s.degrees());
    return out;
  };
  using V = std::vector<std::vector<std::size_t>>;
  CHECK(as_vectors(3) == V{{2, 1, 1}});
  CHECK(as_vectors(4) == V{{3, 1, 1, 1}, {2, 2, 1, 1}});
  CHECK(as_vectors(5) == V{{4, 1, 1, 1, 1}, {3, 2, 1, 1, 1}, {2, 2, 2, 1, 1}});
  CHECK(as_vectors(1) == V{{0}});
  CHECK(as_vectors(2) == V{{1, 1}});
  // Partitions of n-2 (the excess over 1) : p(7) = 15 for n = 9.
  CHECK(enumerate_degree_sequences(9).size() == 15);
}

TEST_CASE("budget refusal happens before generation") {
  EnumerationBudget tight;
  tight.max_labeled = 5;
  CHECK_THROWS_AS(TreeEnumerator(ds("2,2,2,2,1,1"), tight), BudgetExceeded);  // 4! = 24 words
  try {
    TreeEnumerator(ds("2,2,2,2,1,1"), tight);
  } catch (const BudgetExceeded& e) {
    CHECK(e.predicted() == "24");
  }
  EnumerationBudget small_n;
  small_n.max_n = 5;
  CHECK_THROWS_AS(enumerate_trees(ds("2,2,2,2,1,1"), small_n), BudgetExceeded);
  CHECK_NOTHROW(enumerate_trees(ds("2,2,2,1,1"), small_n));
}
