#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "treextremal/errors.hpp"
#include "treextremal/extremal.hpp"
#include "treextremal/subtree_count.hpp"

using namespace treextremal;

namespace {

DegreeSequence ds(const char* s) { return parse_degree_sequence(s); }

std::vector<std::vector<std::size_t>> pendants(const ExtremalReport& r) {
  std::vector<std::vector<std::size_t>> out;
  for (const auto& o : r.optimizers) {
    REQUIRE(o.caterpillar.has_value());
    out.push_back(o.caterpillar->y);
  }
  return out;
}

using Ys = std::vector<std::vector<std::size_t>>;

}  // namespace

TEST_CASE("find_min_subtrees examples") {
  const auto r = find_min_subtrees(ds("3,2,2,1,1,1"), SearchMethod::kBrute);
  CHECK(r.optimum == 24);
  CHECK(pendants(r) == Ys{{1, 0, 0}});
  CHECK(r.method == SearchMethod::kBrute);
  CHECK(r.trees_examined == 2);
  CHECK(brute_force_count(caterpillar_build({{0, 1, 0}})) > 24);

  for (std::size_t n = 3; n <= 12; ++n) {
    std::vector<std::size_t> degs(n - 2, 2);
    degs.push_back(1);
    degs.push_back(1);
    const auto path = find_min_subtrees(DegreeSequence(degs));
    CHECK(path.optimum == n * (n + 1) / 2);
    REQUIRE(path.optimizers.size() == 1);
    CHECK(canonical_form(path.optimizers[0].tree) == canonical_form(path_tree(n)));
  }

  const auto big = find_min_subtrees(ds("8,3,3,3,2,1*11"), SearchMethod::kCaterpillar);
  CHECK(pendants(big) == Ys{{6, 0, 1, 1, 1}});
  CHECK(big.optimum == brute_force_count(caterpillar_build({{6, 0, 1, 1, 1}})));
  CHECK(big.optimum == 3142);
}

TEST_CASE("find_min_subtrees auto resolves and cross-checks") {
  const auto r = find_min_subtrees(ds("8,3,3,3,2,1*11"));
  CHECK(r.method == SearchMethod::kClosedForm);
  CHECK(r.cross_checked);
  CHECK(pendants(r) == Ys{{6, 0, 1, 1, 1}});

  const auto k6 = find_min_subtrees(ds("3*6,1*8"));
  CHECK(k6.method == SearchMethod::kCaterpillar);

  CHECK_THROWS_AS(find_min_subtrees(ds("3*6,1*8"), SearchMethod::kClosedForm), ClosedFormUnavailable);
  CHECK_THROWS_AS(find_max_subtrees(ds("3,2,1,1,1"), SearchMethod::kClosedForm), ClosedFormUnavailable);

  for (const char* s : {"0", "1,1", "4,1,1,1,1"}) {
    const auto tiny = find_min_subtrees(ds(s));
    CHECK(tiny.optimizers.size() == 1);
    CHECK(tiny.optimum == count_subtrees(tiny.optimizers[0].tree));
  }
}

TEST_CASE("find_max_subtrees examples") {
  const auto r = find_max_subtrees(ds("3,2,2,1,1,1"));
  CHECK(r.method == SearchMethod::kBrute);
  CHECK(pendants(r) == Ys{{0, 1, 0}});
  CHECK(r.optimizers[0].shape_index == 2u);

  // A single realization: max = min = the k = 2 closed form.
  const auto one = ds("4,3,1*5");
  CHECK(find_max_subtrees(one).optimum == closed_form_phi(one).phi);
  CHECK(find_min_subtrees(one, SearchMethod::kBrute).optimum == closed_form_phi(one).phi);

  EnumerationBudget tight;
  tight.max_labeled = 10;
  CHECK(find_max_subtrees(ds("3,3,3,3,2,1*6"), SearchMethod::kAuto, tight).method ==
        SearchMethod::kCaterpillar);
  CHECK_THROWS_AS(find_max_subtrees(ds("3,3,3,3,2,1*6"), SearchMethod::kBrute, tight), BudgetExceeded);
}

TEST_CASE("caterpillar maximizers have mountain shape for every sequence with n <= 9") {
  for (std::size_t n = 5; n <= 9; ++n)
    for (const auto& s : enumerate_degree_sequences(n)) {
      if (s.k() < 3) continue;
      const auto r = find_max_subtrees(s, SearchMethod::kCaterpillar);
      for (const auto& o : r.optimizers) {
        REQUIRE(o.caterpillar.has_value());
        CHECK(o.shape_index.has_value());
      }
    }
}

TEST_CASE("optimizer reports are sorted, non-isomorphic, and exact") {
  for (std::size_t n = 1; n <= 9; ++n)
    for (const auto& s : enumerate_degree_sequences(n))
      for (auto objective : {Objective::kMinSubtrees, Objective::kMaxSubtrees}) {
        const auto r = find_extremal(s, objective, SearchMethod::kBrute);
        REQUIRE_FALSE(r.optimizers.empty());
        for (std::size_t i = 0; i < r.optimizers.size(); ++i) {
          CHECK(r.optimizers[i].tree.degree_multiset() == s.degrees());
          CHECK(count_subtrees(r.optimizers[i].tree) == r.optimum);
          if (i) CHECK(r.optimizers[i - 1].code < r.optimizers[i].code);
        }
      }
}

TEST_CASE("closed_form_phi examples") {
  auto f2 = closed_form_phi(ds("3,2,1,1,1"));
  CHECK(f2.phi == 17);
  CHECK(f2.minimizer.y == std::vector<std::size_t>{1, 0});
  auto f3 = closed_form_phi(ds("3,2,2,1,1,1"));
  CHECK(f3.phi == 24);
  CHECK(f3.minimizer.y == std::vector<std::size_t>{1, 0, 0});
  auto f4 = closed_form_phi(ds("3,3,2,2,1,1,1,1"));
  CHECK(f4.phi == 47);
  CHECK(f4.minimizer.y == std::vector<std::size_t>{1, 0, 0, 1});
  CHECK(brute_force_count(caterpillar_build(f4.minimizer)) == 47);
  CHECK_THROWS_AS(closed_form_phi(ds("4,1,1,1,1")), WrongK);
  CHECK_THROWS_AS(closed_form_phi(ds("3,3,3,3,2,1*6")), WrongK);
}

TEST_CASE("closed forms equal the minimum over all trees, k in {2,3,4}, n <= 11") {
  std::size_t checked = 0;
  for (std::size_t n = 4; n <= 11; ++n)
    for (const auto& s : enumerate_degree_sequences(n)) {
      if (s.k() < 2 || s.k() > 4) continue;
      ++checked;
      const auto form = closed_form_phi(s);
      const auto r = find_min_subtrees(s, SearchMethod::kBrute);
      CHECK(r.optimum == form.phi);
      REQUIRE(r.optimizers.size() == 1);
      CHECK(r.optimizers[0].code == canonical_form(caterpillar_build(form.minimizer)));
    }
  CHECK(checked > 0);
}

TEST_CASE("predict_min_k5 examples") {
  auto one = predict_min_k5(ds("8,3,3,3,2,1*11"));
  CHECK(one.which.tag == TrichotomyTag::kI);
  CHECK(one.which.lhs == 256);
  CHECK(one.which.rhs == 20);
  CHECK(one.minimizers == std::vector<Caterpillar>{{{6, 0, 1, 1, 1}}});

  auto three = predict_min_k5(ds("3,3,3,3,2,1*6"));
  CHECK(three.which.tag == TrichotomyTag::kIII);
  CHECK(three.which.lhs == 8);
  CHECK(three.which.rhs == 20);
  CHECK(three.minimizers == std::vector<Caterpillar>{{{1, 1, 0, 1, 1}}});

  auto two = predict_min_k5(ds("4,3,3,2,2,1*6"));
  CHECK(two.which.tag == TrichotomyTag::kII);
  CHECK(two.which.d4_equals_d5);
  CHECK(two.minimizers == std::vector<Caterpillar>{{{2, 0, 0, 1, 1}}});

  CHECK_THROWS_AS(predict_min_k5(ds("3,2,1,1,1")), WrongK);
}

TEST_CASE("k = 5 difference identity holds on random sequences") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<std::size_t> d(5);
    for (auto& x : d) x = std::uniform_int_distribution<std::size_t>(2, 9)(rng);
    std::sort(d.rbegin(), d.rend());
    const std::size_t internal_sum = d[0] + d[1] + d[2] + d[3] + d[4];
    std::vector<std::size_t> degs = d;
    // sum(d) + leaves = 2(5 + leaves - 1)
    degs.insert(degs.end(), internal_sum - 8, 1);
    const DegreeSequence s(degs);
    auto y = [&](std::size_t i) { return s.d(i) - 2; };
    const BigCount diff = BigCount(count_subtrees(caterpillar_build({{y(1), y(5), y(4), y(3), y(2)}}))) -
                          count_subtrees(caterpillar_build({{y(1), y(4), y(5), y(3), y(2)}}));
    REQUIRE(diff == k5_difference_identity(s));
  }
}

TEST_CASE("shift_branch_to_end on the spider S(2,2,2)") {
  const Tree spider(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
  // Longest path 2-1-0-3-4; y = 5 hangs off v_2 = 0 with child 6.
  const Tree shifted = shift_branch_to_end(spider, 5, 4);
  CHECK(is_caterpillar(shifted));
  CHECK(shifted.degree_multiset() == spider.degree_multiset());
  CHECK(brute_force_count(shifted) < brute_force_count(spider));

  const auto instances = branch_shift_instances(spider);
  CHECK_FALSE(instances.empty());
  bool saw_applicable = false;
  for (const auto& inst : instances) {
    CHECK(inst.a == 2);
    if (!inst.precondition_holds()) continue;
    saw_applicable = true;
    const Tree t = shift_branch_to_end(spider, inst.y, inst.path.back());
    CHECK(count_subtrees(t) < count_subtrees(spider));
  }
  CHECK(saw_applicable);

  CHECK_THROWS_AS(shift_branch_to_end(path_tree(5), 1, 4), NotApplicable);
  CHECK_THROWS_AS(shift_branch_to_end(spider, 6, 4), NotApplicable);  // y is a leaf
  CHECK_THROWS_AS(shift_branch_to_end(spider, 5, 3), NotApplicable);  // end is not a leaf
  CHECK_THROWS_AS(shift_branch_to_end(spider, 9, 4), VertexOutOfRange);
  CHECK(branch_shift_instances(path_tree(6)).empty());
}

TEST_CASE("branch shift right-hand side equals the far component count") {
  // rhs is built from the a_i products; it must equal f_{W2}(v_(l+1)), the
  // subtrees containing v_(l+1) that avoid v_l.
  const Tree t(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {2, 6}, {6, 7}, {3, 8}, {6, 9}});
  REQUIRE_FALSE(branch_shift_instances(t).empty());
  for (const auto& inst : branch_shift_instances(t)) {
    const Vertex vl = inst.path[inst.l], next = inst.path[inst.l + 1];
    const BigCount far = count_subtrees_containing(t, next) - count_subtrees_containing_set(t, {next, vl});
    CHECK(inst.rhs == far);
  }
}

TEST_CASE("reverse_segment") {
  CHECK(reverse_segment({{1, 2, 1}}, 2, 1) == Caterpillar{{1, 2, 1}});
  CHECK(reverse_segment({{2, 0, 1}}, 2, 1) == Caterpillar{{1, 0, 2}});
  CHECK(caterpillar_canonical(reverse_segment({{2, 0, 1}}, 2, 1)) == Caterpillar{{2, 0, 1}});
  CHECK(reverse_segment({{5, 1, 2, 3, 4}}, 3, 1) == Caterpillar{{5, 3, 2, 1, 4}});
  CHECK_THROWS_AS(reverse_segment({{1, 2, 3}}, 1, 0), IndexOutOfRange);
  CHECK_THROWS_AS(reverse_segment({{1, 2, 3}}, 2, 2), IndexOutOfRange);
  CHECK_THROWS_AS(reverse_segment({{1, 2, 3}}, 3, 0), IndexOutOfRange);
  CHECK(reverse_even_segment({{1, 2, 3, 4}}, 2, 1) == Caterpillar{{4, 3, 2, 1}});
  CHECK_THROWS_AS(reverse_even_segment({{1, 2, 3}}, 2, 1), IndexOutOfRange);
}

TEST_CASE("segment reversal strictly lowers phi whenever its hypotheses hold") {
  std::size_t applied = 0;
  for (std::size_t k = 3; k <= 6; ++k) {
    std::vector<std::size_t> y(k, 0);
    while (true) {
      const Caterpillar c{y};
      const BigCount before = count_subtrees(caterpillar_build(c));
      for (std::size_t p = 1; p < k; ++p) {
        for (std::size_t q = 0; p >= 2 && q <= std::min(k - p, p - 1); ++q)
          if (reverse_segment_improves(c, p, q)) {
            ++applied;
            const Caterpillar r = reverse_segment(c, p, q);
            REQUIRE(count_subtrees(caterpillar_build(r)) < before);
          }
        for (std::size_t q = 0; q <= std::min(k - p - 1, p - 1); ++q)
          if (reverse_even_segment_improves(c, p, q)) {
            ++applied;
            const Caterpillar r = reverse_even_segment(c, p, q);
            REQUIRE(count_subtrees(caterpillar_build(r)) < before);
          }
      }
      std::size_t i = 0;
      while (i < k && ++y[i] == 4) y[i++] = 0;
      if (i == k) break;
    }
  }
  CHECK(applied > 1000);
}
