#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "doctest.h"
#include "fock/crystal.hpp"
#include "fock/decomposition.hpp"
#include "fock/symbol.hpp"

using namespace fock;

namespace {

Multipartition mp(const std::string& text) { return parse_multipartition(text); }

Partition pt(std::vector<int> parts) { return Partition(std::move(parts)); }

// The running level-0 example: split of (3.1|3.1|2.2.1.1) at charge (2,3,6).
SkewTableau running_tableau() {
  return SkewTableau{{2, 3, 6}, {0, 0, 1}, {{2, 5}, {1, 3, 6}, {2, 4, 5, 7, 8}}};
}

WeightInf running_weight() {
  WeightInf w = WeightInf::of_charge({0, 0, 1});
  for (int k : {2, 3, 5, 6, 8}) w += WeightInf::omega(k, EModulus::finite(2));
  return w;
}

}  // namespace

TEST_CASE("kostka with strict rows and weak columns") {
  CHECK_EQ(kostka(pt({2}), {2}), 0);       // a row cannot repeat a letter
  CHECK_EQ(kostka(pt({2, 2}), {2, 2}), 1);
  CHECK_EQ(kostka(pt({1, 1}), {1, 1}), 1);
  CHECK_EQ(kostka(pt({2, 1}), {1, 1, 1}), 2);
  CHECK_EQ(kostka(pt({1}), {1}), 1);
  CHECK_EQ(kostka(pt({1}), {0, 1}), 1);
  CHECK_EQ(kostka(pt({}), {}), 1);
  CHECK_EQ(kostka(pt({2}), {1}), 0);       // weight does not fill the shape
  CHECK_EQ(kostka(pt({1, 1, 1, 1}), {2, 2}), 1);
  CHECK_EQ(kostka(pt({3}), {1, 1, 1}), 1);
  CHECK_THROWS_AS(kostka(pt({1}), {-1, 2}), std::invalid_argument);
}

TEST_CASE("shape and letter weight attached to a charge pair") {
  auto [shape, mu] = lambda_mu_of({-1, 2, 3, 6}, {0, 2, 3, 5});
  CHECK_EQ(shape, pt({3, 3, 3, 2, 1, 1, 1}));
  CHECK_EQ(mu, std::vector<int>{1, 3, 4, 6});

  auto [shape2, mu2] = lambda_mu_of({0, 1}, {0, 1});
  CHECK_EQ(shape2, pt({1}));
  CHECK_EQ(mu2, std::vector<int>{0, 1});

  CHECK_THROWS_AS(lambda_mu_of({1, 0}, {1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(lambda_mu_of({0, 1}, {0}), std::invalid_argument);
  CHECK_THROWS_AS(lambda_mu_of({0, 1}, {-1, 1}), std::invalid_argument);
}

TEST_CASE("skew tableau structure") {
  SkewTableau t = running_tableau();
  CHECK_FALSE(t.empty());
  CHECK_FALSE(t.trivial());
  CHECK(skew_tableau_valid(t));
  CHECK_EQ(t.at(0, 1), 2);
  CHECK_EQ(t.at(0, 2), 5);
  CHECK_EQ(t.at(2, 2), 2);
  CHECK_EQ(t.at(2, 6), 8);
  CHECK_FALSE(t.at(0, 3).has_value());
  CHECK_FALSE(t.at(2, 1).has_value());
  CHECK_FALSE(t.at(3, 1).has_value());

  SkewTableau triv = trivial_skew_tableau({2, 3}, {0, 1});
  CHECK(triv.trivial());
  CHECK(skew_tableau_valid(triv));
  CHECK_EQ(triv.rows[0], std::vector<int>{1, 2});
  CHECK_EQ(triv.rows[1], std::vector<int>{2, 3});
  CHECK_THROWS_AS(trivial_skew_tableau({0}, {1}), std::invalid_argument);

  // Each structural rule is reported.
  CHECK_EQ(*skew_tableau_problem(SkewTableau{{1, 1}, {0, 0}, {{1}, {2}}}),
           "columns must weakly increase downward");
  CHECK_EQ(*skew_tableau_problem(SkewTableau{{1, 1}, {0, 0}, {{1, 2}, {1}}}),
           "row length does not match the shape");
  CHECK_EQ(*skew_tableau_problem(SkewTableau{{2}, {0}, {{3, 3}}}),
           "row entries must strictly increase");
  CHECK_EQ(*skew_tableau_problem(SkewTableau{{0}, {1}, {{}}}),
           "inner charge exceeds outer charge");
  CHECK(skew_tableau_valid(SkewTableau{{1, 1}, {0, 0}, {{1}, {1}}}));
}

TEST_CASE("tableau weight") {
  CHECK(tableau_weight(SkewTableau{{0, 1}, {0, 1}, {{}, {}}}).is_zero());
  CHECK_EQ(tableau_weight(SkewTableau{{1}, {0}, {{4}}}), WeightInf::eps(4));
  // The running example carries exactly the omega content of its peel.
  WeightInf sum;
  for (int k : {2, 3, 5, 6, 8}) sum += WeightInf::omega(k, EModulus::finite(2));
  CHECK_EQ(tableau_weight(running_tableau()), sum);
}

TEST_CASE("tableau periods") {
  EModulus e2 = EModulus::finite(2);
  SkewTableau t = running_tableau();

  auto p = find_tableau_period(t, e2);
  REQUIRE(p.has_value());
  CHECK_EQ(p->form_max, 8);
  CHECK_EQ(p->removed_per_row, std::vector<int>{0, 0, 2});

  SkewTableau t1 = remove_tableau_period(t, e2);
  CHECK_EQ(t1.outer, Multicharge{2, 3, 4});
  CHECK_EQ(t1.rows[2], std::vector<int>{2, 4, 5});

  // Value missing from the word.
  CHECK_FALSE(find_tableau_period(SkewTableau{{1, 1}, {0, 0}, {{1}, {1}}}, e2));
  // Occurrences out of reading order.
  CHECK_FALSE(find_tableau_period(SkewTableau{{1, 1}, {0, 0}, {{3}, {2}}}, e2));
  // Nothing to read.
  CHECK_FALSE(find_tableau_period(SkewTableau{{0}, {0}, {{}}}, e2));
  // Identity removal when nothing is found.
  SkewTableau blocked{{1, 1}, {0, 0}, {{3}, {2}}};
  CHECK_EQ(remove_tableau_period(blocked, e2), blocked);

  CHECK_THROWS_AS(find_tableau_period(t, EModulus::infinity()), std::invalid_argument);
}

TEST_CASE("tableau peeling empties the running example") {
  EModulus e2 = EModulus::finite(2);
  TableauPeelTrace trace = tableau_peel(running_tableau(), e2);
  REQUIRE_EQ(trace.periods.size(), 5);
  std::vector<int> forms;
  for (const TableauPeriod& p : trace.periods) forms.push_back(p.form_max);
  CHECK_EQ(forms, std::vector<int>{8, 6, 5, 3, 2});
  CHECK_EQ(trace.periods[0].removed_per_row, std::vector<int>{0, 0, 2});
  CHECK_EQ(trace.periods[1].removed_per_row, std::vector<int>{1, 1, 0});
  CHECK_EQ(trace.periods[2].removed_per_row, std::vector<int>{0, 0, 2});
  CHECK_EQ(trace.periods[3].removed_per_row, std::vector<int>{1, 1, 0});
  CHECK_EQ(trace.periods[4].removed_per_row, std::vector<int>{0, 1, 1});
  CHECK(trace.final_tableau.empty());
  CHECK_EQ(trace.final_tableau.outer, Multicharge{0, 0, 1});

  CHECK_THROWS_AS(tableau_peel(SkewTableau{{1, 1}, {0, 0}, {{1}, {2}}}, e2),
                  std::invalid_argument);
}

TEST_CASE("totally periodic tableaux") {
  EModulus e2 = EModulus::finite(2);
  CHECK(is_totally_periodic_tableau(running_tableau(), e2));
  CHECK(is_totally_periodic_tableau(SkewTableau{{0, 1}, {0, 1}, {{}, {}}}, e2));

  // A trivial filling of a reduced shape stops the peel before it starts.
  SkewTableau triv = trivial_skew_tableau({0, 1}, {-1, 0});
  CHECK(triv.trivial());
  CHECK_FALSE(is_totally_periodic_tableau(triv, e2));

  // An entry at or below the inner charge can never be peeled.
  CHECK_FALSE(
      is_totally_periodic_tableau(SkewTableau{{1, 1}, {0, 0}, {{1}, {0}}}, e2));

  CHECK_THROWS_AS(
      is_totally_periodic_tableau(SkewTableau{{1, 1}, {0, 0}, {{1}, {2}}}, e2),
      std::invalid_argument);
}

TEST_CASE("level split of a totally periodic symbol") {
  EModulus e2 = EModulus::finite(2);
  LevelParts parts = level_parts(mp("3.1|3.1|2.2.1.1"), {2, 3, 6}, e2);
  CHECK_EQ(parts.level_l, Multicharge{0, 0, 1});
  CHECK_EQ(parts.level0, running_tableau());
  CHECK(skew_tableau_valid(parts.level0));

  // Non-semistandard input still splits, but the column rule may fail.
  LevelParts loose = level_parts(mp("-|2.2|2.2.1.1.1.1"), {3, 4, 6},
                                 EModulus::finite(4));
  CHECK_EQ(loose.level_l, Multicharge{-2, -1, 0});
  CHECK_EQ(loose.level0.outer, Multicharge{3, 4, 6});
  CHECK_EQ(loose.level0.rows[0], std::vector<int>{-1, 0, 1, 2, 3});
  CHECK_EQ(loose.level0.rows[1], std::vector<int>{0, 1, 2, 5, 6});
  CHECK_EQ(loose.level0.rows[2], std::vector<int>{2, 3, 4, 5, 7, 8});
  CHECK_FALSE(skew_tableau_valid(loose.level0));

  LevelParts trivial = level_parts(Multipartition::empty(2), {0, 1}, e2);
  CHECK_EQ(trivial.level_l, Multicharge{0, 1});
  CHECK(trivial.level0.empty());

  CHECK_THROWS_AS(level_parts(mp("1"), {0}, e2), std::invalid_argument);
  CHECK_THROWS_AS(level_parts(mp("1"), {0}, EModulus::infinity()),
                  std::invalid_argument);
}

TEST_CASE("highest-weight symbols as letter tableaux") {
  Multipartition lambda = mp("-|1.1.1|1|1.1");
  Multicharge s{0, 2, 3, 5};
  HwTableau t = hw_symbol_to_tableau(lambda, s);
  CHECK_EQ(t.v, Multicharge{-1, 2, 3, 6});
  CHECK_EQ(t.shape, pt({3, 3, 3, 2, 1, 1, 1}));
  CHECK_EQ(t.mu, std::vector<int>{1, 3, 4, 6});
  CHECK_EQ(t.rows, std::vector<std::vector<int>>{{1, 3, 4},
                                                 {2, 3, 4},
                                                 {2, 3, 4},
                                                 {2, 4},
                                                 {3},
                                                 {4},
                                                 {4}});
  CHECK_EQ(tableau_to_hw_symbol(t.rows, s, t.v), lambda);

  HwTableau small = hw_symbol_to_tableau(Multipartition::empty(2), {0, 1});
  CHECK_EQ(small.v, Multicharge{0, 1});
  CHECK_EQ(small.rows, std::vector<std::vector<int>>{{2}});
  CHECK_EQ(tableau_to_hw_symbol(small.rows, {0, 1}, small.v),
           Multipartition::empty(2));

  CHECK_THROWS_AS(hw_symbol_to_tableau(mp("1"), {0}), std::invalid_argument);

  CHECK_THROWS_AS(tableau_to_hw_symbol({{1, 1}}, {0, 2}, {0, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(tableau_to_hw_symbol({{3}}, {0, 1}, {0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(tableau_to_hw_symbol({{1}, {1, 2}}, {1, 1}, {0, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(tableau_to_hw_symbol({{2}, {1}}, {1, 1}, {0, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(tableau_to_hw_symbol({{1}}, {0, 1}, {0, 1}),
                  std::invalid_argument);
}

TEST_CASE("weight decomposition into a reduced charge and omegas") {
  EModulus e2 = EModulus::finite(2);

  auto decs = decompose_weight(WeightInf::of_charge({0, 1}), 2, e2);
  REQUIRE_EQ(decs.size(), 3);
  CHECK_EQ(decs[0], DecomposedWeight{{-2, -1}, {{0, 1}, {1, 1}}});
  CHECK_EQ(decs[1], DecomposedWeight{{-1, 0}, {{1, 1}}});
  CHECK_EQ(decs[2], DecomposedWeight{{0, 1}, {}});

  WeightInf nu = running_weight();
  auto big = decompose_weight(nu, 3, e2);
  bool found = false;
  for (const DecomposedWeight& dec : big) {
    // Every solution rebuilds the weight within the stated constraints.
    CHECK(charge_in_reduced_window(dec.t, e2));
    WeightInf rebuilt = WeightInf::of_charge(dec.t);
    for (const auto& [k, a] : dec.omega) {
      CHECK_GT(a, 0);
      CHECK_GE(k, dec.t.front() + 2);
      rebuilt += a * WeightInf::omega(k, e2);
    }
    CHECK_EQ(rebuilt, nu);
    if (dec.t == Multicharge{0, 0, 1} &&
        dec.omega == std::map<int, int>{{2, 1}, {3, 1}, {5, 1}, {6, 1}, {8, 1}})
      found = true;
  }
  CHECK(found);
  CHECK(std::is_sorted(big.begin(), big.end(),
                       [](const DecomposedWeight& a, const DecomposedWeight& b) {
                         return a.t < b.t;
                       }));
  for (std::size_t k = 0; k + 1 < big.size(); ++k) CHECK_FALSE(big[k].t == big[k + 1].t);

  CHECK_THROWS_AS(decompose_weight(nu, 3, EModulus::infinity()), std::invalid_argument);
  CHECK_THROWS_AS(decompose_weight(nu, 0, e2), std::invalid_argument);
  CHECK_THROWS_AS(decompose_weight(nu, 2, e2), std::invalid_argument);
}

TEST_CASE("multiplicity counts on small charges") {
  EModulus e2 = EModulus::finite(2);
  CHECK_EQ(count_m({0, 1}, WeightInf::of_charge({0, 1}), e2), 1);
  CHECK_EQ(count_m({0, 0}, WeightInf::of_charge({0, 0}), e2), 1);
  CHECK_EQ(count_m({0, 1}, WeightInf::of_charge({-1, 0}), e2), 0);
  CHECK_EQ(count_M({0, 0}, WeightInf::of_charge({0, 0}), e2), 1);
  CHECK_EQ(count_M({0, 1}, WeightInf::of_charge({0, 1}), e2), 1);

  CHECK_THROWS_AS(count_m({1, 0}, WeightInf::of_charge({0, 1}), e2),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_m({0}, WeightInf::of_charge({0}), EModulus::infinity()),
                  std::invalid_argument);
  CHECK_THROWS_AS(count_M({1, 0}, WeightInf::of_charge({0, 1}), e2),
                  std::invalid_argument);
}

TEST_CASE("multiplicity counts match vertex enumeration per weight") {
  EModulus e2 = EModulus::finite(2);
  for (const Multicharge& s : {Multicharge{0, 0}, Multicharge{0, 1}}) {
    std::map<std::string, std::pair<long long, long long>> counted;
    std::map<std::string, WeightInf> weights;
    for (int n = 0; n <= 5; ++n)
      for (const Multipartition& lambda : multipartitions_of_rank(2, n)) {
        if (!is_highest_weight(lambda, s, e2)) continue;
        WeightInf w = weight_inf(lambda, s);
        weights.emplace(w.str(), w);
        auto& slot = counted[w.str()];
        if (is_semistandard(lambda, s)) ++slot.first;
        ++slot.second;
      }
    for (const auto& [key, w] : weights) {
      CAPTURE(format_charge(s));
      CAPTURE(key);
      CHECK_EQ(count_m(s, w, e2), counted[key].first);
      CHECK_EQ(count_M(s, w, e2), counted[key].second);
    }
  }
}

TEST_CASE("multiplicity of the running weight by exhaustive search") {
  // Box counts force rank 14, so one rank suffices for the whole search.
  EModulus e2 = EModulus::finite(2);
  Multicharge s{2, 3, 6};
  WeightInf nu = running_weight();
  auto boxes = solve_box_counts(s, nu);
  REQUIRE(boxes.has_value());
  long long rank = 0;
  for (const auto& [j, n] : *boxes) rank += n;
  REQUIRE_EQ(rank, 14);

  long long m = 0, big = 0;
  for (const Multipartition& lambda : multipartitions_of_rank(3, 14)) {
    if (!(weight_inf(lambda, s) == nu)) continue;
    if (!is_highest_weight(lambda, s, e2)) continue;
    ++big;
    if (is_semistandard(lambda, s)) ++m;
  }
  CHECK_GE(m, 1);  // the running example itself is semistandard
  CHECK_EQ(count_m(s, nu, e2), m);
  CHECK_EQ(count_M(s, nu, e2), big);
}

TEST_CASE("box counts forced by a weight") {
  CHECK_EQ(*solve_box_counts({0, 1}, WeightInf::of_charge({0, 1})),
           std::map<int, int>{});
  CHECK_EQ(*solve_box_counts({0}, WeightInf::fundamental(0) - WeightInf::alpha(0)),
           std::map<int, int>{{0, 1}});
  CHECK_EQ(*solve_box_counts({0}, WeightInf::fundamental(0) - WeightInf::alpha(5)),
           std::map<int, int>{{5, 1}});
  // Negative or inconsistent solutions are rejected.
  CHECK_FALSE(solve_box_counts({0}, WeightInf::fundamental(1)).has_value());
  CHECK_FALSE(
      solve_box_counts({0}, WeightInf::of_charge({0, 1})).has_value());

  // Round trip through an actual vertex.
  Multipartition lambda = mp("3.1|3.1|2.2.1.1");
  Multicharge s{2, 3, 6};
  auto n = solve_box_counts(s, weight_inf(lambda, s));
  REQUIRE(n.has_value());
  std::map<int, int> direct;
  for (int c = 0; c < lambda.level(); ++c)
    for (int r = 1; r <= lambda.component(c).height(); ++r)
      for (int col = 1; col <= lambda.component(c).part(r); ++col)
        ++direct[node_content({r, col, c}, s)];
  CHECK_EQ(*n, direct);
}
