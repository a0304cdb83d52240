#include <gtest/gtest.h>

#include <set>

#include "largen/enumeration.hpp"

using namespace largen;

namespace {

TEST(Enumeration, CountFormulaExamples) {
  EXPECT_EQ(count_trees_formula(1, 1, 3), 1);
  EXPECT_EQ(count_trees_formula(2, 0, 3), 6);
  EXPECT_EQ(count_trees_formula(3, 1, 3), 144);
}

TEST(Enumeration, StreamMatchesFormulaSmall) {
  TreeEnumOptions opts;
  for (int D : {2, 3}) {
    for (int n = 1; n <= 4; ++n) {
      for (int k = 0; k <= std::min(n, 3); ++k) {
        uint64_t c = enumerate_trees(n, k, D, opts, [](const PlaneTree&) {});
        EXPECT_EQ(Int(c), count_trees_formula(n, k, D)) << "n=" << n << " k=" << k << " D=" << D;
      }
    }
  }
}

TEST(Enumeration, NoDuplicates) {
  // serialize each tree; stream must be duplicate-free
  TreeEnumOptions opts;
  std::set<std::string> seen;
  uint64_t c = enumerate_trees(3, 1, 2, opts, [&](const PlaneTree& t) {
    std::string key = print_walk(t) + "|" + print_edge_annotation(t);
    EXPECT_TRUE(seen.insert(key).second) << key;
  });
  EXPECT_EQ(c, seen.size());
}

TEST(Enumeration, ParsePrintRoundTripOnStream) {
  TreeEnumOptions opts;
  for (int n = 1; n <= 4; ++n) {
    for (int k = n == 1 ? 1 : 0; k <= std::min(n, 2); ++k) {
      enumerate_trees(n, k, 3, opts, [&](const PlaneTree& t) {
        PlaneTree back = parse_walk(print_walk(t), t.D, print_edge_annotation(t));
        EXPECT_EQ(print_walk(back), print_walk(t));
        EXPECT_EQ(print_edge_annotation(back), print_edge_annotation(t));
      });
    }
  }
}

TEST(Enumeration, BudgetRefusalWithEstimate) {
  TreeEnumOptions opts;
  opts.budget = 100;
  try {
    enumerate_trees(4, 1, 3, opts, [](const PlaneTree&) {});
    FAIL() << "expected budget refusal";
  } catch (const BudgetError& e) {
    EXPECT_EQ(e.estimate(), count_trees_formula(4, 1, 3).str());
  }
}

TEST(Enumeration, LoopInsertionCountFormula) {
  EXPECT_EQ(count_loop_insertions_formula(1, 1, 0, 3), 1);
  EXPECT_EQ(count_loop_insertions_formula(2, 1, 1, 3), 36);  // D * (3)(4)
  EXPECT_EQ(count_loop_insertions_formula(1, 1, 1, 3), 6);   // D * (1)(2)
}

TEST(Enumeration, LoopInsertionStreamMatchesFormula) {
  for (int n = 1; n <= 4; ++n)
    for (int k = 1; k <= 2; ++k)
      for (int s = 0; s <= 2; ++s) {
        Int c = enumerate_loop_insertions(2 * n - 2 + k, s, 3,
                                          [](const std::vector<LoopInsertion>&) {});
        EXPECT_EQ(c, count_loop_insertions_formula(n, k, s, 3))
            << "n=" << n << " k=" << k << " s=" << s;
      }
}

TEST(Enumeration, EmptyInsertionStream) {
  int calls = 0;
  enumerate_loop_insertions(3, 0, 3, [&](const std::vector<LoopInsertion>& l) {
    EXPECT_TRUE(l.empty());
    ++calls;
  });
  EXPECT_EQ(calls, 1);
}

}  // namespace
