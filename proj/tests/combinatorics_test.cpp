#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "schurkit/combinatorics.hpp"
#include "schurkit/error.hpp"

namespace schurkit {
namespace {

Multipartition MP(std::vector<Partition> components) { return Multipartition(std::move(components)); }

TEST(Partition, StripsTrailingZerosAndRejectsBadInput) {
  EXPECT_EQ(Partition({3, 1, 0, 0}), Partition({3, 1}));
  EXPECT_TRUE(Partition({0}).empty());
  EXPECT_THROW(Partition({1, 2}), Error);
  EXPECT_THROW(Partition({2, -1}), Error);
  EXPECT_THROW(Partition({2, 0, 1}), Error);
}

TEST(Partition, BasicStatistics) {
  const Partition lambda{4, 2, 2, 1};
  EXPECT_EQ(lambda.size(), 9);
  EXPECT_EQ(lambda.length(), 4);
  EXPECT_EQ(lambda.part(5), 0);
  EXPECT_EQ(lambda.column_length(2), 3);
  EXPECT_EQ(lambda.column_length(5), 0);
  EXPECT_EQ(Partition{}.first(), 0);
  EXPECT_EQ(Partition{}.column_length(1), 0);
}

TEST(Conjugate, Examples) {
  EXPECT_EQ(conjugate(Partition{}), Partition{});
  EXPECT_EQ(conjugate(Partition{3, 1}), Partition({2, 1, 1}));
  EXPECT_EQ(conjugate(Partition{2, 2}), Partition({2, 2}));
}

TEST(Conjugate, InvolutionAndColumnCountsUpToTen) {
  for (const auto& lambda : partitions_up_to(10)) {
    EXPECT_EQ(conjugate(conjugate(lambda)), lambda);
    EXPECT_EQ(conjugate(lambda).parts(), oracle::conjugate_by_columns(lambda.parts()));
  }
}

TEST(HookLength, Examples) {
  EXPECT_EQ(hook_length(Partition{2, 1}, 1, 1), 3);
  EXPECT_EQ(hook_length(Partition{3, 1}, 1, 3), 1);
  EXPECT_EQ(hook_length(Partition{3}, 1, 1), 3);
}

TEST(HookLength, OutsideDiagram) {
  try {
    (void)hook_length(Partition{2, 1}, 2, 2);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NodeOutsideDiagram);
  }
  EXPECT_THROW((void)hook_length(Partition{}, 1, 1), Error);
  EXPECT_THROW((void)generalized_hook_length(Partition{1}, Partition{3}, 1, 2), Error);
}

TEST(HookLength, MatchesCellCountUpToTen) {
  for (const auto& lambda : partitions_up_to(10))
    for (const Node& node : nodes(lambda)) {
      const int h = hook_length(lambda, node.row, node.col);
      EXPECT_GE(h, 1);
      EXPECT_EQ(h, oracle::hook_by_counting(lambda.parts(), node.row, node.col));
      EXPECT_EQ(generalized_hook_length(lambda, lambda, node.row, node.col), h);
    }
}

TEST(GeneralizedHookLength, Examples) {
  EXPECT_EQ(generalized_hook_length(Partition{1}, Partition{}, 1, 1), 0);
  EXPECT_EQ(generalized_hook_length(Partition{2, 1}, Partition{2, 1}, 1, 1), 3);
  EXPECT_EQ(generalized_hook_length(Partition{2, 1}, Partition{3, 2, 1}, 1, 1), 4);
}

TEST(RemovableNodes, Examples) {
  EXPECT_TRUE(removable_nodes(Partition{}).empty());
  EXPECT_EQ(removable_nodes(Partition{3, 1}), (std::vector<Node>{{1, 3, 0}, {2, 1, 0}}));
  EXPECT_EQ(removable_nodes(Partition{2, 2}), (std::vector<Node>{{2, 2, 0}}));
}

TEST(RemovableNodes, RemovalLeavesAPartitionAndHookIsOne) {
  for (const auto& lambda : partitions_up_to(8))
    for (const Node& node : removable_nodes(lambda)) {
      EXPECT_EQ(hook_length(lambda, node.row, node.col), 1);
      std::vector<int> parts = lambda.parts();
      --parts[static_cast<std::size_t>(node.row - 1)];
      EXPECT_NO_THROW(Partition{parts});
      // a node is removable iff j = lambda_i and i = lambda'_j
      EXPECT_EQ(node.row, lambda.column_length(node.col));
    }
}

TEST(BetaSet, Examples) {
  EXPECT_EQ(beta_set(Partition{}, 3).entries(), (std::vector<int>{2, 1, 0}));
  EXPECT_EQ(beta_set(Partition{3, 1}, 2).entries(), (std::vector<int>{4, 1}));
  EXPECT_EQ(beta_set(Partition{2, 1}, 2).entries(), (std::vector<int>{3, 1}));
  try {
    (void)beta_set(Partition{2, 1}, 1);
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::LTooSmall);
  }
}

TEST(BetaSet, RejectsNonStrictEntries) {
  EXPECT_THROW(BetaSet({1, 1}), Error);
  EXPECT_THROW(BetaSet({0, 1}), Error);
  EXPECT_THROW(BetaSet({2, -1}), Error);
}

TEST(BetaSet, DifferentLengthsAreDifferentValues) {
  EXPECT_NE(beta_set(Partition{1}, 1), beta_set(Partition{1}, 2));
}

TEST(ShiftBeta, Examples) {
  EXPECT_EQ(shift_beta(BetaSet({4, 1})).entries(), (std::vector<int>{5, 2, 0}));
  EXPECT_EQ(shift_beta(BetaSet({0})).entries(), (std::vector<int>{1, 0}));
  EXPECT_EQ(shift_beta(shift_beta(BetaSet({2, 1, 0}))).entries(), (std::vector<int>{4, 3, 2, 1, 0}));
}

TEST(BetaSet, RoundTripAndShiftInvarianceUpToTen) {
  for (const auto& lambda : partitions_up_to(10))
    for (int L = lambda.length(); L <= lambda.length() + 3; ++L) {
      const BetaSet beta = beta_set(lambda, L);
      EXPECT_EQ(beta.length(), L);
      EXPECT_EQ(partition_from_beta(beta), lambda);
      EXPECT_EQ(shift_beta(beta), beta_set(lambda, L + 1));
      EXPECT_EQ(partition_from_beta(shift_beta(beta)), lambda);
    }
}

TEST(LSymbol, Examples) {
  EXPECT_EQ(l_symbol(MP({Partition{}, Partition{}}), 1).rows, (std::vector<BetaSet>{BetaSet({0}), BetaSet({0})}));
  EXPECT_EQ(l_symbol(MP({Partition{1}, Partition{1}}), 1).rows, (std::vector<BetaSet>{BetaSet({1}), BetaSet({1})}));
  EXPECT_EQ(l_symbol(MP({Partition{2}, Partition{1, 1}}), 2).rows,
            (std::vector<BetaSet>{BetaSet({3, 0}), BetaSet({2, 1})}));
  EXPECT_THROW((void)l_symbol(MP({Partition{2}, Partition{1, 1}}), 1), Error);
}

TEST(Enumerate, Examples) {
  EXPECT_EQ(enumerate_multipartitions(2, 1),
            (std::vector<Multipartition>{MP({Partition{1}, Partition{}}), MP({Partition{}, Partition{1}})}));
  EXPECT_EQ(enumerate_multipartitions(1, 4).size(), 5U);
  EXPECT_EQ(enumerate_multipartitions(2, 2).size(), 5U);
  EXPECT_EQ(enumerate_multipartitions(3, 0), (std::vector<Multipartition>{MP({Partition{}, Partition{}, Partition{}})}));
}

TEST(Enumerate, OrderIsCompositionThenParts) {
  const auto all = enumerate_multipartitions(2, 2);
  const std::vector<Multipartition> expected{
      MP({Partition{2}, Partition{}}),    MP({Partition{1, 1}, Partition{}}), MP({Partition{1}, Partition{1}}),
      MP({Partition{}, Partition{2}}),    MP({Partition{}, Partition{1, 1}}),
  };
  EXPECT_EQ(all, expected);
}

TEST(Enumerate, CountsMatchGeneratingFunctionAndBruteForce) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 8; ++n) {
      const auto all = enumerate_multipartitions(m, n);
      EXPECT_EQ(static_cast<std::int64_t>(all.size()), oracle::multipartition_count(m, n)) << m << "," << n;

      // brute force: every tuple of filtered partitions with the right total size
      std::set<std::vector<std::vector<int>>> brute;
      std::vector<std::vector<std::vector<int>>> by_size;
      for (int k = 0; k <= n; ++k) by_size.push_back(oracle::partitions_by_filtering(k));
      std::function<void(int, int, std::vector<std::vector<int>>&)> rec = [&](int slot, int left, auto& acc) {
        if (slot == m) {
          if (left == 0) brute.insert(acc);
          return;
        }
        for (int k = 0; k <= left; ++k)
          for (const auto& parts : by_size[static_cast<std::size_t>(k)]) {
            acc.push_back(parts);
            rec(slot + 1, left - k, acc);
            acc.pop_back();
          }
      };
      std::vector<std::vector<int>> acc;
      rec(0, n, acc);

      std::set<std::vector<std::vector<int>>> produced;
      for (const auto& lambda : all) {
        std::vector<std::vector<int>> key;
        for (const auto& c : lambda.components()) key.push_back(c.parts());
        EXPECT_TRUE(produced.insert(key).second) << "duplicate";
        EXPECT_EQ(lambda.size(), n);
        EXPECT_EQ(lambda.level(), m);
      }
      EXPECT_EQ(produced, brute);
    }
}

TEST(StandardTableaux, Examples) {
  EXPECT_EQ(num_standard_tableaux(MP({Partition{1}, Partition{1}})), 2);
  EXPECT_EQ(num_standard_tableaux(MP({Partition{2, 1}})), 2);
  EXPECT_EQ(num_standard_tableaux(MP({Partition{}, Partition{}, Partition{}})), 1);
}

TEST(StandardTableaux, MatchesEnumerationOfFillings) {
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= 5; ++n)
      for (const auto& lambda : enumerate_multipartitions(m, n)) {
        std::vector<std::vector<int>> shape;
        for (const auto& c : lambda.components()) shape.push_back(c.parts());
        EXPECT_EQ(num_standard_tableaux(lambda), oracle::standard_fillings(shape));
      }
}

TEST(PermuteComponents, MovesComponentToImageSlot) {
  const Multipartition lambda = MP({Partition{2}, Partition{}, Partition{1}});
  const std::vector<int> sigma{2, 3, 1};
  EXPECT_EQ(permute_components(lambda, sigma), MP({Partition{1}, Partition{2}, Partition{}}));
  const std::vector<int> bad{1, 1, 2};
  EXPECT_THROW((void)permute_components(lambda, bad), Error);
}

}  // namespace
}  // namespace schurkit
