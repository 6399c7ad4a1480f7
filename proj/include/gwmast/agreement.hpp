#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gwmast/core_trees.hpp"

namespace gwmast {

struct InducedResult {
  LabelledTree shape;
  Vertex lca = kNoVertex;  // vertex of the host
  // Every retained vertex keeps its host out-degree.
  bool degree_condition_met = false;
};

enum class ComparisonMode {
  Ordered,    // equal as ordered leaf-labelled trees
  Unordered,  // equal after canonical child ordering
};

// LCA subtree of S in T with non-root vertices of total degree 2 suppressed;
// child order is preserved. Throws UnknownLabel, DomainError for empty S.
InducedResult induce_rooted(const LabelledTree& t, std::span<const Label> subset);

// Rooted subtree induced by S in an unrooted binary tree, rooted at the first
// vertex common to all paths from S toward an outside leaf. The shape comes
// back in canonical unordered form. With no explicit outside leaf the smallest
// label not in S is used. Throws NeedOutsideLeaf when S = [n].
InducedResult induce_unrooted(const UnrootedBinaryTree& t, std::span<const Label> subset,
                              Label outside_leaf = 0);

inline constexpr std::size_t kDefaultSubsetBudget = 5'000'000;

// Number of a-subsets S of the common label set inducing the same subtree in
// both trees, with both meeting the out-degree condition. Throws
// SubsetSpaceTooLarge when C(n, a) exceeds the budget.
unsigned long long common_count(const LabelledTree& t1, const LabelledTree& t2, unsigned a,
                                ComparisonMode mode = ComparisonMode::Ordered,
                                std::size_t subset_budget = kDefaultSubsetBudget);

// Same count for the unrooted uniform model (shapes compared unordered).
unsigned long long common_count_unrooted(const UnrootedBinaryTree& t1, const UnrootedBinaryTree& t2, unsigned a);

// Largest agreement subset (unordered comparison) of two rooted binary trees on
// the same label set, by dynamic programming over vertex pairs.
// Throws NonBinaryInput or DomainError (label sets differ).
std::size_t mast_binary(const LabelledTree& t1, const LabelledTree& t2);

// max{a : common_count(t1, t2, a, mode) > 0}.
std::size_t mast_brute_force(const LabelledTree& t1, const LabelledTree& t2,
                             ComparisonMode mode = ComparisonMode::Unordered,
                             std::size_t subset_budget = kDefaultSubsetBudget);

inline constexpr std::size_t kDefaultShapeLimit = 2'000'000;

// All plane trees with a leaves and every internal out-degree in
// [2, max_outdeg], in ascending preorder-degree order. Throws
// ShapeEnumerationTooLarge past the limit.
std::vector<PlaneTree> enumerate_shapes(unsigned a, unsigned max_outdeg,
                                        std::size_t limit = kDefaultShapeLimit);

// Calls f(subset) for each a-subset of `labels` in lexicographic order.
template <class F>
void for_each_subset(std::span<const Label> labels, unsigned a, F&& f) {
  const std::size_t n = labels.size();
  if (a > n) return;
  std::vector<std::size_t> idx(a);
  for (unsigned i = 0; i < a; ++i) idx[i] = i;
  std::vector<Label> subset(a);
  while (true) {
    for (unsigned i = 0; i < a; ++i) subset[i] = labels[idx[i]];
    f(std::span<const Label>(subset));
    int i = static_cast<int>(a) - 1;
    while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - a + static_cast<std::size_t>(i)) --i;
    if (i < 0) return;
    ++idx[static_cast<std::size_t>(i)];
    for (auto k = static_cast<std::size_t>(i) + 1; k < a; ++k) idx[k] = idx[k - 1] + 1;
  }
}

}  // namespace gwmast
