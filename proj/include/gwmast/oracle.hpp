#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "gwmast/core_trees.hpp"
#include "gwmast/rational.hpp"

// Exhaustive enumerations used as ground truth for the closed forms. Every
// routine is exponential and guarded by an explicit budget.
namespace gwmast::oracle {

struct EnumerationBudget {
  std::size_t max_objects = 10'000'000;
  std::size_t max_leaves = 9;
};

// Each unrooted binary tree on [n] exactly once, by sequential leaf insertion.
void for_each_unrooted_binary(std::size_t n, const std::function<void(const UnrootedBinaryTree&)>& visit,
                              EnumerationBudget budget = {});
std::vector<UnrootedBinaryTree> all_unrooted_binary(std::size_t n, EnumerationBudget budget = {});

// Each plane tree with exactly k leaves whose out-degrees lie in `support`
// (0 is implied). Generated as preorder degree words.
void for_each_plane_tree(std::size_t k, std::span<const Degree> support,
                         const std::function<void(const PlaneTree&)>& visit, EnumerationBudget budget = {});
std::vector<PlaneTree> all_plane_trees_with_leaves(std::size_t k, std::span<const Degree> support,
                                                   EnumerationBudget budget = {});

// Every rooted binary tree (children unordered, canonical form) on the labels.
std::vector<LabelledTree> all_rooted_binary(std::span<const Label> labels, EnumerationBudget budget = {});

// Ordered k-tuples of rooted binary leaf-labelled trees whose label sets
// partition [b].
void for_each_ordered_forest(std::size_t b, std::size_t k,
                             const std::function<void(std::span<const LabelledTree>)>& visit,
                             EnumerationBudget budget = {});
std::size_t count_ordered_forests(std::size_t b, std::size_t k, EnumerationBudget budget = {});

// Unrooted binary trees on [n] in which the leaf set of `shape` induces it
// (compared as unordered rooted trees).
std::size_t brute_host_count(const LabelledTree& shape, std::size_t n, EnumerationBudget budget = {});

// Sum of tree_weight over all plane trees with k leaves.
Rational leaf_count_mass(const OffspringDistribution& dist, std::size_t k, EnumerationBudget budget = {});

// P(S induces `shape` | n leaves) by summing over every plane tree with n
// leaves and every placement of the labels of S.
Rational brute_induced_probability(const OffspringDistribution& dist, const LabelledTree& shape, std::size_t n,
                                   EnumerationBudget budget = {});

// E[X_{n,a}] for two independent uniform unrooted trees, averaging the
// common count over all pairs.
Rational brute_expected_common_unrooted(std::size_t n, unsigned a, EnumerationBudget budget = {});

}  // namespace gwmast::oracle
