#include "gwmast/oracle.hpp"

#include <algorithm>
#include <map>

#include "gwmast/agreement.hpp"
#include "gwmast/error.hpp"

namespace gwmast::oracle {

namespace {

void charge(std::size_t& produced, const EnumerationBudget& budget) {
  if (++produced > budget.max_objects) {
    throw Error(ErrorCode::BudgetExceeded, "more than " + std::to_string(budget.max_objects) + " objects");
  }
}

void check_leaves(std::size_t n, const EnumerationBudget& budget) {
  if (n > budget.max_leaves) {
    throw Error(ErrorCode::BudgetExceeded,
                std::to_string(n) + " leaves exceeds the budget of " + std::to_string(budget.max_leaves));
  }
}

void grow_unrooted(const UnrootedBinaryTree& t, std::size_t n,
                   const std::function<void(const UnrootedBinaryTree&)>& visit, std::size_t& produced,
                   const EnumerationBudget& budget) {
  if (t.leaf_count() == n) {
    charge(produced, budget);
    visit(t);
    return;
  }
  for (std::size_t e = 0; e < t.edges().size(); ++e) grow_unrooted(t.insert_leaf(e), n, visit, produced, budget);
}

}  // namespace

void for_each_unrooted_binary(std::size_t n, const std::function<void(const UnrootedBinaryTree&)>& visit,
                              EnumerationBudget budget) {
  if (n < 3) throw Error(ErrorCode::DomainError, "unrooted binary trees need n >= 3");
  check_leaves(n, budget);
  std::size_t produced = 0;
  grow_unrooted(UnrootedBinaryTree::star3(), n, visit, produced, budget);
}

std::vector<UnrootedBinaryTree> all_unrooted_binary(std::size_t n, EnumerationBudget budget) {
  std::vector<UnrootedBinaryTree> out;
  for_each_unrooted_binary(n, [&](const UnrootedBinaryTree& t) { out.push_back(t); }, budget);
  return out;
}

void for_each_plane_tree(std::size_t k, std::span<const Degree> support,
                         const std::function<void(const PlaneTree&)>& visit, EnumerationBudget budget) {
  if (k < 1) throw Error(ErrorCode::DomainError, "need k >= 1 leaves");
  check_leaves(k, budget);
  std::vector<Degree> internal;
  for (Degree d : support) {
    if (d >= 2) internal.push_back(d);
  }
  std::sort(internal.begin(), internal.end());
  internal.erase(std::unique(internal.begin(), internal.end()), internal.end());

  std::vector<Degree> word;
  std::size_t produced = 0;
  // open: slots still to fill; every open slot will hold at least one leaf.
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t open, std::size_t leaves) {
    if (open == 0) {
      if (leaves == k) {
        charge(produced, budget);
        visit(PlaneTree::from_preorder_degrees(word));
      }
      return;
    }
    if (leaves + open <= k) {
      word.push_back(0);
      extend(open - 1, leaves + 1);
      word.pop_back();
    }
    for (Degree d : internal) {
      if (leaves + open - 1 + d > k) break;
      word.push_back(d);
      extend(open - 1 + d, leaves);
      word.pop_back();
    }
  };
  extend(1, 0);
}

std::vector<PlaneTree> all_plane_trees_with_leaves(std::size_t k, std::span<const Degree> support,
                                                   EnumerationBudget budget) {
  std::vector<PlaneTree> out;
  for_each_plane_tree(k, support, [&](const PlaneTree& t) { out.push_back(t); }, budget);
  return out;
}

namespace {

// Copy of the subtree at v with `target` replaced by the cherry (target, new leaf).
LabelledTree with_inserted(const LabelledTree& t, Vertex v, Vertex target, Label fresh) {
  const PlaneTree& s = t.shape();
  LabelledTree here = s.is_leaf(v) ? LabelledTree::leaf(t.label_of(v)) : [&] {
    std::vector<LabelledTree> kids;
    for (Vertex c : s.children(v)) kids.push_back(with_inserted(t, c, target, fresh));
    return LabelledTree::join(kids);
  }();
  if (v != target) return here;
  std::vector<LabelledTree> cherry{std::move(here), LabelledTree::leaf(fresh)};
  return LabelledTree::join(cherry);
}

}  // namespace

std::vector<LabelledTree> all_rooted_binary(std::span<const Label> labels, EnumerationBudget budget) {
  if (labels.empty()) throw Error(ErrorCode::DomainError, "need at least one label");
  check_leaves(labels.size(), budget);
  std::vector<LabelledTree> current{LabelledTree::leaf(labels[0])};
  std::size_t produced = 0;
  for (std::size_t i = 1; i < labels.size(); ++i) {
    std::vector<LabelledTree> next;
    for (const auto& t : current) {
      // Each vertex, root included, is a place to hang the next leaf.
      for (Vertex v = 0; v < t.shape().vertex_count(); ++v) {
        charge(produced, budget);
        next.push_back(with_inserted(t, t.shape().root(), v, labels[i]).canonical_unordered());
      }
    }
    current = std::move(next);
  }
  return current;
}

void for_each_ordered_forest(std::size_t b, std::size_t k,
                             const std::function<void(std::span<const LabelledTree>)>& visit,
                             EnumerationBudget budget) {
  if (k < 1 || k > b) throw Error(ErrorCode::DomainError, "forests need 1 <= k <= b");
  check_leaves(b, budget);
  std::size_t produced = 0;
  std::vector<std::size_t> block(b, 0);
  while (true) {
    std::vector<std::vector<Label>> parts(k);
    for (std::size_t i = 0; i < b; ++i) parts[block[i]].push_back(static_cast<Label>(i + 1));
    if (std::none_of(parts.begin(), parts.end(), [](const auto& p) { return p.empty(); })) {
      std::vector<std::vector<LabelledTree>> choices;
      for (const auto& p : parts) choices.push_back(all_rooted_binary(p, budget));
      std::vector<std::size_t> idx(k, 0);
      std::vector<LabelledTree> forest;
      while (true) {
        forest.clear();
        for (std::size_t j = 0; j < k; ++j) forest.push_back(choices[j][idx[j]]);
        charge(produced, budget);
        visit(forest);
        std::size_t j = 0;
        while (j < k && ++idx[j] == choices[j].size()) idx[j++] = 0;
        if (j == k) break;
      }
    }
    // Next assignment of leaves to blocks, base k.
    std::size_t i = 0;
    while (i < b && ++block[i] == k) block[i++] = 0;
    if (i == b) break;
  }
}

std::size_t count_ordered_forests(std::size_t b, std::size_t k, EnumerationBudget budget) {
  std::size_t count = 0;
  for_each_ordered_forest(b, k, [&](std::span<const LabelledTree>) { ++count; }, budget);
  return count;
}

std::size_t brute_host_count(const LabelledTree& shape, std::size_t n, EnumerationBudget budget) {
  const std::vector<Label> subset = shape.label_set();
  if (subset.size() >= n) throw Error(ErrorCode::DomainError, "shape must have fewer than n leaves");
  const LabelledTree target = shape.canonical_unordered();
  std::size_t hosts = 0;
  for_each_unrooted_binary(
      n,
      [&](const UnrootedBinaryTree& t) {
        if (induce_unrooted(t, subset).shape == target) ++hosts;
      },
      budget);
  return hosts;
}

Rational leaf_count_mass(const OffspringDistribution& dist, std::size_t k, EnumerationBudget budget) {
  Rational total = 0;
  for_each_plane_tree(k, dist.support(), [&](const PlaneTree& t) { total += tree_weight(t, dist); }, budget);
  return total;
}

Rational brute_induced_probability(const OffspringDistribution& dist, const LabelledTree& shape, std::size_t n,
                                   EnumerationBudget budget) {
  const std::vector<Label> subset = shape.leaf_labels();
  const std::size_t a = subset.size();
  if (a > n) throw Error(ErrorCode::DomainError, "shape has more leaves than n");
  // Labels outside S only need to be distinct from S.
  Label filler_base = 1;
  for (Label x : subset) filler_base = std::max(filler_base, x + 1);

  Rational hit_mass = 0;
  Rational total_mass = 0;
  std::size_t placements = 0;
  for_each_plane_tree(
      n, dist.support(),
      [&](const PlaneTree& t) {
        const Rational w = tree_weight(t, dist);
        total_mass += w;
        std::size_t hits = 0;
        placements = 0;
        // Ordered choice of a distinct leaf positions for the labels of S.
        std::vector<std::size_t> pos;
        std::vector<bool> used(n, false);
        std::function<void()> place = [&]() {
          if (pos.size() == a) {
            ++placements;
            std::vector<Label> labels(n);
            Label filler = filler_base;
            for (std::size_t p = 0; p < n; ++p) {
              if (!used[p]) labels[p] = filler++;
            }
            for (std::size_t i = 0; i < a; ++i) labels[pos[i]] = subset[i];
            InducedResult r = induce_rooted(LabelledTree(t, std::move(labels)), subset);
            if (r.degree_condition_met && r.shape == shape) ++hits;
            return;
          }
          for (std::size_t p = 0; p < n; ++p) {
            if (used[p]) continue;
            used[p] = true;
            pos.push_back(p);
            place();
            pos.pop_back();
            used[p] = false;
          }
        };
        place();
        hit_mass += w * static_cast<unsigned long>(hits);
      },
      budget);
  if (sgn(total_mass) == 0) throw Error(ErrorCode::ZeroDenominator, "no tree has n leaves");
  return hit_mass / (total_mass * static_cast<unsigned long>(placements));
}

Rational brute_expected_common_unrooted(std::size_t n, unsigned a, EnumerationBudget budget) {
  if (a < 1 || a >= n) throw Error(ErrorCode::DomainError, "need 1 <= a < n");
  const auto trees = all_unrooted_binary(n, budget);
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i + 1);

  // Induced shape of every subset in every tree, interned to an integer id.
  std::map<std::string, std::size_t> ids;
  std::vector<std::vector<std::size_t>> signature(trees.size());
  for (std::size_t t = 0; t < trees.size(); ++t) {
    for_each_subset(labels, a, [&](std::span<const Label> s) {
      const std::string key = serialize(induce_unrooted(trees[t], s).shape);
      signature[t].push_back(ids.emplace(key, ids.size()).first->second);
    });
  }
  unsigned long long agree = 0;
  for (const auto& s1 : signature) {
    for (const auto& s2 : signature) {
      for (std::size_t i = 0; i < s1.size(); ++i) agree += s1[i] == s2[i];
    }
  }
  Rational r(BigInt(std::to_string(agree)), BigInt(std::to_string(trees.size() * trees.size())));
  r.canonicalize();
  return r;
}

}  // namespace gwmast::oracle
