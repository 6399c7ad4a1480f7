#pragma once

#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gwmast/rational.hpp"

namespace gwmast {

using Degree = unsigned;
using Label = int;
using Vertex = std::size_t;

inline constexpr Vertex kNoVertex = std::numeric_limits<Vertex>::max();

// Critical offspring law with finite rational support.
//
// Construct through validate(); the invariants p_0 > 0, p_1 = 0, sum p_j = 1 and
// sum j p_j = 1 hold for every instance. The period d = gcd{ j >= 1 : p_{j+1} > 0 }
// is carried as metadata; operations that need d = 1 check it themselves.
class OffspringDistribution {
 public:
  static OffspringDistribution validate(const std::map<Degree, Rational>& raw);

  // p_0 = p_2 = 1/2.
  static OffspringDistribution binary();

  const Rational& p(Degree j) const;
  const Rational& p0() const { return p(0); }

  // Out-degrees with positive mass, ascending; always starts with 0.
  const std::vector<Degree>& support() const { return support_; }
  Degree max_degree() const { return support_.back(); }

  // sum j(j-1) p_j, the offspring variance for a critical law.
  const Rational& sigma2() const { return sigma2_; }
  unsigned period() const { return period_; }
  bool aperiodic() const { return period_ == 1; }

  const std::map<Degree, Rational>& probabilities() const { return probs_; }

  bool operator==(const OffspringDistribution& other) const { return probs_ == other.probs_; }

 private:
  OffspringDistribution() = default;

  std::map<Degree, Rational> probs_;
  std::vector<Degree> support_;
  Rational sigma2_;
  unsigned period_ = 1;
};

// Rooted tree with ordered children.
//
// Vertices are numbered in preorder, so the tree is fully determined by its
// preorder out-degree sequence; equality compares that sequence.
class PlaneTree {
 public:
  // Single vertex.
  PlaneTree();

  // Throws InvalidTree unless `degrees` is a valid preorder out-degree sequence.
  static PlaneTree from_preorder_degrees(std::vector<Degree> degrees);

  // New root whose ordered children are the given subtrees.
  static PlaneTree join(std::span<const PlaneTree> children);

  std::size_t vertex_count() const { return degrees_.size(); }
  std::size_t edge_count() const { return degrees_.size() - 1; }
  std::size_t leaf_count() const { return leaf_count_; }

  Vertex root() const { return 0; }
  Degree out_degree(Vertex v) const { return degrees_[v]; }
  bool is_leaf(Vertex v) const { return degrees_[v] == 0; }
  Vertex parent(Vertex v) const { return parent_[v]; }
  std::span<const Vertex> children(Vertex v) const {
    return {children_.data() + child_begin_[v], degrees_[v]};
  }
  // One past the last vertex of the subtree rooted at v.
  Vertex subtree_end(Vertex v) const { return subtree_end_[v]; }

  // Leaves in preorder.
  const std::vector<Vertex>& leaves() const { return leaves_; }
  const std::vector<Degree>& preorder_degrees() const { return degrees_; }

  PlaneTree subtree(Vertex v) const;

  // True when no vertex has out-degree 1.
  bool is_induced_shape() const;

  bool operator==(const PlaneTree& other) const { return degrees_ == other.degrees_; }
  auto operator<=>(const PlaneTree& other) const { return degrees_ <=> other.degrees_; }

 private:
  explicit PlaneTree(std::vector<Degree> degrees);

  std::vector<Degree> degrees_;
  std::vector<Vertex> parent_;
  std::vector<std::size_t> child_begin_;
  std::vector<Vertex> children_;
  std::vector<Vertex> subtree_end_;
  std::vector<Vertex> leaves_;
  std::size_t leaf_count_ = 0;
};

// Plane tree whose leaves carry distinct integer labels.
class LabelledTree {
 public:
  // `leaf_labels[i]` labels the i-th leaf in preorder. Throws InvalidTree on a
  // size mismatch or a repeated label.
  LabelledTree(PlaneTree shape, std::vector<Label> leaf_labels);

  static LabelledTree leaf(Label label);
  static LabelledTree join(std::span<const LabelledTree> children);

  const PlaneTree& shape() const { return shape_; }
  const std::vector<Label>& leaf_labels() const { return labels_; }
  std::size_t leaf_count() const { return labels_.size(); }

  // kNoVertex for an unknown label.
  Vertex vertex_of(Label label) const;
  // Only meaningful for leaves.
  Label label_of(Vertex leaf) const { return labels_[leaf_rank_[leaf]]; }

  // Ascending.
  std::vector<Label> label_set() const;

  LabelledTree subtree(Vertex v) const;

  // Children reordered at every vertex by the smallest label below them; two
  // trees are equal as unordered trees iff their canonical forms are equal.
  LabelledTree canonical_unordered() const;

  // Every plane tree obtained by reordering children (prod over vertices of d(v)!).
  std::vector<LabelledTree> all_orderings() const;

  bool operator==(const LabelledTree& other) const = default;

 private:
  PlaneTree shape_;
  std::vector<Label> labels_;
  std::vector<std::size_t> leaf_rank_;
};

// Unrooted tree on leaves labelled 1..n whose internal vertices all have degree 3.
//
// Vertex i-1 is the leaf labelled i; internal vertices are n..2n-3.
class UnrootedBinaryTree {
 public:
  // The star on leaves 1, 2, 3.
  static UnrootedBinaryTree star3();

  // Throws InvalidTree unless the edges form an unrooted binary tree on n leaves.
  UnrootedBinaryTree(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges);

  std::size_t leaf_count() const { return n_; }
  std::size_t vertex_count() const { return adjacency_.size(); }
  const std::vector<std::pair<Vertex, Vertex>>& edges() const { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[v]; }

  static Vertex leaf_vertex(Label label) { return static_cast<Vertex>(label - 1); }
  bool is_leaf(Vertex v) const { return v < n_; }

  // Adds leaf n+1 by subdividing the given edge.
  UnrootedBinaryTree insert_leaf(std::size_t edge_index) const;

 private:
  UnrootedBinaryTree() = default;

  std::size_t n_ = 0;
  std::vector<std::pair<Vertex, Vertex>> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

// Product over every vertex (leaves included) of p_{d(v)}.
Rational tree_weight(const PlaneTree& t, const OffspringDistribution& dist);

// Nested-parenthesis text form: leaf := integer, node := "(" child ("," child)+ ")".
std::string serialize(const LabelledTree& t);
LabelledTree parse_tree(std::string_view text);

}  // namespace gwmast
