#include "gwmast/agreement.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "gwmast/error.hpp"
#include "gwmast/rational.hpp"

namespace gwmast {

namespace {

// Rooted view of any tree: ordered children per vertex plus leaf labels.
struct RootedView {
  std::vector<std::vector<Vertex>> children;
  std::vector<Label> label;  // meaningful for leaves only
  std::vector<Vertex> order;  // parents before children
};

// Emits the induced shape below `lca`, suppressing vertices with a single
// marked child. `count[v]` is the number of S-leaves below v.
class ShapeBuilder {
 public:
  ShapeBuilder(const RootedView& view, const std::vector<std::size_t>& count, Vertex lca)
      : view_(view), count_(count), lca_(lca) {}

  InducedResult build() {
    emit(lca_);
    InducedResult r{LabelledTree(PlaneTree::from_preorder_degrees(std::move(degrees_)), std::move(labels_)),
                    lca_, degree_ok_};
    return r;
  }

 private:
  void emit(Vertex v) {
    const auto& kids = view_.children[v];
    if (kids.empty()) {
      degrees_.push_back(0);
      labels_.push_back(view_.label[v]);
      return;
    }
    std::vector<Vertex> marked;
    for (Vertex c : kids) {
      if (count_[c] > 0) marked.push_back(c);
    }
    if (marked.size() == 1 && v != lca_) {
      emit(marked.front());
      return;
    }
    if (marked.size() != kids.size()) degree_ok_ = false;
    degrees_.push_back(static_cast<Degree>(marked.size()));
    for (Vertex c : marked) emit(c);
  }

  const RootedView& view_;
  const std::vector<std::size_t>& count_;
  Vertex lca_;
  std::vector<Degree> degrees_;
  std::vector<Label> labels_;
  bool degree_ok_ = true;
};

InducedResult induce_in_view(const RootedView& view, Vertex root, const std::vector<Vertex>& marked_leaves) {
  std::vector<std::size_t> count(view.children.size(), 0);
  for (Vertex v : marked_leaves) count[v] = 1;
  for (auto it = view.order.rbegin(); it != view.order.rend(); ++it) {
    for (Vertex c : view.children[*it]) count[*it] += count[c];
  }
  const std::size_t total = marked_leaves.size();
  Vertex lca = root;
  while (true) {
    Vertex next = kNoVertex;
    for (Vertex c : view.children[lca]) {
      if (count[c] == total) next = c;
    }
    if (next == kNoVertex) break;
    lca = next;
  }
  return ShapeBuilder(view, count, lca).build();
}

RootedView view_of(const LabelledTree& t) {
  const PlaneTree& s = t.shape();
  RootedView view;
  view.children.resize(s.vertex_count());
  view.label.assign(s.vertex_count(), 0);
  view.order.resize(s.vertex_count());
  for (Vertex v = 0; v < s.vertex_count(); ++v) {
    auto kids = s.children(v);
    view.children[v].assign(kids.begin(), kids.end());
    if (s.is_leaf(v)) view.label[v] = t.label_of(v);
    view.order[v] = v;
  }
  return view;
}

void check_distinct(std::span<const Label> subset) {
  std::set<Label> seen(subset.begin(), subset.end());
  if (seen.size() != subset.size()) throw Error(ErrorCode::DomainError, "repeated label in subset");
}

}  // namespace

InducedResult induce_rooted(const LabelledTree& t, std::span<const Label> subset) {
  if (subset.empty()) throw Error(ErrorCode::DomainError, "empty leaf subset");
  check_distinct(subset);
  std::vector<Vertex> leaves;
  for (Label x : subset) {
    Vertex v = t.vertex_of(x);
    if (v == kNoVertex) throw Error(ErrorCode::UnknownLabel, "label " + std::to_string(x));
    leaves.push_back(v);
  }
  return induce_in_view(view_of(t), t.shape().root(), leaves);
}

InducedResult induce_unrooted(const UnrootedBinaryTree& t, std::span<const Label> subset, Label outside_leaf) {
  const auto n = static_cast<Label>(t.leaf_count());
  if (subset.empty()) throw Error(ErrorCode::DomainError, "empty leaf subset");
  check_distinct(subset);
  std::vector<bool> in_subset(t.leaf_count() + 1, false);
  for (Label x : subset) {
    if (x < 1 || x > n) throw Error(ErrorCode::UnknownLabel, "label " + std::to_string(x));
    in_subset[static_cast<std::size_t>(x)] = true;
  }
  if (subset.size() >= t.leaf_count()) throw Error(ErrorCode::NeedOutsideLeaf, "S covers every leaf");
  if (outside_leaf == 0) {
    outside_leaf = 1;
    while (in_subset[static_cast<std::size_t>(outside_leaf)]) ++outside_leaf;
  } else if (outside_leaf < 1 || outside_leaf > n || in_subset[static_cast<std::size_t>(outside_leaf)]) {
    throw Error(ErrorCode::DomainError, "outside leaf must be a label not in S");
  }

  // Orient every edge away from the outside leaf.
  RootedView view;
  view.children.resize(t.vertex_count());
  view.label.assign(t.vertex_count(), 0);
  const Vertex root = UnrootedBinaryTree::leaf_vertex(outside_leaf);
  std::vector<Vertex> parent(t.vertex_count(), kNoVertex);
  view.order.push_back(root);
  for (std::size_t i = 0; i < view.order.size(); ++i) {
    Vertex v = view.order[i];
    for (Vertex w : t.neighbours(v)) {
      if (w == parent[v]) continue;
      parent[w] = v;
      view.children[v].push_back(w);
      view.order.push_back(w);
    }
  }
  for (Vertex v = 0; v < t.leaf_count(); ++v) view.label[v] = static_cast<Label>(v + 1);

  std::vector<Vertex> leaves;
  for (Label x : subset) leaves.push_back(UnrootedBinaryTree::leaf_vertex(x));
  InducedResult r = induce_in_view(view, root, leaves);
  r.shape = r.shape.canonical_unordered();
  return r;
}

namespace {

void require_same_labels(const LabelledTree& t1, const LabelledTree& t2) {
  if (t1.label_set() != t2.label_set()) throw Error(ErrorCode::DomainError, "trees have different label sets");
}

void check_budget(std::size_t n, unsigned a, std::size_t budget) {
  if (binomial(n, a) > BigInt(std::to_string(budget))) {
    throw Error(ErrorCode::SubsetSpaceTooLarge,
                "C(" + std::to_string(n) + "," + std::to_string(a) + ") exceeds budget " + std::to_string(budget));
  }
}

}  // namespace

unsigned long long common_count(const LabelledTree& t1, const LabelledTree& t2, unsigned a, ComparisonMode mode,
                                std::size_t subset_budget) {
  require_same_labels(t1, t2);
  const std::vector<Label> labels = t1.label_set();
  if (a < 1 || a > labels.size()) throw Error(ErrorCode::DomainError, "need 1 <= a <= n");
  check_budget(labels.size(), a, subset_budget);
  const RootedView v1 = view_of(t1);
  const RootedView v2 = view_of(t2);
  unsigned long long agree = 0;
  for_each_subset(labels, a, [&](std::span<const Label> s) {
    std::vector<Vertex> l1, l2;
    for (Label x : s) {
      l1.push_back(t1.vertex_of(x));
      l2.push_back(t2.vertex_of(x));
    }
    InducedResult r1 = induce_in_view(v1, 0, l1);
    if (!r1.degree_condition_met) return;
    InducedResult r2 = induce_in_view(v2, 0, l2);
    if (!r2.degree_condition_met) return;
    const bool same = mode == ComparisonMode::Ordered
                          ? r1.shape == r2.shape
                          : r1.shape.canonical_unordered() == r2.shape.canonical_unordered();
    if (same) ++agree;
  });
  return agree;
}

unsigned long long common_count_unrooted(const UnrootedBinaryTree& t1, const UnrootedBinaryTree& t2, unsigned a) {
  if (t1.leaf_count() != t2.leaf_count()) throw Error(ErrorCode::DomainError, "trees have different leaf counts");
  const std::size_t n = t1.leaf_count();
  if (a < 1 || a >= n) throw Error(ErrorCode::DomainError, "need 1 <= a < n");
  std::vector<Label> labels(n);
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<Label>(i + 1);
  unsigned long long agree = 0;
  for_each_subset(labels, a, [&](std::span<const Label> s) {
    if (induce_unrooted(t1, s).shape == induce_unrooted(t2, s).shape) ++agree;
  });
  return agree;
}

std::size_t mast_binary(const LabelledTree& t1, const LabelledTree& t2) {
  require_same_labels(t1, t2);
  const PlaneTree& s1 = t1.shape();
  const PlaneTree& s2 = t2.shape();
  for (const PlaneTree* s : {&s1, &s2}) {
    for (Degree d : s->preorder_degrees()) {
      if (d != 0 && d != 2) throw Error(ErrorCode::NonBinaryInput, "out-degree " + std::to_string(d));
    }
  }
  const std::size_t n1 = s1.vertex_count();
  const std::size_t n2 = s2.vertex_count();
  std::vector<std::size_t> table(n1 * n2, 0);
  auto at = [&](Vertex u, Vertex v) -> std::size_t& { return table[u * n2 + v]; };
  auto below = [](const PlaneTree& s, Vertex v, Vertex w) { return w >= v && w < s.subtree_end(v); };

  // Children have larger preorder ids, so descending ids visit them first.
  for (Vertex u = n1; u-- > 0;) {
    for (Vertex v = n2; v-- > 0;) {
      std::size_t best = 0;
      if (s1.is_leaf(u)) {
        best = below(s2, v, t2.vertex_of(t1.label_of(u))) ? 1 : 0;
      } else if (s2.is_leaf(v)) {
        best = below(s1, u, t1.vertex_of(t2.label_of(v))) ? 1 : 0;
      } else {
        const Vertex u1 = s1.children(u)[0], u2 = s1.children(u)[1];
        const Vertex v1 = s2.children(v)[0], v2 = s2.children(v)[1];
        best = std::max({at(u1, v1) + at(u2, v2), at(u1, v2) + at(u2, v1), at(u, v1), at(u, v2), at(u1, v),
                         at(u2, v)});
      }
      at(u, v) = best;
    }
  }
  return at(0, 0);
}

std::size_t mast_brute_force(const LabelledTree& t1, const LabelledTree& t2, ComparisonMode mode,
                             std::size_t subset_budget) {
  require_same_labels(t1, t2);
  for (auto a = static_cast<unsigned>(t1.leaf_count()); a >= 1; --a) {
    if (common_count(t1, t2, a, mode, subset_budget) > 0) return a;
  }
  return 0;
}

std::vector<PlaneTree> enumerate_shapes(unsigned a, unsigned max_outdeg, std::size_t limit) {
  if (a < 1) throw Error(ErrorCode::DomainError, "shapes need a >= 1 leaves");
  std::vector<std::vector<PlaneTree>> by_leaves(a + 1);
  by_leaves[1].push_back(PlaneTree());
  for (unsigned m = 2; m <= a; ++m) {
    auto& out = by_leaves[m];
    std::vector<PlaneTree> kids;
    // Child i receives some number of the remaining leaves; every child needs one.
    std::function<void(unsigned, unsigned, unsigned)> place = [&](unsigned i, unsigned d, unsigned remaining) {
      if (i == d) {
        if (out.size() >= limit) {
          throw Error(ErrorCode::ShapeEnumerationTooLarge, "more than " + std::to_string(limit) + " shapes");
        }
        out.push_back(PlaneTree::join(kids));
        return;
      }
      const unsigned lo = i + 1 == d ? remaining : 1;
      const unsigned hi = remaining - (d - 1 - i);
      for (unsigned leaves = lo; leaves <= hi; ++leaves) {
        for (const auto& s : by_leaves[leaves]) {
          kids.push_back(s);
          place(i + 1, d, remaining - leaves);
          kids.pop_back();
        }
      }
    };
    for (unsigned d = 2; d <= std::min(max_outdeg, m); ++d) place(0, d, m);
  }
  std::vector<PlaneTree> result = std::move(by_leaves[a]);
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace gwmast
