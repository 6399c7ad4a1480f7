#include "gwmast/core_trees.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "gwmast/error.hpp"

namespace gwmast {

// ---------------------------------------------------------------------------
// OffspringDistribution

OffspringDistribution OffspringDistribution::validate(const std::map<Degree, Rational>& raw) {
  OffspringDistribution d;
  Rational total = 0;
  Rational mean = 0;
  for (auto [j, pj] : raw) {
    pj.canonicalize();
    if (sgn(pj) < 0) throw Error(ErrorCode::NotProbability, "negative mass at degree " + std::to_string(j));
    if (sgn(pj) == 0) continue;
    d.probs_.emplace(j, pj);
    total += pj;
    mean += pj * j;
  }
  if (d.probs_.contains(1)) throw Error(ErrorCode::DegreeOneMass, "p_1 must be 0");
  if (total != 1) throw Error(ErrorCode::NotProbability, "masses sum to " + total.get_str());
  if (mean != 1) throw Error(ErrorCode::NotCritical, "mean is " + mean.get_str());
  if (!d.probs_.contains(0)) throw Error(ErrorCode::NoExtinctionMass, "p_0 must be positive");

  unsigned g = 0;
  for (const auto& [j, pj] : d.probs_) {
    d.support_.push_back(j);
    if (j >= 2) {
      d.sigma2_ += pj * (j * (j - 1));
      g = std::gcd(g, j - 1);
    }
  }
  d.period_ = g;
  return d;
}

OffspringDistribution OffspringDistribution::binary() {
  return validate({{0, Rational(1, 2)}, {2, Rational(1, 2)}});
}

const Rational& OffspringDistribution::p(Degree j) const {
  static const Rational zero = 0;
  auto it = probs_.find(j);
  return it == probs_.end() ? zero : it->second;
}

// ---------------------------------------------------------------------------
// PlaneTree

PlaneTree::PlaneTree() : PlaneTree(std::vector<Degree>{0}) {}

PlaneTree PlaneTree::from_preorder_degrees(std::vector<Degree> degrees) {
  if (degrees.empty()) throw Error(ErrorCode::InvalidTree, "empty degree sequence");
  // Lukasiewicz condition: open slots stay positive until the last vertex.
  long long open = 1;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (open <= 0) throw Error(ErrorCode::InvalidTree, "degree sequence closes early");
    open += static_cast<long long>(degrees[i]) - 1;
  }
  if (open != 0) throw Error(ErrorCode::InvalidTree, "degree sequence leaves open slots");
  return PlaneTree(std::move(degrees));
}

PlaneTree::PlaneTree(std::vector<Degree> degrees) : degrees_(std::move(degrees)) {
  const std::size_t n = degrees_.size();
  parent_.assign(n, kNoVertex);
  child_begin_.assign(n + 1, 0);
  subtree_end_.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) child_begin_[v + 1] = child_begin_[v] + degrees_[v];
  children_.resize(child_begin_[n]);

  // Stack of (vertex, next child slot).
  std::vector<std::pair<Vertex, std::size_t>> stack;
  for (Vertex v = 0; v < n; ++v) {
    if (!stack.empty()) {
      auto& [p, slot] = stack.back();
      parent_[v] = p;
      children_[child_begin_[p] + slot] = v;
      ++slot;
    }
    if (degrees_[v] == 0) {
      leaves_.push_back(v);
      subtree_end_[v] = v + 1;
      while (!stack.empty() && stack.back().second == degrees_[stack.back().first]) {
        subtree_end_[stack.back().first] = v + 1;
        stack.pop_back();
      }
    } else {
      stack.emplace_back(v, 0);
    }
  }
  leaf_count_ = leaves_.size();
}

PlaneTree PlaneTree::join(std::span<const PlaneTree> children) {
  std::vector<Degree> degrees{static_cast<Degree>(children.size())};
  for (const auto& c : children) {
    degrees.insert(degrees.end(), c.degrees_.begin(), c.degrees_.end());
  }
  return PlaneTree(std::move(degrees));
}

PlaneTree PlaneTree::subtree(Vertex v) const {
  return PlaneTree(std::vector<Degree>(degrees_.begin() + static_cast<std::ptrdiff_t>(v),
                                       degrees_.begin() + static_cast<std::ptrdiff_t>(subtree_end_[v])));
}

bool PlaneTree::is_induced_shape() const {
  return std::none_of(degrees_.begin(), degrees_.end(), [](Degree d) { return d == 1; });
}

// ---------------------------------------------------------------------------
// LabelledTree

LabelledTree::LabelledTree(PlaneTree shape, std::vector<Label> leaf_labels)
    : shape_(std::move(shape)), labels_(std::move(leaf_labels)) {
  if (labels_.size() != shape_.leaf_count()) {
    throw Error(ErrorCode::InvalidTree, "label count does not match leaf count");
  }
  std::set<Label> seen(labels_.begin(), labels_.end());
  if (seen.size() != labels_.size()) throw Error(ErrorCode::InvalidTree, "repeated leaf label");
  leaf_rank_.assign(shape_.vertex_count(), 0);
  for (std::size_t i = 0; i < shape_.leaves().size(); ++i) leaf_rank_[shape_.leaves()[i]] = i;
}

LabelledTree LabelledTree::leaf(Label label) { return LabelledTree(PlaneTree(), {label}); }

LabelledTree LabelledTree::join(std::span<const LabelledTree> children) {
  std::vector<PlaneTree> shapes;
  std::vector<Label> labels;
  for (const auto& c : children) {
    shapes.push_back(c.shape_);
    labels.insert(labels.end(), c.labels_.begin(), c.labels_.end());
  }
  return LabelledTree(PlaneTree::join(shapes), std::move(labels));
}

Vertex LabelledTree::vertex_of(Label label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return kNoVertex;
  return shape_.leaves()[static_cast<std::size_t>(it - labels_.begin())];
}

std::vector<Label> LabelledTree::label_set() const {
  std::vector<Label> s = labels_;
  std::sort(s.begin(), s.end());
  return s;
}

LabelledTree LabelledTree::subtree(Vertex v) const {
  const Vertex end = shape_.subtree_end(v);
  std::vector<Label> labels;
  for (Vertex leaf : shape_.leaves()) {
    if (leaf >= v && leaf < end) labels.push_back(label_of(leaf));
  }
  return LabelledTree(shape_.subtree(v), std::move(labels));
}

namespace {

struct Canonical {
  LabelledTree tree;
  Label min_label;
};

Canonical canonicalize(const LabelledTree& t, Vertex v) {
  const PlaneTree& s = t.shape();
  if (s.is_leaf(v)) return {LabelledTree::leaf(t.label_of(v)), t.label_of(v)};
  std::vector<Canonical> kids;
  for (Vertex c : s.children(v)) kids.push_back(canonicalize(t, c));
  std::sort(kids.begin(), kids.end(),
            [](const Canonical& a, const Canonical& b) { return a.min_label < b.min_label; });
  std::vector<LabelledTree> trees;
  for (auto& k : kids) trees.push_back(std::move(k.tree));
  Label lo = kids.front().min_label;
  return {LabelledTree::join(trees), lo};
}

std::vector<LabelledTree> orderings_at(const LabelledTree& t, Vertex v) {
  const PlaneTree& s = t.shape();
  if (s.is_leaf(v)) return {LabelledTree::leaf(t.label_of(v))};
  std::vector<std::vector<LabelledTree>> per_child;
  for (Vertex c : s.children(v)) per_child.push_back(orderings_at(t, c));

  std::vector<std::size_t> perm(per_child.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<LabelledTree> out;
  do {
    // Cartesian product over the children's own orderings, in permuted order.
    std::vector<std::size_t> idx(perm.size(), 0);
    while (true) {
      std::vector<LabelledTree> kids;
      for (std::size_t i = 0; i < perm.size(); ++i) kids.push_back(per_child[perm[i]][idx[i]]);
      out.push_back(LabelledTree::join(kids));
      std::size_t i = 0;
      while (i < idx.size() && ++idx[i] == per_child[perm[i]].size()) idx[i++] = 0;
      if (i == idx.size()) break;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

}  // namespace

LabelledTree LabelledTree::canonical_unordered() const {
  return canonicalize(*this, shape_.root()).tree;
}

std::vector<LabelledTree> LabelledTree::all_orderings() const {
  return orderings_at(*this, shape_.root());
}

// ---------------------------------------------------------------------------
// UnrootedBinaryTree

UnrootedBinaryTree UnrootedBinaryTree::star3() {
  return UnrootedBinaryTree(3, {{0, 3}, {1, 3}, {2, 3}});
}

UnrootedBinaryTree::UnrootedBinaryTree(std::size_t n, std::vector<std::pair<Vertex, Vertex>> edges)
    : n_(n), edges_(std::move(edges)) {
  if (n < 3) throw Error(ErrorCode::InvalidTree, "unrooted binary tree needs at least 3 leaves");
  const std::size_t vertices = 2 * n - 2;
  if (edges_.size() != 2 * n - 3) throw Error(ErrorCode::InvalidTree, "expected 2n-3 edges");
  adjacency_.assign(vertices, {});
  for (auto [u, v] : edges_) {
    if (u >= vertices || v >= vertices || u == v) throw Error(ErrorCode::InvalidTree, "bad edge");
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (Vertex v = 0; v < vertices; ++v) {
    const std::size_t want = is_leaf(v) ? 1 : 3;
    if (adjacency_[v].size() != want) throw Error(ErrorCode::InvalidTree, "vertex degree mismatch");
  }
  // Connected with |E| = |V| - 1 means it is a tree.
  std::vector<bool> seen(vertices, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : adjacency_[v]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != vertices) throw Error(ErrorCode::InvalidTree, "edges do not connect all vertices");
}

UnrootedBinaryTree UnrootedBinaryTree::insert_leaf(std::size_t edge_index) const {
  // Leaves keep ids 0..n-1, the new leaf takes id n, internal ids shift by one
  // and the subdividing vertex is appended last.
  const std::size_t n = n_;
  auto remap = [n](Vertex v) { return v < n ? v : v + 1; };
  const Vertex new_leaf = n;
  const Vertex new_internal = 2 * (n + 1) - 3;
  std::vector<std::pair<Vertex, Vertex>> edges;
  edges.reserve(edges_.size() + 2);
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    auto [u, v] = edges_[i];
    if (i == edge_index) {
      edges.emplace_back(remap(u), new_internal);
      edges.emplace_back(new_internal, remap(v));
    } else {
      edges.emplace_back(remap(u), remap(v));
    }
  }
  edges.emplace_back(new_leaf, new_internal);
  return UnrootedBinaryTree(n + 1, std::move(edges));
}

// ---------------------------------------------------------------------------

Rational tree_weight(const PlaneTree& t, const OffspringDistribution& dist) {
  Rational w = 1;
  for (Degree d : t.preorder_degrees()) {
    const Rational& pd = dist.p(d);
    if (sgn(pd) == 0) return 0;
    w *= pd;
  }
  return w;
}

namespace {

void write_subtree(const LabelledTree& t, Vertex v, std::string& out) {
  const PlaneTree& s = t.shape();
  if (s.is_leaf(v)) {
    out += std::to_string(t.label_of(v));
    return;
  }
  if (s.out_degree(v) < 2) {
    throw Error(ErrorCode::InvalidTree, "out-degree 1 vertex has no text form");
  }
  out += '(';
  bool first = true;
  for (Vertex c : s.children(v)) {
    if (!first) out += ',';
    first = false;
    write_subtree(t, c, out);
  }
  out += ')';
}

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  LabelledTree parse() {
    skip_space();
    node();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing characters");
    std::set<Label> seen(labels_.begin(), labels_.end());
    if (seen.size() != labels_.size()) throw ParseError(0, "repeated leaf label");
    return LabelledTree(PlaneTree::from_preorder_degrees(std::move(degrees_)), std::move(labels_));
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void node() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    if (text_[pos_] == '(') {
      ++pos_;
      const std::size_t slot = degrees_.size();
      degrees_.push_back(0);
      Degree count = 0;
      while (true) {
        node();
        ++count;
        skip_space();
        if (pos_ >= text_.size()) throw ParseError(pos_, "unbalanced parenthesis");
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ')') {
          if (count < 2) throw ParseError(pos_, "internal node needs at least two children");
          ++pos_;
          break;
        }
        throw ParseError(pos_, std::string("unexpected character '") + text_[pos_] + "'");
      }
      degrees_[slot] = count;
      return;
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "expected label or '('");
    if (pos_ - start > 9) throw ParseError(start, "label too large");
    labels_.push_back(std::stoi(std::string(text_.substr(start, pos_ - start))));
    degrees_.push_back(0);
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<Degree> degrees_;
  std::vector<Label> labels_;
};

}  // namespace

std::string serialize(const LabelledTree& t) {
  std::string out;
  write_subtree(t, t.shape().root(), out);
  return out;
}

LabelledTree parse_tree(std::string_view text) { return TreeParser(text).parse(); }

}  // namespace gwmast
