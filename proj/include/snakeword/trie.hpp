#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace snakeword {

using Bit = std::uint8_t;

enum class Branch { Left, Right };

using NodeId = std::size_t;

/// Rooted binary tree stored as an arena. Node 0 is the root; every other
/// node is exactly one of the left/right children of its parent and may
/// carry a letter on its incoming edge.
template <typename Payload>
class Trie {
 public:
  struct Node {
    std::optional<NodeId> parent;
    std::optional<NodeId> left;
    std::optional<NodeId> right;
    std::optional<Bit> edge;
    Payload payload{};
  };

  explicit Trie(Payload root_payload = Payload{}) {
    nodes_.push_back(Node{std::nullopt, std::nullopt, std::nullopt, std::nullopt,
                          std::move(root_payload)});
  }

  static constexpr NodeId root() noexcept { return 0; }
  std::size_t size() const noexcept { return nodes_.size(); }

  const Node& node(NodeId id) const { return nodes_.at(id); }
  const Payload& payload(NodeId id) const { return nodes_.at(id).payload; }
  void set_payload(NodeId id, Payload payload) { nodes_.at(id).payload = std::move(payload); }

  std::optional<NodeId> child(NodeId id, Branch branch) const {
    const Node& n = nodes_.at(id);
    return branch == Branch::Left ? n.left : n.right;
  }

  bool is_leaf(NodeId id) const {
    const Node& n = nodes_.at(id);
    return !n.left && !n.right;
  }

  /// Which side of its parent `id` hangs on. Undefined for the root.
  Branch branch_of(NodeId id) const {
    const Node& n = nodes_.at(id);
    if (!n.parent) throw std::logic_error("root has no branch");
    return nodes_[*n.parent].left == id ? Branch::Left : Branch::Right;
  }

  NodeId add_child(NodeId parent, Branch branch, std::optional<Bit> edge,
                   Payload payload = Payload{}) {
    if (child(parent, branch)) throw std::logic_error("trie slot already occupied");
    const NodeId id = nodes_.size();
    nodes_.push_back(Node{parent, std::nullopt, std::nullopt, edge, std::move(payload)});
    slot(parent, branch) = id;
    return id;
  }

  /// Deep-copies the subtree rooted at `source` (payloads and inner edge
  /// letters kept) and hangs the copy under `parent` with edge letter `edge`.
  NodeId graft_copy(NodeId source, NodeId parent, Branch branch, std::optional<Bit> edge) {
    const std::vector<NodeId> order = preorder(source);
    std::vector<std::pair<NodeId, NodeId>> mapping;  // (original, copy)
    mapping.reserve(order.size());
    const NodeId copy_root = add_child(parent, branch, edge, nodes_[source].payload);
    mapping.emplace_back(source, copy_root);
    for (std::size_t k = 1; k < order.size(); ++k) {
      const NodeId original = order[k];
      const NodeId original_parent = *nodes_[original].parent;
      const auto it = std::find_if(mapping.begin(), mapping.end(),
                                   [&](const auto& m) { return m.first == original_parent; });
      const NodeId copy = add_child(it->second, branch_of(original), nodes_[original].edge,
                                    nodes_[original].payload);
      mapping.emplace_back(original, copy);
    }
    return copy_root;
  }

  /// Node, then left subtree, then right subtree.
  std::vector<NodeId> preorder(NodeId from = root()) const {
    std::vector<NodeId> out;
    std::vector<NodeId> stack{from};
    while (!stack.empty()) {
      const NodeId id = stack.back();
      stack.pop_back();
      out.push_back(id);
      const Node& n = nodes_[id];
      if (n.right) stack.push_back(*n.right);
      if (n.left) stack.push_back(*n.left);
    }
    return out;
  }

  /// Root first, `id` last.
  std::vector<NodeId> path_to(NodeId id) const {
    std::vector<NodeId> path{id};
    while (nodes_.at(path.back()).parent) path.push_back(*nodes_[path.back()].parent);
    std::reverse(path.begin(), path.end());
    return path;
  }

  /// Edge letters from the root to `id`; nodes without a letter contribute '?'.
  std::string edge_path(NodeId id) const {
    std::string s;
    for (NodeId n : path_to(id)) {
      if (n == root()) continue;
      const auto& e = nodes_[n].edge;
      s.push_back(e ? static_cast<char>('0' + *e) : '?');
    }
    return s;
  }

  std::size_t depth(NodeId id) const { return path_to(id).size() - 1; }

 private:
  std::optional<NodeId>& slot(NodeId id, Branch branch) {
    Node& n = nodes_.at(id);
    return branch == Branch::Left ? n.left : n.right;
  }

  std::vector<Node> nodes_;
};

/// True when the two tries have the same shape with left and right children
/// kept apart, and (optionally) equal edge letters on corresponding edges.
template <typename A, typename B>
bool ordered_isomorphic(const Trie<A>& a, const Trie<B>& b, bool compare_edges = true) {
  if (a.size() != b.size()) return false;
  std::vector<std::pair<NodeId, NodeId>> stack{{a.root(), b.root()}};
  while (!stack.empty()) {
    const auto [x, y] = stack.back();
    stack.pop_back();
    const auto& nx = a.node(x);
    const auto& ny = b.node(y);
    if (compare_edges && nx.edge != ny.edge) return false;
    if (nx.left.has_value() != ny.left.has_value()) return false;
    if (nx.right.has_value() != ny.right.has_value()) return false;
    if (nx.left) stack.emplace_back(*nx.left, *ny.left);
    if (nx.right) stack.emplace_back(*nx.right, *ny.right);
  }
  return true;
}

namespace detail {

template <typename P>
std::string unordered_canonical_form(const Trie<P>& t, NodeId id, bool with_edges) {
  const auto& n = t.node(id);
  std::vector<std::string> children;
  for (const auto& c : {n.left, n.right}) {
    if (c) children.push_back(unordered_canonical_form(t, *c, with_edges));
  }
  std::sort(children.begin(), children.end());
  std::string s = "(";
  if (with_edges && n.edge) s.push_back(static_cast<char>('0' + *n.edge));
  for (const auto& c : children) s += c;
  s += ")";
  return s;
}

}  // namespace detail

/// Rooted-tree isomorphism ignoring which side a child hangs on.
template <typename A, typename B>
bool unordered_isomorphic(const Trie<A>& a, const Trie<B>& b, bool compare_edges = true) {
  if (a.size() != b.size()) return false;
  return detail::unordered_canonical_form(a, a.root(), compare_edges) ==
         detail::unordered_canonical_form(b, b.root(), compare_edges);
}

}  // namespace snakeword
