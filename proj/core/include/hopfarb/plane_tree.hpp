#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hopfarb {

// Vertex label. The numeric value is the diagonal Seifert entry of the band.
enum class Sign : std::int8_t { plus = 1, minus = -1 };

constexpr char to_char(Sign s) noexcept { return s == Sign::plus ? '+' : '-'; }
constexpr int to_int(Sign s) noexcept { return static_cast<int>(s); }
constexpr Sign flipped(Sign s) noexcept {
  return s == Sign::plus ? Sign::minus : Sign::plus;
}

// Index of a vertex inside one PlaneTree value.
using Vertex = std::size_t;

// Rooted, ordered tree with every vertex labelled + or -.
//
// Vertices are always numbered in preorder: the root is 0 and the subtree of
// v occupies the contiguous range [v, v + subtree_size(v)). Every operation
// that derives a new tree renumbers its result in preorder, so two equal
// trees have identical vertex numbering.
class PlaneTree {
 public:
  // Raw vertex description accepted by from_records. Indices refer to
  // positions in the records vector, which need not be in preorder.
  struct VertexRecord {
    Sign label = Sign::plus;
    std::optional<Vertex> parent;
    std::vector<Vertex> children;
  };

  // Validates the records (single root, consistent parent/children links,
  // no duplicate children, connected, acyclic, non-empty) and renumbers the
  // result in preorder. Throws DomainError on violation.
  static PlaneTree from_records(const std::vector<VertexRecord>& records);

  static PlaneTree leaf(Sign label);
  static PlaneTree node(Sign label, const std::vector<PlaneTree>& children);

  std::size_t size() const noexcept { return labels_.size(); }
  Vertex root() const noexcept { return 0; }

  Sign label(Vertex v) const { return labels_.at(v); }
  std::optional<Vertex> parent(Vertex v) const;
  std::span<const Vertex> children(Vertex v) const;
  std::size_t child_count(Vertex v) const { return children(v).size(); }
  bool is_leaf(Vertex v) const { return children(v).empty(); }
  std::size_t subtree_size(Vertex v) const { return subtree_sizes_.at(v); }
  std::size_t depth(Vertex v) const;

  // True iff a lies on the path from the root to d (a == d counts).
  bool is_ancestor(Vertex a, Vertex d) const {
    return a <= d && d < a + subtree_size(a);
  }

  // Position of v among the children of its parent.
  std::size_t child_position(Vertex v) const;

  std::span<const Sign> labels() const noexcept { return labels_; }
  bool all_labels_equal() const noexcept;
  std::size_t count_label(Sign s) const noexcept;

  // Copy of the subtree rooted at v.
  PlaneTree subtree(Vertex v) const;

  // Canonical text: Tree := Sign ('(' Tree (',' Tree)* ')')? with no
  // whitespace. Equality of canonical texts is labelled plane isomorphism.
  std::string to_text() const;

  friend bool operator==(const PlaneTree& a, const PlaneTree& b) {
    return a.labels_ == b.labels_ && a.parents_ == b.parents_;
  }

 private:
  PlaneTree() = default;

  // Builds from preorder labels and parents (parents[0] == npos).
  static PlaneTree from_preorder(std::vector<Sign> labels,
                                 std::vector<std::size_t> parents);

  friend PlaneTree remove_vertices(const PlaneTree&, const std::vector<bool>&);

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::vector<Sign> labels_;
  std::vector<std::size_t> parents_;
  std::vector<std::size_t> child_offsets_;  // CSR offsets into child_list_
  std::vector<Vertex> child_list_;
  std::vector<std::size_t> subtree_sizes_;
};

// Parses the tree grammar; whitespace is allowed between tokens.
PlaneTree parse(std::string_view text);

inline std::string to_text(const PlaneTree& t) { return t.to_text(); }

inline bool equal(const PlaneTree& a, const PlaneTree& b) { return a == b; }

// Reduction operations generating the homeomorphic-embedding order.
// Each returns a new tree numbered in preorder.

// Removes leaf v and its parent edge. Throws DomainError if v has children
// or if t is a single vertex.
PlaneTree delete_leaf(const PlaneTree& t, Vertex v);

// Removes a root that has exactly one child and reroots at that child.
PlaneTree strip_root(const PlaneTree& t);

// Replaces the descending path u -> ... -> w by a single edge u -> w. Every
// vertex strictly between u and w must have exactly one child. A path that
// is already an edge leaves t unchanged.
PlaneTree contract_path(const PlaneTree& t, Vertex u, Vertex w);

// Drops every vertex with remove[v] set; each kept vertex is reattached to
// its nearest kept ancestor, children keeping their preorder (plane) order.
// The kept set must have a unique topmost vertex. Throws DomainError
// otherwise.
PlaneTree remove_vertices(const PlaneTree& t, const std::vector<bool>& remove);

}  // namespace hopfarb
