#include "hopfarb/plane_tree.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <string>
#include <utility>

#include "hopfarb/errors.hpp"

namespace hopfarb {

PlaneTree PlaneTree::from_preorder(std::vector<Sign> labels,
                                   std::vector<std::size_t> parents) {
  PlaneTree t;
  const std::size_t n = labels.size();
  t.labels_ = std::move(labels);
  t.parents_ = std::move(parents);

  std::vector<std::size_t> degree(n, 0);
  for (std::size_t v = 1; v < n; ++v) ++degree[t.parents_[v]];
  t.child_offsets_.assign(n + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    t.child_offsets_[v + 1] = t.child_offsets_[v] + degree[v];
  }
  t.child_list_.resize(n == 0 ? 0 : n - 1);
  std::vector<std::size_t> fill(t.child_offsets_.begin(),
                                t.child_offsets_.end() - 1);
  // Preorder numbering means children appear in increasing index order.
  for (std::size_t v = 1; v < n; ++v) {
    t.child_list_[fill[t.parents_[v]]++] = v;
  }

  t.subtree_sizes_.assign(n, 1);
  for (std::size_t v = n; v-- > 1;) {
    t.subtree_sizes_[t.parents_[v]] += t.subtree_sizes_[v];
  }
  return t;
}

PlaneTree PlaneTree::from_records(const std::vector<VertexRecord>& records) {
  const std::size_t n = records.size();
  if (n == 0) throw DomainError("empty tree is not representable");

  std::optional<Vertex> root;
  for (Vertex v = 0; v < n; ++v) {
    const auto& rec = records[v];
    if (!rec.parent) {
      if (root) throw DomainError("more than one vertex without a parent");
      root = v;
    } else if (*rec.parent >= n) {
      throw DomainError("parent index out of range at vertex " +
                        std::to_string(v));
    }
  }
  if (!root) throw DomainError("no root: every vertex has a parent");

  std::vector<int> seen_as_child(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex c : records[v].children) {
      if (c >= n) {
        throw DomainError("child index out of range at vertex " +
                          std::to_string(v));
      }
      if (seen_as_child[c]++ != 0) {
        throw DomainError("vertex " + std::to_string(c) +
                          " listed as a child more than once");
      }
      if (records[c].parent != v) {
        throw DomainError("parent of vertex " + std::to_string(c) +
                          " disagrees with children list of " +
                          std::to_string(v));
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (v != *root && seen_as_child[v] == 0) {
      throw DomainError("vertex " + std::to_string(v) +
                        " is missing from its parent's children");
    }
  }

  // Every non-root vertex has exactly one parent, so a walk from the root
  // reaching all n vertices proves the structure is a tree.
  std::vector<Sign> labels;
  std::vector<std::size_t> parents;
  labels.reserve(n);
  parents.reserve(n);
  std::vector<std::pair<Vertex, std::size_t>> stack{{*root, npos}};
  std::vector<char> visited(n, 0);
  while (!stack.empty()) {
    auto [v, new_parent] = stack.back();
    stack.pop_back();
    if (visited[v]) throw DomainError("cycle detected");
    visited[v] = 1;
    const std::size_t id = labels.size();
    labels.push_back(records[v].label);
    parents.push_back(new_parent);
    const auto& ch = records[v].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.emplace_back(*it, id);
  }
  if (labels.size() != n) throw DomainError("structure is not connected");
  return from_preorder(std::move(labels), std::move(parents));
}

PlaneTree PlaneTree::leaf(Sign label) { return from_preorder({label}, {npos}); }

PlaneTree PlaneTree::node(Sign label, const std::vector<PlaneTree>& children) {
  std::vector<Sign> labels{label};
  std::vector<std::size_t> parents{npos};
  for (const auto& c : children) {
    const std::size_t base = labels.size();
    for (std::size_t v = 0; v < c.size(); ++v) {
      labels.push_back(c.labels_[v]);
      parents.push_back(v == 0 ? 0 : base + c.parents_[v]);
    }
  }
  return from_preorder(std::move(labels), std::move(parents));
}

std::optional<Vertex> PlaneTree::parent(Vertex v) const {
  const std::size_t p = parents_.at(v);
  if (p == npos) return std::nullopt;
  return p;
}

std::span<const Vertex> PlaneTree::children(Vertex v) const {
  const std::size_t begin = child_offsets_.at(v);
  const std::size_t end = child_offsets_.at(v + 1);
  return std::span<const Vertex>(child_list_).subspan(begin, end - begin);
}

std::size_t PlaneTree::depth(Vertex v) const {
  std::size_t d = 0;
  for (std::size_t p = parents_.at(v); p != npos; p = parents_[p]) ++d;
  return d;
}

std::size_t PlaneTree::child_position(Vertex v) const {
  const auto p = parent(v);
  if (!p) throw DomainError("root has no child position");
  const auto ch = children(*p);
  return static_cast<std::size_t>(std::find(ch.begin(), ch.end(), v) -
                                  ch.begin());
}

bool PlaneTree::all_labels_equal() const noexcept {
  return std::all_of(labels_.begin(), labels_.end(),
                     [&](Sign s) { return s == labels_.front(); });
}

std::size_t PlaneTree::count_label(Sign s) const noexcept {
  return static_cast<std::size_t>(std::count(labels_.begin(), labels_.end(), s));
}

PlaneTree PlaneTree::subtree(Vertex v) const {
  const std::size_t len = subtree_size(v);
  std::vector<Sign> labels(labels_.begin() + static_cast<std::ptrdiff_t>(v),
                           labels_.begin() + static_cast<std::ptrdiff_t>(v + len));
  std::vector<std::size_t> parents(len, npos);
  for (std::size_t i = 1; i < len; ++i) parents[i] = parents_[v + i] - v;
  return from_preorder(std::move(labels), std::move(parents));
}

std::string PlaneTree::to_text() const {
  std::string out;
  out.reserve(4 * size());
  std::function<void(Vertex)> emit = [&](Vertex v) {
    out.push_back(to_char(labels_[v]));
    const auto ch = children(v);
    if (ch.empty()) return;
    out.push_back('(');
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (i) out.push_back(',');
      emit(ch[i]);
    }
    out.push_back(')');
  };
  emit(root());
  return out;
}

namespace {

class TreeParser {
 public:
  explicit TreeParser(std::string_view text) : text_(text) {}

  PlaneTree run() {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("empty input", pos_);
    tree(std::nullopt);
    skip_ws();
    if (pos_ != text_.size()) {
      throw ParseError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    }
    return PlaneTree::from_records(records_);
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
  }

  Vertex tree(std::optional<Vertex> parent) {
    skip_ws();
    if (pos_ == text_.size()) throw ParseError("expected '+' or '-'", pos_);
    const char c = text_[pos_];
    if (c != '+' && c != '-') {
      throw ParseError(std::string("expected '+' or '-', found '") + c + "'",
                       pos_);
    }
    ++pos_;
    const Vertex id = records_.size();
    records_.push_back({c == '+' ? Sign::plus : Sign::minus, parent, {}});

    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '(') {
      ++pos_;
      while (true) {
        const Vertex child = tree(id);
        records_[id].children.push_back(child);
        skip_ws();
        if (pos_ == text_.size()) throw ParseError("expected ',' or ')'", pos_);
        if (text_[pos_] == ',') {
          ++pos_;
          continue;
        }
        if (text_[pos_] == ')') {
          ++pos_;
          break;
        }
        throw ParseError(
            std::string("expected ',' or ')', found '") + text_[pos_] + "'",
            pos_);
      }
    }
    return id;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::vector<PlaneTree::VertexRecord> records_;
};

}  // namespace

PlaneTree parse(std::string_view text) { return TreeParser(text).run(); }

PlaneTree remove_vertices(const PlaneTree& t, const std::vector<bool>& remove) {
  const std::size_t n = t.size();
  if (remove.size() != n) throw DomainError("removal mask has wrong length");

  std::vector<std::size_t> new_id(n, PlaneTree::npos);
  std::vector<Sign> labels;
  std::vector<std::size_t> parents;
  for (Vertex v = 0; v < n; ++v) {
    if (remove[v]) continue;
    std::size_t p = t.parents_[v];
    while (p != PlaneTree::npos && remove[p]) p = t.parents_[p];
    if (p == PlaneTree::npos && !labels.empty()) {
      throw DomainError("removal leaves a forest");
    }
    new_id[v] = labels.size();
    labels.push_back(t.labels_[v]);
    parents.push_back(p == PlaneTree::npos ? PlaneTree::npos : new_id[p]);
  }
  if (labels.empty()) throw DomainError("removal leaves the empty tree");
  return PlaneTree::from_preorder(std::move(labels), std::move(parents));
}

PlaneTree delete_leaf(const PlaneTree& t, Vertex v) {
  if (v >= t.size()) throw DomainError("vertex index out of range");
  if (!t.is_leaf(v)) {
    throw DomainError("vertex " + std::to_string(v) + " is not a leaf");
  }
  if (t.size() == 1) throw DomainError("cannot delete the only vertex");
  std::vector<bool> mask(t.size(), false);
  mask[v] = true;
  return remove_vertices(t, mask);
}

PlaneTree strip_root(const PlaneTree& t) {
  const std::size_t k = t.child_count(t.root());
  if (k != 1) {
    throw DomainError("root has " + std::to_string(k) +
                      " children; exactly one required");
  }
  return t.subtree(t.children(t.root())[0]);
}

PlaneTree contract_path(const PlaneTree& t, Vertex u, Vertex w) {
  if (u >= t.size() || w >= t.size()) {
    throw DomainError("vertex index out of range");
  }
  if (u == w || !t.is_ancestor(u, w)) {
    throw DomainError("vertex " + std::to_string(w) +
                      " is not a strict descendant of " + std::to_string(u));
  }
  std::vector<bool> mask(t.size(), false);
  for (Vertex x = *t.parent(w); x != u; x = *t.parent(x)) {
    if (t.child_count(x) != 1) {
      throw DomainError("interior vertex " + std::to_string(x) + " has " +
                        std::to_string(t.child_count(x)) +
                        " children; exactly one required");
    }
    mask[x] = true;
  }
  return remove_vertices(t, mask);
}

}  // namespace hopfarb
