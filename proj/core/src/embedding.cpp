#include "hopfarb/embedding.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include <json.hpp>

#include "hopfarb/errors.hpp"

namespace hopfarb {

namespace {

// Dense tables over (sub vertex, super vertex).
//   embed(u, v): u can be placed at v with its whole subtree below it.
//   reach(u, c): embed(u, y) for some y in the subtree of c.
class EmbeddingTable {
 public:
  EmbeddingTable(const PlaneTree& sub, const PlaneTree& super)
      : sub_(sub), super_(super), cols_(super.size()),
        embed_(sub.size() * cols_, 0), reach_(sub.size() * cols_, 0) {
    // Preorder numbering: children have larger indices than their parent,
    // so a reverse sweep over super sees every child column first.
    for (Vertex v = super.size(); v-- > 0;) {
      for (Vertex u = 0; u < sub.size(); ++u) {
        const bool e = label_reduces_to(sub.label(u), super.label(v)) &&
                       match_children(u, v, nullptr);
        bool r = e;
        for (Vertex c : super.children(v)) r = r || reach(u, c);
        embed_[u * cols_ + v] = e;
        reach_[u * cols_ + v] = r;
      }
    }
  }

  bool embed(Vertex u, Vertex v) const { return embed_[u * cols_ + v] != 0; }
  bool reach(Vertex u, Vertex v) const { return reach_[u * cols_ + v] != 0; }

  // Order-preserving assignment of the children of u to distinct child
  // subtrees of v. Greedy leftmost choice is optimal for subsequence
  // matching. If out is given, receives the chosen child of v per child of u.
  bool match_children(Vertex u, Vertex v, std::vector<Vertex>* out) const {
    const auto want = sub_.children(u);
    const auto have = super_.children(v);
    if (want.size() > have.size()) return false;
    std::size_t j = 0;
    for (Vertex x : want) {
      while (j < have.size() && !reach(x, have[j])) ++j;
      if (j == have.size()) return false;
      if (out) out->push_back(have[j]);
      ++j;
    }
    return true;
  }

 private:
  const PlaneTree& sub_;
  const PlaneTree& super_;
  std::size_t cols_;
  std::vector<char> embed_;
  std::vector<char> reach_;
};

bool quick_reject(const PlaneTree& sub, const PlaneTree& super) {
  return sub.size() > super.size() ||
         sub.count_label(Sign::plus) > super.count_label(Sign::plus) ||
         sub.count_label(Sign::minus) > super.count_label(Sign::minus);
}

}  // namespace

bool embeds(const PlaneTree& sub, const PlaneTree& super) {
  if (quick_reject(sub, super)) return false;
  const EmbeddingTable table(sub, super);
  return table.reach(sub.root(), super.root());
}

std::optional<EmbeddingWitness> embed_witness(const PlaneTree& sub,
                                              const PlaneTree& super) {
  if (quick_reject(sub, super)) return std::nullopt;
  const EmbeddingTable table(sub, super);
  if (!table.reach(sub.root(), super.root())) return std::nullopt;

  EmbeddingWitness w;
  w.vertex_map.assign(sub.size(), 0);
  w.edge_paths.assign(sub.size() - 1, {});

  auto first_in_subtree = [&](Vertex x, Vertex c) {
    for (Vertex y = c; y < c + super.subtree_size(c); ++y) {
      if (table.embed(x, y)) return y;
    }
    throw std::logic_error("reach table inconsistent");
  };

  std::function<void(Vertex, Vertex)> place = [&](Vertex u, Vertex v) {
    w.vertex_map[u] = v;
    std::vector<Vertex> slots;
    table.match_children(u, v, &slots);
    const auto kids = sub.children(u);
    for (std::size_t i = 0; i < kids.size(); ++i) {
      const Vertex y = first_in_subtree(kids[i], slots[i]);
      std::vector<Vertex> path;
      for (Vertex z = y; z != v; z = *super.parent(z)) path.push_back(z);
      path.push_back(v);
      std::reverse(path.begin(), path.end());
      w.edge_paths[kids[i] - 1] = std::move(path);
      place(kids[i], y);
    }
  };
  place(sub.root(), first_in_subtree(sub.root(), super.root()));
  return w;
}

bool verify_witness(const PlaneTree& sub, const PlaneTree& super,
                    const EmbeddingWitness& w) {
  const std::size_t n1 = sub.size();
  const std::size_t n2 = super.size();
  if (w.vertex_map.size() != n1 || w.edge_paths.size() != n1 - 1) return false;

  std::vector<char> used(n2, 0);
  for (Vertex x = 0; x < n1; ++x) {
    const Vertex y = w.vertex_map[x];
    if (y >= n2 || used[y]) return false;
    if (!label_reduces_to(sub.label(x), super.label(y))) return false;
    used[y] = 1;
  }

  for (Vertex x = 1; x < n1; ++x) {
    const auto& path = w.edge_paths[x - 1];
    if (path.size() < 2) return false;
    if (path.front() != w.vertex_map[*sub.parent(x)] ||
        path.back() != w.vertex_map[x]) {
      return false;
    }
    for (std::size_t k = 0; k + 1 < path.size(); ++k) {
      if (path[k + 1] >= n2 || super.parent(path[k + 1]) != path[k]) {
        return false;
      }
    }
    for (std::size_t k = 1; k + 1 < path.size(); ++k) {
      if (used[path[k]]) return false;
      used[path[k]] = 1;
    }
  }

  // Plane order: the first steps out of each mapped vertex must visit its
  // children from left to right.
  for (Vertex u = 0; u < n1; ++u) {
    std::size_t last = 0;
    bool first = true;
    for (Vertex x : sub.children(u)) {
      const std::size_t pos = super.child_position(w.edge_paths[x - 1][1]);
      if (!first && pos <= last) return false;
      last = pos;
      first = false;
    }
  }
  return true;
}

std::string witness_to_json(const EmbeddingWitness& w) {
  nlohmann::ordered_json map = nlohmann::ordered_json::array();
  for (std::size_t x = 0; x < w.vertex_map.size(); ++x) {
    map.push_back({x, w.vertex_map[x]});
  }
  nlohmann::ordered_json paths = nlohmann::ordered_json::array();
  for (const auto& p : w.edge_paths) paths.push_back(p);
  nlohmann::ordered_json j;
  j["vertex_map"] = std::move(map);
  j["edge_paths"] = std::move(paths);
  return j.dump();
}

EmbeddingWitness witness_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError("invalid JSON", e.byte == 0 ? 0 : e.byte - 1);
  }
  try {
    EmbeddingWitness w;
    const auto& pairs = j.at("vertex_map");
    w.vertex_map.assign(pairs.size(), 0);
    std::vector<char> seen(pairs.size(), 0);
    for (const auto& p : pairs) {
      const auto x = p.at(0).get<std::size_t>();
      if (p.size() != 2 || x >= pairs.size() || seen[x]) {
        throw DomainError("vertex_map must list each source vertex once");
      }
      seen[x] = 1;
      w.vertex_map[x] = p.at(1).get<std::size_t>();
    }
    w.edge_paths = j.at("edge_paths").get<std::vector<std::vector<Vertex>>>();
    return w;
  } catch (const nlohmann::json::exception& e) {
    throw DomainError(std::string("malformed witness: ") + e.what());
  }
}

std::set<std::string> minor_closure(const PlaneTree& t, std::size_t max_size) {
  if (t.size() > max_size) {
    throw GuardError("oracle size guard: tree has " + std::to_string(t.size()) +
                     " vertices, limit is " + std::to_string(max_size));
  }
  std::set<std::string> seen{t.to_text()};
  std::deque<PlaneTree> queue{t};
  auto visit = [&](PlaneTree next) {
    if (seen.insert(next.to_text()).second) queue.push_back(std::move(next));
  };
  while (!queue.empty()) {
    const PlaneTree cur = std::move(queue.front());
    queue.pop_front();
    const std::size_t n = cur.size();
    for (Vertex v = 0; v < n; ++v) {
      if (n > 1 && cur.is_leaf(v)) visit(delete_leaf(cur, v));
    }
    if (cur.child_count(cur.root()) == 1) visit(strip_root(cur));
    // Every path u -> ... -> w whose interior vertices have one child each.
    for (Vertex w = 1; w < n; ++w) {
      Vertex x = *cur.parent(w);
      while (cur.child_count(x) == 1 && cur.parent(x)) {
        const Vertex u = *cur.parent(x);
        visit(contract_path(cur, u, w));
        x = u;
      }
    }
  }
  return seen;
}

bool oracle_embeds(const PlaneTree& sub, const PlaneTree& super,
                   std::size_t max_size) {
  const auto closure = minor_closure(super, max_size);
  return closure.count(sub.to_text()) != 0;
}

}  // namespace hopfarb
