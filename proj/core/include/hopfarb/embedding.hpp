#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "hopfarb/plane_tree.hpp"

namespace hopfarb {

// Label order used when matching vertices. The sign alphabet carries the
// empty order, so a label only reduces to itself; an ordered alphabet would
// change this predicate and nothing else.
constexpr bool label_reduces_to(Sign from, Sign to) noexcept {
  return from == to;
}

// Certificate that `sub` embeds homeomorphically into `super`.
//
// vertex_map[x] is the image in `super` of vertex x of `sub`. edge_paths has
// one entry per edge of `sub`, ordered by the preorder index of the child
// endpoint: edge_paths[x - 1] is the descending vertex path in `super` from
// vertex_map[parent(x)] to vertex_map[x], endpoints included.
struct EmbeddingWitness {
  std::vector<Vertex> vertex_map;
  std::vector<std::vector<Vertex>> edge_paths;

  friend bool operator==(const EmbeddingWitness&,
                         const EmbeddingWitness&) = default;
};

// True iff `sub` can be obtained from `super` by deleting leaves, stripping
// single-child roots and contracting single-child paths into edges.
bool embeds(const PlaneTree& sub, const PlaneTree& super);

// Deterministic witness: the root goes to the preorder-first admissible
// vertex, children are matched to the leftmost admissible child subtrees and
// land on the preorder-first admissible vertex inside them.
std::optional<EmbeddingWitness> embed_witness(const PlaneTree& sub,
                                              const PlaneTree& super);

// Checks every witness invariant: injective label-preserving map, strictly
// descending paths with matching endpoints, internally disjoint paths that
// avoid mapped vertices, and plane order of children preserved.
bool verify_witness(const PlaneTree& sub, const PlaneTree& super,
                    const EmbeddingWitness& w);

// {"vertex_map": [[i, j], ...], "edge_paths": [[u, ..., v], ...]}
std::string witness_to_json(const EmbeddingWitness& w);
// Throws ParseError / DomainError on malformed input.
EmbeddingWitness witness_from_json(std::string_view json);

inline constexpr std::size_t kDefaultOracleMaxSize = 8;

// Canonical texts of every tree reachable from t by the reduction operations,
// t included. Breadth-first with memoization on canonical text. Throws
// GuardError if t is larger than max_size.
std::set<std::string> minor_closure(const PlaneTree& t,
                                    std::size_t max_size = kDefaultOracleMaxSize);

// Brute-force decision of the embedding relation through minor_closure.
bool oracle_embeds(const PlaneTree& sub, const PlaneTree& super,
                   std::size_t max_size = kDefaultOracleMaxSize);

}  // namespace hopfarb
