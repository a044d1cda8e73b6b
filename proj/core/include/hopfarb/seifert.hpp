#pragma once

#include <cstddef>
#include <span>

#include "hopfarb/exact_linalg.hpp"
#include "hopfarb/plane_tree.hpp"

namespace hopfarb {

// Linking form of the core curves of the plumbed surface, rows and columns
// indexed by the preorder vertices of the source tree.
class SeifertMatrix {
 public:
  explicit SeifertMatrix(IntMatrix entries);

  std::size_t dimension() const noexcept { return entries_.rows(); }
  const IntMatrix& entries() const noexcept { return entries_; }
  long entry(std::size_t r, std::size_t c) const {
    return static_cast<long>(entries_(r, c));
  }

  // V - V^T and V + V^T.
  IntMatrix antisymmetrized() const;
  IntMatrix symmetrized() const;

  // D V D for the diagonal sign matrix D = diag(signs). This is a change of
  // basis reversing the orientation of some core curves.
  SeifertMatrix flipped_by(std::span<const int> signs) const;

  friend bool operator==(const SeifertMatrix&, const SeifertMatrix&) = default;

 private:
  IntMatrix entries_;
};

// Diagonal V[v][v] = label(v); for every edge parent u -> child v,
// V[u][v] = 1 and V[v][u] = 0; all other entries 0.
SeifertMatrix seifert_matrix(const PlaneTree& t);

// Structural checks against the source tree: diagonal equals labels,
// off-diagonal support lies on tree edges with exactly one of each symmetric
// pair equal to +-1, and V - V^T has even rank.
bool has_plumbing_structure(const SeifertMatrix& v, const PlaneTree& t);

}  // namespace hopfarb
