#include "hopfarb/seifert.hpp"

#include <cstdlib>

#include "hopfarb/errors.hpp"

namespace hopfarb {

SeifertMatrix::SeifertMatrix(IntMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.square()) throw DomainError("Seifert matrix must be square");
}

IntMatrix SeifertMatrix::antisymmetrized() const {
  return entries_ - entries_.transposed();
}

IntMatrix SeifertMatrix::symmetrized() const {
  return entries_ + entries_.transposed();
}

SeifertMatrix SeifertMatrix::flipped_by(std::span<const int> signs) const {
  const std::size_t n = dimension();
  if (signs.size() != n) throw DomainError("sign vector has wrong length");
  IntMatrix out = entries_;
  for (std::size_t r = 0; r < n; ++r) {
    if (signs[r] != 1 && signs[r] != -1) throw DomainError("signs must be +-1");
    for (std::size_t c = 0; c < n; ++c) out(r, c) *= signs[r] * signs[c];
  }
  return SeifertMatrix(std::move(out));
}

SeifertMatrix seifert_matrix(const PlaneTree& t) {
  const std::size_t n = t.size();
  IntMatrix v(n, n);
  for (Vertex x = 0; x < n; ++x) {
    v(x, x) = to_int(t.label(x));
    if (const auto p = t.parent(x)) v(*p, x) = 1;
  }
  return SeifertMatrix(std::move(v));
}

bool has_plumbing_structure(const SeifertMatrix& v, const PlaneTree& t) {
  const std::size_t n = t.size();
  if (v.dimension() != n) return false;
  for (Vertex x = 0; x < n; ++x) {
    if (v.entry(x, x) != to_int(t.label(x))) return false;
  }
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      const long ab = v.entry(a, b);
      const long ba = v.entry(b, a);
      const bool edge = t.parent(b) == a;
      if (!edge) {
        if (ab != 0 || ba != 0) return false;
        continue;
      }
      const bool one_unit = (std::abs(ab) == 1 && ba == 0) ||
                            (std::abs(ba) == 1 && ab == 0);
      if (!one_unit) return false;
    }
  }
  return rank(v.antisymmetrized()) % 2 == 0;
}

}  // namespace hopfarb
