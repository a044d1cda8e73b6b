#pragma once

#include <cstddef>
#include <string>

#include "hopfarb/exact_linalg.hpp"
#include "hopfarb/laurent_polynomial.hpp"
#include "hopfarb/plane_tree.hpp"
#include "hopfarb/seifert.hpp"

namespace hopfarb {

// Invariants of the boundary link of the plumbed surface. Every quantity is
// exact; nothing goes through floating point.
//
// Each function has an overload on a Seifert matrix so that the same
// computation can be run on any congruent basis of the surface.

// Number of plumbed bands, i.e. the first Betti number of the surface.
std::size_t betti(const PlaneTree& t);

// n - rank(V - V^T) + 1, from chi = 1 - n = 2 - 2g - b.
std::size_t boundary_components(const PlaneTree& t);
std::size_t boundary_components(const SeifertMatrix& v);

// rank(V - V^T) / 2. The surface is a fibre, so this is the genus of the link.
std::size_t genus(const PlaneTree& t);
std::size_t genus(const SeifertMatrix& v);

// det(V - t V^T), normalized to lowest exponent 0 and positive leading
// coefficient.
LaurentPolynomial alexander(const PlaneTree& t);
LaurentPolynomial alexander(const SeifertMatrix& v);

long signature(const PlaneTree& t);
long signature(const SeifertMatrix& v);

// |Delta(-1)|.
BigInt determinant(const PlaneTree& t);
BigInt determinant(const SeifertMatrix& v);

std::size_t nullity(const PlaneTree& t);
std::size_t nullity(const SeifertMatrix& v);

struct Fingerprint {
  std::size_t n = 0;
  std::size_t b = 0;
  std::size_t g = 0;
  LaurentPolynomial alexander;
  long signature = 0;
  BigInt determinant = 0;
  std::size_t nullity = 0;

  friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const PlaneTree& t);
Fingerprint fingerprint(const SeifertMatrix& v);

// Strict weak order used to group trees by fingerprint deterministically.
bool fingerprint_less(const Fingerprint& a, const Fingerprint& b);

// {"n":..,"b":..,"g":..,"alexander":{"lowest":0,"coeffs":[..]},"sigma":..,
//  "det":"<decimal>","nullity":..}
std::string fingerprint_to_json(const Fingerprint& f);
// One "key: value" per line.
std::string fingerprint_to_text(const Fingerprint& f);

// g - |sigma| / 2 for a knot, an upper bound on the topological genus
// defect since the topological 4-genus is at least |sigma| / 2. Throws
// DomainError ("not a knot") when the boundary has more than one component.
long top_defect_upper_bound(const PlaneTree& t);

// True iff all labels agree. Such a surface is (the mirror of) a positive
// plumbing, where smooth 4-genus and genus coincide, so the smooth defect is
// 0. False carries no information.
bool smooth_defect_guarantee(const PlaneTree& t);

}  // namespace hopfarb
