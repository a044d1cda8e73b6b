#include "hopfarb/invariants.hpp"

#include <cstdint>
#include <cstdlib>
#include <limits>
#include <tuple>
#include <vector>

#include <json.hpp>

#include "hopfarb/errors.hpp"

namespace hopfarb {

std::size_t betti(const PlaneTree& t) { return t.size(); }

std::size_t boundary_components(const SeifertMatrix& v) {
  return v.dimension() - rank(v.antisymmetrized()) + 1;
}
std::size_t boundary_components(const PlaneTree& t) {
  return boundary_components(seifert_matrix(t));
}

std::size_t genus(const SeifertMatrix& v) {
  const std::size_t r = rank(v.antisymmetrized());
  if (r % 2 != 0) throw std::logic_error("antisymmetric matrix of odd rank");
  return r / 2;
}
std::size_t genus(const PlaneTree& t) { return genus(seifert_matrix(t)); }

LaurentPolynomial alexander(const SeifertMatrix& v) {
  // det(V - t V^T) has degree at most n; sample it at t = 0..n and
  // interpolate.
  const std::size_t n = v.dimension();
  const IntMatrix& a = v.entries();
  const IntMatrix at = a.transposed();
  std::vector<BigInt> samples;
  samples.reserve(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    samples.push_back(determinant(a - BigInt(k) * at));
  }
  return LaurentPolynomial::interpolate(samples).normalized();
}
LaurentPolynomial alexander(const PlaneTree& t) {
  return alexander(seifert_matrix(t));
}

long signature(const SeifertMatrix& v) {
  return inertia(v.symmetrized()).signature();
}
long signature(const PlaneTree& t) { return signature(seifert_matrix(t)); }

BigInt determinant(const SeifertMatrix& v) {
  return abs(alexander(v).evaluate_at_unit(-1));
}
BigInt determinant(const PlaneTree& t) { return determinant(seifert_matrix(t)); }

std::size_t nullity(const SeifertMatrix& v) {
  return inertia(v.symmetrized()).zero;
}
std::size_t nullity(const PlaneTree& t) { return nullity(seifert_matrix(t)); }

Fingerprint fingerprint(const SeifertMatrix& v) {
  Fingerprint f;
  f.n = v.dimension();
  const std::size_t r = rank(v.antisymmetrized());
  f.b = f.n - r + 1;
  f.g = r / 2;
  f.alexander = alexander(v);
  const Inertia in = inertia(v.symmetrized());
  f.signature = in.signature();
  f.nullity = in.zero;
  f.determinant = abs(f.alexander.evaluate_at_unit(-1));
  return f;
}
Fingerprint fingerprint(const PlaneTree& t) {
  return fingerprint(seifert_matrix(t));
}

bool fingerprint_less(const Fingerprint& a, const Fingerprint& b) {
  const auto key = [](const Fingerprint& f) {
    return std::tie(f.n, f.b, f.g, f.signature, f.determinant, f.nullity);
  };
  if (key(a) != key(b)) return key(a) < key(b);
  const auto& ca = a.alexander.coefficients();
  const auto& cb = b.alexander.coefficients();
  if (a.alexander.lowest_exponent() != b.alexander.lowest_exponent()) {
    return a.alexander.lowest_exponent() < b.alexander.lowest_exponent();
  }
  return ca < cb;
}

namespace {

nlohmann::ordered_json big_to_json(const BigInt& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() &&
      x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

}  // namespace

std::string fingerprint_to_json(const Fingerprint& f) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const auto& c : f.alexander.coefficients()) coeffs.push_back(big_to_json(c));
  nlohmann::ordered_json j;
  j["n"] = f.n;
  j["b"] = f.b;
  j["g"] = f.g;
  j["alexander"] = {{"lowest", f.alexander.lowest_exponent()},
                    {"coeffs", std::move(coeffs)}};
  j["sigma"] = f.signature;
  j["det"] = f.determinant.str();
  j["nullity"] = f.nullity;
  return j.dump();
}

std::string fingerprint_to_text(const Fingerprint& f) {
  std::string out;
  out += "n: " + std::to_string(f.n) + "\n";
  out += "b: " + std::to_string(f.b) + "\n";
  out += "g: " + std::to_string(f.g) + "\n";
  out += "alexander: " + f.alexander.to_string() + "\n";
  out += "sigma: " + std::to_string(f.signature) + "\n";
  out += "det: " + f.determinant.str() + "\n";
  out += "nullity: " + std::to_string(f.nullity) + "\n";
  return out;
}

long top_defect_upper_bound(const PlaneTree& t) {
  const SeifertMatrix v = seifert_matrix(t);
  if (boundary_components(v) != 1) throw DomainError("not a knot");
  const long sigma = signature(v);
  return static_cast<long>(genus(v)) - std::abs(sigma) / 2;
}

bool smooth_defect_guarantee(const PlaneTree& t) { return t.all_labels_equal(); }

}  // namespace hopfarb
