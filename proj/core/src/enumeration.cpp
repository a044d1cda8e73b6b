#include "hopfarb/enumeration.hpp"

#include <limits>
#include <random>
#include <string>

#include "hopfarb/errors.hpp"

namespace hopfarb {

namespace {

void require_positive(std::size_t n) {
  if (n == 0) throw DomainError("tree size must be at least 1");
}

}  // namespace

BigInt shape_count(std::size_t n) {
  require_positive(n);
  // Catalan(m) by the product recurrence C(k+1) = C(k) * 2(2k+1) / (k+2).
  const std::size_t m = n - 1;
  BigInt c = 1;
  for (std::size_t k = 0; k < m; ++k) {
    c = c * 2 * (2 * k + 1) / (k + 2);
  }
  return c;
}

BigInt count(std::size_t n) {
  require_positive(n);
  return shape_count(n) << n;
}

TreeEnumeration::TreeEnumeration(std::size_t n) : n_(n) {
  require_positive(n);
  const std::size_t len = 2 * (n - 1);
  completions_.assign(len + 1, std::vector<BigInt>(n, 0));
  completions_[len][0] = 1;
  for (std::size_t pos = len; pos-- > 0;) {
    const std::size_t remaining = len - pos;
    for (std::size_t d = 0; d < n && d <= remaining; ++d) {
      BigInt ways = 0;
      if (d + 1 < n) ways += completions_[pos + 1][d + 1];
      if (d > 0) ways += completions_[pos + 1][d - 1];
      completions_[pos][d] = ways;
    }
  }
}

std::uint64_t TreeEnumeration::size() const {
  const BigInt c = count(n_);
  if (c > std::numeric_limits<std::uint64_t>::max()) {
    throw GuardError("enumeration of size " + std::to_string(n_) +
                     " exceeds 64-bit indexing");
  }
  return static_cast<std::uint64_t>(c);
}

PlaneTree TreeEnumeration::at(const BigInt& rank) const {
  if (rank < 0 || rank >= count(n_)) {
    throw DomainError("enumeration rank out of range");
  }
  const BigInt label_space = BigInt(1) << n_;
  BigInt shape_rank = rank / label_space;
  const BigInt label_rank = rank % label_space;

  std::vector<PlaneTree::VertexRecord> records(n_);
  const std::size_t len = 2 * (n_ - 1);
  Vertex current = 0;
  Vertex next = 1;
  std::size_t depth = 0;
  for (std::size_t pos = 0; pos < len; ++pos) {
    const BigInt open_ways =
        depth + 1 < n_ ? completions_[pos + 1][depth + 1] : BigInt(0);
    if (shape_rank < open_ways) {
      records[current].children.push_back(next);
      records[next].parent = current;
      current = next++;
      ++depth;
    } else {
      shape_rank -= open_ways;
      current = *records[current].parent;
      --depth;
    }
  }
  // Vertex creation order above is preorder; the first vertex carries the
  // most significant label bit.
  for (std::size_t v = 0; v < n_; ++v) {
    const bool minus = bit_test(label_rank, static_cast<unsigned>(n_ - 1 - v));
    records[v].label = minus ? Sign::minus : Sign::plus;
  }
  return PlaneTree::from_records(records);
}

std::vector<PlaneTree> enumerate(std::size_t n) {
  const TreeEnumeration seq(n);
  std::vector<PlaneTree> out;
  out.reserve(seq.size());
  for (auto t : seq) out.push_back(std::move(t));
  return out;
}

PlaneTree random_tree(std::size_t n, std::uint64_t seed) {
  const TreeEnumeration seq(n);
  const BigInt bound = count(n);
  const unsigned bits = msb(bound) + 1;
  std::mt19937_64 rng(seed);
  // Rejection sampling on the smallest power of two covering the range; the
  // raw engine output is portable, unlike std::uniform_int_distribution.
  while (true) {
    BigInt r = 0;
    for (unsigned have = 0; have < bits; have += 64) {
      r = (r << 64) | BigInt(rng());
    }
    r &= (BigInt(1) << bits) - 1;
    if (r < bound) return seq.at(r);
  }
}

}  // namespace hopfarb
