#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hopfarb/plane_tree.hpp"

namespace hopfarb {

using BigInt = boost::multiprecision::cpp_int;

// Number of ordered tree shapes with n vertices, Catalan(n - 1).
BigInt shape_count(std::size_t n);

// Number of labelled plane trees with n vertices: 2^n * Catalan(n - 1).
// Throws DomainError for n == 0.
BigInt count(std::size_t n);

// The labelled plane trees with exactly n vertices, in a fixed order.
//
// Shapes are ordered by their balanced-parenthesis word in lexicographic
// order with '(' < ')'. The word of a tree is produced by a preorder walk
// that writes '(' when descending into a child and ')' when returning, so
// the path "(())" precedes the cherry "()()". Within a shape the labels,
// read in preorder, are ordered lexicographically with '+' < '-'.
//
// The sequence is random access (at() unranks directly), so callers can
// split [0, size()) across workers and restart anywhere.
class TreeEnumeration {
 public:
  explicit TreeEnumeration(std::size_t n);

  std::size_t vertex_count() const noexcept { return n_; }

  // Throws GuardError if the count does not fit in 64 bits.
  std::uint64_t size() const;

  PlaneTree at(const BigInt& rank) const;
  PlaneTree at(std::uint64_t rank) const { return at(BigInt(rank)); }

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = PlaneTree;
    using difference_type = std::ptrdiff_t;

    iterator(const TreeEnumeration* seq, std::uint64_t rank)
        : seq_(seq), rank_(rank) {}
    PlaneTree operator*() const { return seq_->at(rank_); }
    iterator& operator++() {
      ++rank_;
      return *this;
    }
    bool operator==(const iterator& o) const { return rank_ == o.rank_; }

   private:
    const TreeEnumeration* seq_;
    std::uint64_t rank_;
  };

  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, size()}; }

 private:
  std::size_t n_;
  // completions_[pos][depth]: number of ways to finish a Dyck word of length
  // 2(n-1) from position pos at nesting depth depth.
  std::vector<std::vector<BigInt>> completions_;
};

// All trees with n vertices in TreeEnumeration order. Throws DomainError for
// n == 0.
std::vector<PlaneTree> enumerate(std::size_t n);

// Uniform draw from enumerate(n), a deterministic function of seed.
PlaneTree random_tree(std::size_t n, std::uint64_t seed);

}  // namespace hopfarb
