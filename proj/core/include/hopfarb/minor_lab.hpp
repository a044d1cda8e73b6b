#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfarb/plane_tree.hpp"

namespace hopfarb {

inline constexpr std::size_t kDefaultUniverseGuard = 6;

struct SweepOptions {
  unsigned jobs = 1;
  // Largest universe the quadratic sweeps accept.
  std::size_t max_universe = kDefaultUniverseGuard;
};

// Every labelled plane tree with at most max_size() vertices: enumerate(1),
// then enumerate(2), ..., concatenated.
class Universe {
 public:
  explicit Universe(std::size_t nmax);

  std::size_t max_size() const noexcept { return nmax_; }
  std::size_t size() const noexcept { return trees_.size(); }
  const std::vector<PlaneTree>& trees() const noexcept { return trees_; }
  const PlaneTree& operator[](std::size_t i) const { return trees_.at(i); }
  const std::string& text(std::size_t i) const { return texts_.at(i); }

  // Index range [begin, end) of the trees with exactly k vertices.
  std::pair<std::size_t, std::size_t> size_range(std::size_t k) const;
  std::optional<std::size_t> index_of(std::string_view canonical_text) const;

 private:
  std::size_t nmax_;
  std::vector<PlaneTree> trees_;
  std::vector<std::string> texts_;
  std::vector<std::size_t> offsets_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Throws DomainError for nmax < 1.
Universe universe(std::size_t nmax);

struct PosetReport {
  struct SizeStats {
    std::size_t size = 0;
    std::size_t trees = 0;
    // Pairs whose larger tree has this size.
    std::size_t relation_pairs = 0;
    std::size_t hasse_pairs = 0;
  };

  // (i, j) with trees[i] embedding into trees[j], i != j; sorted.
  std::vector<std::pair<std::size_t, std::size_t>> relation_pairs;
  // Transitive reduction of relation_pairs; sorted.
  std::vector<std::pair<std::size_t, std::size_t>> hasse_pairs;
  std::vector<SizeStats> stats;
};

// Throws GuardError when u.max_size() exceeds opts.max_universe.
PosetReport poset(const Universe& u, const SweepOptions& opts = {});

// Vertices are canonical texts, edges are Hasse pairs.
std::string poset_to_dot(const Universe& u, const PosetReport& report);
// One "i,j" line per relation pair.
std::string poset_to_csv(const PosetReport& report);

// Minor-monotone property from the registry. Names: size_le, genus_le,
// all_positive, sig_abs_le, det_le, top_defect_ub_le (knots only).
struct Predicate {
  std::string name;
  std::vector<long> params;
  bool knots_only = false;
};

// "NAME" or "NAME:K". Throws DomainError on an unknown name or bad arity.
Predicate parse_predicate(std::string_view spec);
std::string to_string(const Predicate& p);

// Whether t lies in the declared domain of p.
bool in_domain(const Predicate& p, const PlaneTree& t);

// Throws DomainError if t is outside the domain of p.
bool evaluate(const Predicate& p, const PlaneTree& t);

// True iff no member of family embeds into t.
bool check_excluded_family(const PlaneTree& t, std::span<const PlaneTree> family);

// Trees of universe(nmax) in the domain of p that violate p while every
// strictly smaller in-domain minor satisfies p. Sorted by canonical text.
// Complete only relative to the universe.
std::vector<PlaneTree> minimal_excluded(const Predicate& p, std::size_t nmax,
                                        const SweepOptions& opts = {});

struct MonotoneViolation {
  std::size_t sub = 0;    // universe index of the minor
  std::size_t super = 0;  // universe index of the larger tree
  long sub_value = 0;
  long super_value = 0;
};

// Names accepted by audit_monotone: "betti", "genus", and "top_defect_ub"
// (restricted to pairs of knots; reported, not asserted).
bool is_audit_quantity(std::string_view name);

// Every relation pair (i, j) of universe(nmax) with q(trees[i]) > q(trees[j]).
std::vector<MonotoneViolation> audit_monotone(std::string_view quantity,
                                              std::size_t nmax,
                                              const SweepOptions& opts = {});

// Trees of size n grouped by equal fingerprint. Members are sorted by
// canonical text, classes by their first member.
std::vector<std::vector<PlaneTree>> fingerprint_classes(
    std::size_t n, const SweepOptions& opts = {});

}  // namespace hopfarb
