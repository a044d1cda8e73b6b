#include "hopfarb/minor_lab.hpp"

#include <algorithm>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <map>

#include "hopfarb/embedding.hpp"
#include "hopfarb/enumeration.hpp"
#include "hopfarb/errors.hpp"
#include "hopfarb/invariants.hpp"
#include "hopfarb/parallel.hpp"

namespace hopfarb {

Universe::Universe(std::size_t nmax) : nmax_(nmax) {
  if (nmax < 1) throw DomainError("universe size must be at least 1");
  offsets_.push_back(0);
  for (std::size_t k = 1; k <= nmax; ++k) {
    for (auto t : TreeEnumeration(k)) {
      texts_.push_back(t.to_text());
      trees_.push_back(std::move(t));
    }
    offsets_.push_back(trees_.size());
  }
  index_.reserve(texts_.size());
  for (std::size_t i = 0; i < texts_.size(); ++i) index_.emplace(texts_[i], i);
}

std::pair<std::size_t, std::size_t> Universe::size_range(std::size_t k) const {
  if (k < 1 || k > nmax_) return {0, 0};
  return {offsets_[k - 1], offsets_[k]};
}

std::optional<std::size_t> Universe::index_of(std::string_view text) const {
  const auto it = index_.find(std::string(text));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

Universe universe(std::size_t nmax) { return Universe(nmax); }

namespace {

void check_guard(std::size_t nmax, const SweepOptions& opts) {
  if (nmax > opts.max_universe) {
    throw GuardError("universe size " + std::to_string(nmax) +
                     " exceeds guard " + std::to_string(opts.max_universe));
  }
}

// For each tree, the universe indices of its strictly smaller minors.
std::vector<std::vector<std::size_t>> strict_minors(const Universe& u,
                                                    const SweepOptions& opts) {
  std::vector<std::vector<std::size_t>> preds(u.size());
  parallel_for(u.size(), opts.jobs, [&](std::size_t j) {
    const std::size_t smaller = u.size_range(u[j].size()).first;
    for (std::size_t i = 0; i < smaller; ++i) {
      if (embeds(u[i], u[j])) preds[j].push_back(i);
    }
  });
  return preds;
}

}  // namespace

PosetReport poset(const Universe& u, const SweepOptions& opts) {
  check_guard(u.max_size(), opts);
  // Equal-size embeddings are identities and the universe has no duplicates,
  // so every strict relation pair has a strictly larger target.
  const auto preds = strict_minors(u, opts);

  const std::size_t words = (u.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> pred_bits(
      u.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t j = 0; j < u.size(); ++j) {
    for (std::size_t i : preds[j]) pred_bits[j][i / 64] |= std::uint64_t{1} << (i % 64);
  }

  // (i, j) is a cover iff i is not below any k that is itself below j.
  std::vector<std::vector<std::size_t>> covers(u.size());
  parallel_for(u.size(), opts.jobs, [&](std::size_t j) {
    std::vector<std::uint64_t> below(words, 0);
    for (std::size_t k : preds[j]) {
      for (std::size_t w = 0; w < words; ++w) below[w] |= pred_bits[k][w];
    }
    for (std::size_t i : preds[j]) {
      if (!((below[i / 64] >> (i % 64)) & 1U)) covers[j].push_back(i);
    }
  });

  PosetReport report;
  report.stats.resize(u.max_size());
  for (std::size_t k = 1; k <= u.max_size(); ++k) {
    const auto [b, e] = u.size_range(k);
    report.stats[k - 1].size = k;
    report.stats[k - 1].trees = e - b;
  }
  for (std::size_t j = 0; j < u.size(); ++j) {
    auto& s = report.stats[u[j].size() - 1];
    s.relation_pairs += preds[j].size();
    s.hasse_pairs += covers[j].size();
    for (std::size_t i : preds[j]) report.relation_pairs.emplace_back(i, j);
    for (std::size_t i : covers[j]) report.hasse_pairs.emplace_back(i, j);
  }
  std::sort(report.relation_pairs.begin(), report.relation_pairs.end());
  std::sort(report.hasse_pairs.begin(), report.hasse_pairs.end());
  return report;
}

std::string poset_to_dot(const Universe& u, const PosetReport& report) {
  std::string out = "digraph minors {\n";
  for (std::size_t i = 0; i < u.size(); ++i) {
    out += "  n" + std::to_string(i) + " [label=\"" + u.text(i) + "\"];\n";
  }
  for (const auto& [i, j] : report.hasse_pairs) {
    out += "  n" + std::to_string(i) + " -> n" + std::to_string(j) + ";\n";
  }
  out += "}\n";
  return out;
}

std::string poset_to_csv(const PosetReport& report) {
  std::string out;
  for (const auto& [i, j] : report.relation_pairs) {
    out += std::to_string(i) + "," + std::to_string(j) + "\n";
  }
  return out;
}

namespace {

struct PredicateKind {
  std::string_view name;
  std::size_t arity;
  bool knots_only;
};

constexpr PredicateKind kPredicates[] = {
    {"size_le", 1, false},      {"genus_le", 1, false},
    {"all_positive", 0, false}, {"sig_abs_le", 1, false},
    {"det_le", 1, false},       {"top_defect_ub_le", 1, true},
};

}  // namespace

Predicate parse_predicate(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view name = spec.substr(0, colon);
  const auto kind = std::find_if(std::begin(kPredicates), std::end(kPredicates),
                                 [&](const auto& k) { return k.name == name; });
  if (kind == std::end(kPredicates)) {
    throw DomainError("unknown predicate '" + std::string(name) + "'");
  }
  Predicate p{std::string(name), {}, kind->knots_only};
  if (colon != std::string_view::npos) {
    std::string_view rest = spec.substr(colon + 1);
    while (true) {
      const auto next = rest.find(':');
      const std::string_view tok = rest.substr(0, next);
      long value = 0;
      const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (tok.empty() || res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
        throw DomainError("bad predicate parameter '" + std::string(tok) + "'");
      }
      p.params.push_back(value);
      if (next == std::string_view::npos) break;
      rest = rest.substr(next + 1);
    }
  }
  if (p.params.size() != kind->arity) {
    throw DomainError("predicate '" + p.name + "' takes " +
                      std::to_string(kind->arity) + " parameter(s)");
  }
  return p;
}

std::string to_string(const Predicate& p) {
  std::string out = p.name;
  for (long v : p.params) out += ":" + std::to_string(v);
  return out;
}

bool in_domain(const Predicate& p, const PlaneTree& t) {
  return !p.knots_only || boundary_components(t) == 1;
}

bool evaluate(const Predicate& p, const PlaneTree& t) {
  if (!in_domain(p, t)) {
    throw DomainError("predicate '" + to_string(p) + "' is defined on knots only; " +
                      t.to_text() + " has " +
                      std::to_string(boundary_components(t)) + " boundary components");
  }
  const auto k = [&] { return p.params.at(0); };
  if (p.name == "size_le") return static_cast<long>(t.size()) <= k();
  if (p.name == "genus_le") return static_cast<long>(genus(t)) <= k();
  if (p.name == "all_positive") return t.count_label(Sign::minus) == 0;
  if (p.name == "sig_abs_le") return std::abs(signature(t)) <= k();
  if (p.name == "det_le") return determinant(t) <= k();
  if (p.name == "top_defect_ub_le") return top_defect_upper_bound(t) <= k();
  throw DomainError("unknown predicate '" + p.name + "'");
}

bool check_excluded_family(const PlaneTree& t, std::span<const PlaneTree> family) {
  return std::none_of(family.begin(), family.end(),
                      [&](const PlaneTree& f) { return embeds(f, t); });
}

std::vector<PlaneTree> minimal_excluded(const Predicate& p, std::size_t nmax,
                                        const SweepOptions& opts) {
  check_guard(nmax, opts);
  const Universe u(nmax);

  std::vector<char> violates(u.size(), 0);
  parallel_for(u.size(), opts.jobs, [&](std::size_t i) {
    violates[i] = in_domain(p, u[i]) && !evaluate(p, u[i]);
  });
  std::vector<std::size_t> violators;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (violates[i]) violators.push_back(i);
  }

  // A violator is minimal iff no strictly smaller violator embeds into it;
  // every other strict minor then satisfies p or lies outside the domain.
  std::vector<char> minimal(violators.size(), 0);
  parallel_for(violators.size(), opts.jobs, [&](std::size_t a) {
    const PlaneTree& t = u[violators[a]];
    minimal[a] = std::none_of(
        violators.begin(), violators.begin() + static_cast<std::ptrdiff_t>(a),
        [&](std::size_t i) { return u[i].size() < t.size() && embeds(u[i], t); });
  });

  std::vector<std::pair<std::string, std::size_t>> picked;
  for (std::size_t a = 0; a < violators.size(); ++a) {
    if (minimal[a]) picked.emplace_back(u.text(violators[a]), violators[a]);
  }
  std::sort(picked.begin(), picked.end());
  std::vector<PlaneTree> out;
  out.reserve(picked.size());
  for (const auto& [text, i] : picked) out.push_back(u[i]);
  return out;
}

bool is_audit_quantity(std::string_view name) {
  return name == "betti" || name == "genus" || name == "top_defect_ub";
}

std::vector<MonotoneViolation> audit_monotone(std::string_view quantity,
                                              std::size_t nmax,
                                              const SweepOptions& opts) {
  if (!is_audit_quantity(quantity)) {
    throw DomainError("unknown quantity '" + std::string(quantity) + "'");
  }
  check_guard(nmax, opts);
  const Universe u(nmax);

  // Value per tree; trees outside the quantity's domain are skipped.
  std::vector<std::optional<long>> value(u.size());
  parallel_for(u.size(), opts.jobs, [&](std::size_t i) {
    const PlaneTree& t = u[i];
    if (quantity == "betti") {
      value[i] = static_cast<long>(betti(t));
    } else if (quantity == "genus") {
      value[i] = static_cast<long>(genus(t));
    } else if (boundary_components(t) == 1) {
      value[i] = top_defect_upper_bound(t);
    }
  });

  const PosetReport report = poset(u, opts);
  std::vector<MonotoneViolation> out;
  for (const auto& [i, j] : report.relation_pairs) {
    if (!value[i] || !value[j]) continue;
    if (*value[i] > *value[j]) out.push_back({i, j, *value[i], *value[j]});
  }
  return out;
}

std::vector<std::vector<PlaneTree>> fingerprint_classes(std::size_t n,
                                                        const SweepOptions& opts) {
  const std::vector<PlaneTree> trees = enumerate(n);
  std::vector<Fingerprint> prints(trees.size());
  parallel_for(trees.size(), opts.jobs,
               [&](std::size_t i) { prints[i] = fingerprint(trees[i]); });

  std::map<Fingerprint, std::vector<std::size_t>, bool (*)(const Fingerprint&, const Fingerprint&)>
      groups(&fingerprint_less);
  for (std::size_t i = 0; i < trees.size(); ++i) groups[prints[i]].push_back(i);

  std::vector<std::vector<std::pair<std::string, std::size_t>>> named;
  for (const auto& [fp, members] : groups) {
    auto& cls = named.emplace_back();
    for (std::size_t i : members) cls.emplace_back(trees[i].to_text(), i);
    std::sort(cls.begin(), cls.end());
  }
  std::sort(named.begin(), named.end(),
            [](const auto& a, const auto& b) { return a.front().first < b.front().first; });

  std::vector<std::vector<PlaneTree>> out;
  out.reserve(named.size());
  for (const auto& cls : named) {
    auto& dst = out.emplace_back();
    for (const auto& [text, i] : cls) dst.push_back(trees[i]);
  }
  return out;
}

}  // namespace hopfarb
