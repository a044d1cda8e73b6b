// One PASS/FAIL line per acceptance criterion; nonzero exit on any failure.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "hopfarb/embedding.hpp"
#include "hopfarb/enumeration.hpp"
#include "hopfarb/invariants.hpp"
#include "hopfarb/minor_lab.hpp"
#include "oracles.hpp"

using namespace hopfarb;

namespace {

struct Outcome {
  bool ok;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double limit_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome r{false, ""};
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) {
    r.ok = false;
    r.detail += " (time limit " + std::to_string(limit_s) + " s exceeded)";
  }
  if (!r.ok) ++failures;
  std::printf("%s %2d %-28s %8.3fs  %s\n", r.ok ? "PASS" : "FAIL", id, name, secs,
              r.detail.c_str());
  std::fflush(stdout);
}

LaurentPolynomial poly(std::vector<long> ascending) {
  return LaurentPolynomial(0, std::vector<BigInt>(ascending.begin(), ascending.end()));
}

std::string run_cli(const std::vector<std::string>& args, int& status) {
  std::ostringstream out, err;
  status = cli::run(args, out, err);
  return out.str();
}

Outcome counts() {
  const long expected[] = {2, 4, 16, 80, 448, 2688, 16896, 109824};
  for (std::size_t n = 1; n <= 8; ++n) {
    // Independent closed form: 2^n binom(2m, m) / (m + 1), m = n - 1.
    const std::size_t m = n - 1;
    BigInt binom = 1;
    for (std::size_t k = 1; k <= m; ++k) binom = binom * (m + k) / k;
    const BigInt closed = (binom / (m + 1)) << n;
    if (closed != expected[n - 1]) return {false, "closed form n=" + std::to_string(n)};
    if (count(n) != expected[n - 1]) return {false, "count(" + std::to_string(n) + ")"};
    if (enumerate(n).size() != static_cast<std::size_t>(expected[n - 1])) {
      return {false, "|enumerate(" + std::to_string(n) + ")|"};
    }
  }
  return {true, "n = 1..8"};
}

Outcome invariant_tuples() {
  struct Row {
    const char* tree;
    std::size_t b, g;
    LaurentPolynomial delta;
    long sigma;
    long det;  // < 0: not checked against a table value
  };
  const Row rows[] = {
      {"+", 2, 0, poly({-1, 1}), 1, 2},
      {"+(+)", 1, 1, poly({1, -1, 1}), 2, 3},
      {"+(-)", 1, 1, poly({1, -3, 1}), 0, 5},
      {"+(+(+))", 2, 1, (poly({1, -1}) * poly({1, 0, 1})).normalized(), 3, -1},
  };
  for (const auto& r : rows) {
    const PlaneTree t = parse(r.tree);
    const Fingerprint f = fingerprint(t);
    // The cofactor route is independent of the production determinant.
    const auto cof = oracle::cofactor_alexander(seifert_matrix(t).entries()).normalized();
    const bool ok = f.b == r.b && f.g == r.g && f.alexander == r.delta && cof == r.delta &&
                    f.signature == r.sigma && (r.det < 0 || f.determinant == r.det) &&
                    f.determinant == abs(cof.evaluate_at_unit(-1));
    if (!ok) return {false, std::string("tuple of ") + r.tree};
  }
  return {true, "4 trees"};
}

Outcome dp_vs_oracle() {
  const Universe sub(4);
  const Universe super(5);
  std::size_t pairs = 0, bad = 0;
  for (const auto& t2 : super.trees()) {
    const auto closure = minor_closure(t2);
    for (const auto& t1 : sub.trees()) {
      ++pairs;
      if (embeds(t1, t2) != (closure.count(t1.to_text()) != 0)) ++bad;
    }
  }
  return {bad == 0, std::to_string(pairs) + " pairs, " + std::to_string(bad) + " disagreements"};
}

Outcome witness_soundness() {
  const Universe u(4);
  std::size_t positives = 0, verified = 0;
  for (const auto& a : u.trees()) {
    for (const auto& b : u.trees()) {
      if (!embeds(a, b)) continue;
      ++positives;
      const auto w = embed_witness(a, b);
      if (w && verify_witness(a, b, *w)) ++verified;
    }
  }
  return {positives > 0 && verified == positives,
          std::to_string(verified) + "/" + std::to_string(positives) + " verified"};
}

Outcome audit() {
  const auto g = audit_monotone("genus", 5);
  const auto b = audit_monotone("betti", 5);
  return {g.empty() && b.empty(), "genus " + std::to_string(g.size()) + ", betti " +
                                      std::to_string(b.size()) + " violations"};
}

Outcome basis_flips() {
  std::mt19937_64 rng(1000);
  int pass = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 1 + rng() % 8;
    const PlaneTree t = random_tree(n, rng());
    std::vector<int> d(n);
    for (auto& s : d) s = (rng() & 1U) ? 1 : -1;
    const auto v = seifert_matrix(t);
    pass += fingerprint(v.flipped_by(d)) == fingerprint(v);
  }
  return {pass == 1000, std::to_string(pass) + "/1000"};
}

Outcome mining() {
  const auto size_family = minimal_excluded(parse_predicate("size_le:3"), 5);
  const auto four = enumerate(4);
  std::vector<std::string> got, want;
  for (const auto& t : size_family) got.push_back(t.to_text());
  for (const auto& t : four) want.push_back(t.to_text());
  std::sort(want.begin(), want.end());
  if (got != want) return {false, "size_le:3 family has " + std::to_string(got.size())};

  const auto pos_family = minimal_excluded(parse_predicate("all_positive"), 4);
  if (pos_family.size() != 1 || pos_family[0].to_text() != "-") {
    return {false, "all_positive family"};
  }
  const struct {
    const char* spec;
    const std::vector<PlaneTree>& family;
    std::size_t nmax;
  } checks[] = {{"size_le:3", size_family, 5}, {"all_positive", pos_family, 4}};
  std::size_t scanned = 0;
  for (const auto& c : checks) {
    const Predicate p = parse_predicate(c.spec);
    const Universe u(c.nmax);
    for (const auto& t : u.trees()) {
      ++scanned;
      if (check_excluded_family(t, c.family) != evaluate(p, t)) {
        return {false, std::string(c.spec) + " mismatch on " + t.to_text()};
      }
    }
  }
  return {true, "families 80 and {-}; " + std::to_string(scanned) + " trees rescanned"};
}

Outcome quasi_order() {
  const Universe u(4);
  const std::size_t n = u.size();
  std::vector<char> rel(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rel[i * n + j] = embeds(u[i], u[j]);
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!rel[i * n + i]) return {false, "reflexivity fails at " + u.text(i)};
    for (std::size_t j = 0; j < n; ++j) {
      if (!rel[i * n + j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (rel[j * n + k] && !rel[i * n + k]) {
          return {false, "transitivity fails at " + u.text(i) + ", " + u.text(j) + ", " +
                             u.text(k)};
        }
      }
    }
  }
  return {true, std::to_string(n) + " trees"};
}

Outcome knot_delta_at_one() {
  std::size_t knots = 0, ok = 0;
  for (std::size_t n = 1; n <= 7; ++n) {
    for (const auto& t : TreeEnumeration(n)) {
      if (boundary_components(t) != 1) continue;
      ++knots;
      ok += abs(alexander(t).evaluate_at_unit(1)) == 1;
    }
  }
  return {knots > 0 && ok == knots, std::to_string(ok) + "/" + std::to_string(knots) + " knots"};
}

Outcome cli_round_trip() {
  std::size_t trees = 0;
  const Universe six(6);
  for (const auto& t : six.trees()) {
    ++trees;
    int status = 0;
    const std::string text = t.to_text();
    const std::string out = run_cli({"parse", "--tree", text}, status);
    if (status != 0 || out != text + "\n") return {false, "parse/print of " + text};
  }
  const std::vector<std::vector<std::string>> cmds{
      {"poset", "--max-size", "5"},
      {"mine", "--predicate", "genus_le:1", "--max-size", "5"},
      {"audit", "--quantity", "betti", "--max-size", "5"},
      {"classes", "--size", "5", "--format", "json"},
      {"enum", "--size", "4", "--format", "json"},
  };
  for (const auto& cmd : cmds) {
    std::string reference;
    for (const char* jobs : {"1", "2", "4", "1"}) {
      std::vector<std::string> args{"--jobs", jobs};
      args.insert(args.end(), cmd.begin(), cmd.end());
      int status = 0;
      const std::string out = run_cli(args, status);
      if (status != 0) return {false, cmd[0] + " failed"};
      if (reference.empty()) reference = out;
      if (out != reference) return {false, cmd[0] + " differs at --jobs " + jobs};
    }
  }
  return {true, std::to_string(trees) + " trees, " + std::to_string(cmds.size()) +
                    " commands x 4 runs"};
}

}  // namespace

int main() {
  criterion(1, "enumeration counts", 10, counts);
  criterion(2, "invariant tuples", 0, invariant_tuples);
  criterion(3, "dp vs reduction oracle", 300, dp_vs_oracle);
  criterion(4, "witness soundness", 0, witness_soundness);
  criterion(5, "monotonicity audit", 0, audit);
  criterion(6, "basis-flip invariance", 0, basis_flips);
  criterion(7, "obstruction mining", 0, mining);
  criterion(8, "quasi-order axioms", 0, quasi_order);
  criterion(9, "knots: |alexander(1)| = 1", 120, knot_delta_at_one);
  criterion(10, "cli round trip, determinism", 0, cli_round_trip);
  std::printf("%s: %d failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
