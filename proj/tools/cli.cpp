#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <json.hpp>

#include "hopfarb/embedding.hpp"
#include "hopfarb/enumeration.hpp"
#include "hopfarb/errors.hpp"
#include "hopfarb/invariants.hpp"
#include "hopfarb/minor_lab.hpp"
#include "hopfarb/plane_tree.hpp"
#include "hopfarb/tree_json.hpp"

namespace hopfarb::cli {

namespace {

struct Options {
  unsigned jobs = 1;
  std::optional<std::size_t> guard;
  std::string format = "text";
  std::string tree;
  std::string file;
  std::string sub;
  std::string super;
  bool witness = false;
  std::size_t size = 0;
  std::optional<std::uint64_t> limit;
  std::size_t max_size = 0;
  std::string dot;
  std::string csv;
  std::string predicate;
  std::string quantity;
  std::uint64_t seed = 0;
};

std::vector<PlaneTree> read_tree_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::vector<PlaneTree> trees;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      trees.push_back(parse(line));
    } catch (const ParseError& e) {
      throw ParseError(path + ":" + std::to_string(lineno) + ": " +
                           std::string(e.what()).substr(0, std::string(e.what()).rfind(" at offset")),
                       e.offset());
    }
  }
  return trees;
}

// Trees named by --tree or --file; exactly one must be given.
std::vector<PlaneTree> input_trees(const Options& o) {
  if (!o.file.empty()) return read_tree_file(o.file);
  return {parse(o.tree)};
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write '" + path + "'");
  f << content;
  if (!f) throw Error("failed writing '" + path + "'");
}

SweepOptions sweep_options(const Options& o) {
  SweepOptions s;
  s.jobs = o.jobs;
  if (o.guard) s.max_universe = *o.guard;
  return s;
}

void cmd_parse(const Options& o, std::ostream& out) {
  for (const auto& t : input_trees(o)) {
    out << (o.format == "json" ? tree_to_json(t) : t.to_text()) << '\n';
  }
}

void cmd_enum(const Options& o, std::ostream& out) {
  const TreeEnumeration seq(o.size);
  const std::uint64_t n = o.limit ? std::min(*o.limit, seq.size()) : seq.size();
  for (std::uint64_t r = 0; r < n; ++r) {
    const PlaneTree t = seq.at(r);
    out << (o.format == "json" ? tree_to_json(t) : t.to_text()) << '\n';
  }
}

void cmd_count(const Options& o, std::ostream& out) { out << count(o.size).str() << '\n'; }

void cmd_inv(const Options& o, std::ostream& out) {
  for (const auto& t : input_trees(o)) {
    const Fingerprint f = fingerprint(t);
    if (o.format == "json") {
      out << fingerprint_to_json(f) << '\n';
    } else {
      out << "tree: " << t.to_text() << '\n' << fingerprint_to_text(f);
    }
  }
}

void cmd_embed(const Options& o, std::ostream& out) {
  const PlaneTree sub = parse(o.sub);
  const PlaneTree super = parse(o.super);
  if (!o.witness) {
    out << (embeds(sub, super) ? "true" : "false") << '\n';
    return;
  }
  const auto w = embed_witness(sub, super);
  out << (w ? "true" : "false") << '\n';
  if (w) out << witness_to_json(*w) << '\n';
}

void cmd_oracle_embed(const Options& o, std::ostream& out) {
  const std::size_t limit = o.guard.value_or(kDefaultOracleMaxSize);
  out << (oracle_embeds(parse(o.sub), parse(o.super), limit) ? "true" : "false")
      << '\n';
}

void cmd_poset(const Options& o, std::ostream& out) {
  const SweepOptions s = sweep_options(o);
  if (o.max_size > s.max_universe) {
    throw GuardError("universe size " + std::to_string(o.max_size) +
                     " exceeds guard " + std::to_string(s.max_universe));
  }
  const Universe u(o.max_size);
  const PosetReport r = poset(u, s);
  if (!o.dot.empty()) write_file(o.dot, poset_to_dot(u, r));
  if (!o.csv.empty()) write_file(o.csv, poset_to_csv(r));
  for (const auto& st : r.stats) {
    out << "size " << st.size << ": trees " << st.trees << ", relations "
        << st.relation_pairs << ", covers " << st.hasse_pairs << '\n';
  }
  out << "total: trees " << u.size() << ", relations " << r.relation_pairs.size()
      << ", covers " << r.hasse_pairs.size() << '\n';
}

void cmd_mine(const Options& o, std::ostream& out) {
  const Predicate p = parse_predicate(o.predicate);
  for (const auto& t : minimal_excluded(p, o.max_size, sweep_options(o))) {
    out << t.to_text() << '\n';
  }
}

void cmd_audit(const Options& o, std::ostream& out) {
  const auto violations = audit_monotone(o.quantity, o.max_size, sweep_options(o));
  const Universe u(o.max_size);
  for (const auto& v : violations) {
    out << u.text(v.sub) << " -> " << u.text(v.super) << ": " << v.sub_value
        << " > " << v.super_value << '\n';
  }
  out << violations.size() << " violations\n";
}

void cmd_classes(const Options& o, std::ostream& out) {
  const auto classes = fingerprint_classes(o.size, sweep_options(o));
  if (o.format == "json") {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& cls : classes) {
      nlohmann::ordered_json entry;
      entry["fingerprint"] = nlohmann::ordered_json::parse(fingerprint_to_json(fingerprint(cls.front())));
      auto& members = entry["members"] = nlohmann::ordered_json::array();
      for (const auto& t : cls) members.push_back(t.to_text());
      arr.push_back(std::move(entry));
    }
    out << arr.dump() << '\n';
    return;
  }
  for (const auto& cls : classes) {
    for (std::size_t i = 0; i < cls.size(); ++i) {
      out << (i ? " " : "") << cls[i].to_text();
    }
    out << '\n';
  }
}

void cmd_random(const Options& o, std::ostream& out) {
  const PlaneTree t = random_tree(o.size, o.seed);
  out << (o.format == "json" ? tree_to_json(t) : t.to_text()) << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Signed plane trees, Hopf plumbings and their minors", "hopfarb"};
  app.require_subcommand(1, 1);
  app.add_option("--jobs", o.jobs, "worker threads for sweeps")
      ->check(CLI::Range(1U, 1024U));
  app.add_option("--guard", o.guard,
                 "override the size guard of poset/mine/audit/oracle-embed");

  std::function<void(const Options&, std::ostream&)> action;
  auto verb = [&](const char* name, const char* help, auto fn) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto tree_inputs = [&](CLI::App* sub) {
    auto* group = sub->add_option_group("input", "exactly one of --tree, --file");
    group->add_option("--tree", o.tree, "tree in text form");
    group->add_option("--file", o.file, "file with one tree per line");
    group->require_option(1, 1);
  };
  auto format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", o.format)->check(CLI::IsMember(std::move(allowed)));
  };

  auto* parse_cmd = verb("parse", "print the canonical form of a tree", cmd_parse);
  tree_inputs(parse_cmd);
  format(parse_cmd, {"text", "json"});

  auto* enum_cmd = verb("enum", "list all trees of a given size", cmd_enum);
  enum_cmd->add_option("--size", o.size)->required();
  enum_cmd->add_option("--limit", o.limit);
  format(enum_cmd, {"text", "json"});

  auto* count_cmd = verb("count", "number of trees of a given size", cmd_count);
  count_cmd->add_option("n", o.size)->required();

  auto* inv_cmd = verb("inv", "invariants of the boundary link", cmd_inv);
  tree_inputs(inv_cmd);
  format(inv_cmd, {"text", "json"});

  auto* embed_cmd = verb("embed", "decide sub <-> super embedding", cmd_embed);
  embed_cmd->add_option("--sub", o.sub)->required();
  embed_cmd->add_option("--super", o.super)->required();
  embed_cmd->add_flag("--witness", o.witness, "print a witness as JSON");

  auto* oracle_cmd =
      verb("oracle-embed", "decide embedding by exhaustive reduction", cmd_oracle_embed);
  oracle_cmd->add_option("--sub", o.sub)->required();
  oracle_cmd->add_option("--super", o.super)->required();

  auto* poset_cmd = verb("poset", "minor relation over a universe", cmd_poset);
  poset_cmd->add_option("--max-size", o.max_size)->required();
  poset_cmd->add_option("--dot", o.dot, "write Hasse diagram as DOT");
  poset_cmd->add_option("--csv", o.csv, "write relation pairs as CSV");

  auto* mine_cmd = verb("mine", "minimal excluded minors of a predicate", cmd_mine);
  mine_cmd->add_option("--predicate", o.predicate)->required();
  mine_cmd->add_option("--max-size", o.max_size)->required();

  auto* audit_cmd = verb("audit", "check minor-monotonicity of a quantity", cmd_audit);
  audit_cmd->add_option("--quantity", o.quantity)
      ->required()
      ->check(CLI::IsMember({"genus", "betti", "top_defect_ub"}));
  audit_cmd->add_option("--max-size", o.max_size)->required();

  auto* classes_cmd = verb("classes", "group trees by fingerprint", cmd_classes);
  classes_cmd->add_option("--size", o.size)->required();
  format(classes_cmd, {"text", "json"});

  auto* random_cmd = verb("random", "uniformly random tree", cmd_random);
  random_cmd->add_option("--size", o.size)->required();
  random_cmd->add_option("--seed", o.seed)->required();
  format(random_cmd, {"text", "json"});

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  if (o.guard) err << "note: size guard overridden to " << *o.guard << '\n';

  std::ostringstream buffer;
  try {
    action(o, buffer);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kDomainError;
  }
  out << buffer.str();
  out.flush();
  return kOk;
}

}  // namespace hopfarb::cli
