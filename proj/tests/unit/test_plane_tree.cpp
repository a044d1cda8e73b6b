#include <doctest.h>

#include <set>
#include <string>
#include <vector>

#include "hopfarb/enumeration.hpp"
#include "hopfarb/errors.hpp"
#include "hopfarb/plane_tree.hpp"
#include "hopfarb/tree_json.hpp"

using namespace hopfarb;

namespace {

// Re-derives every structural invariant from the public accessors.
bool well_formed(const PlaneTree& t) {
  if (t.size() == 0 || t.parent(t.root())) return false;
  std::vector<int> hits(t.size(), 0);
  for (Vertex v = 0; v < t.size(); ++v) {
    for (Vertex c : t.children(v)) {
      if (c >= t.size() || t.parent(c) != v) return false;
      ++hits[c];
    }
  }
  for (Vertex v = 1; v < t.size(); ++v) {
    if (hits[v] != 1) return false;
  }
  // Preorder numbering; subtree ranges are contiguous.
  Vertex expect = 0;
  std::vector<Vertex> stack{0};
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    if (v != expect++) return false;
    const auto ch = t.children(v);
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  return expect == t.size();
}

}  // namespace

TEST_CASE("parse reads the grammar in textual child order") {
  const PlaneTree t = parse("+(+,-)");
  REQUIRE(t.size() == 3);
  CHECK(t.label(t.root()) == Sign::plus);
  const auto ch = t.children(t.root());
  REQUIRE(ch.size() == 2);
  CHECK(t.label(ch[0]) == Sign::plus);
  CHECK(t.label(ch[1]) == Sign::minus);
  CHECK(t.is_leaf(ch[0]));
}

TEST_CASE("parse ignores whitespace between tokens") {
  CHECK(parse(" - ( + ) ") == parse("-(+)"));
  CHECK(parse("\t+ (\n- , +( - ) )") == parse("+(-,+(-))"));
}

TEST_CASE("parse errors carry the offset") {
  auto offset_of = [](std::string_view s) -> long {
    try {
      parse(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.offset());
    }
    return -1;
  };
  CHECK(offset_of("+(") == 2);
  CHECK(offset_of("") == 0);
  CHECK(offset_of("   ") == 3);
  CHECK(offset_of("x") == 0);
  CHECK(offset_of("+()") == 2);
  CHECK(offset_of("+(+,)") == 4);
  CHECK(offset_of("+(+;-)") == 3);
  CHECK(offset_of("++") == 1);
  CHECK(offset_of("+(+))") == 4);
}

TEST_CASE("to_text canonical form") {
  CHECK(PlaneTree::leaf(Sign::plus).to_text() == "+");
  CHECK(PlaneTree::node(Sign::minus, {PlaneTree::leaf(Sign::plus)}).to_text() == "-(+)");
  CHECK(parse(" +( -( +,+ ), - ) ").to_text() == "+(-(+,+),-)");
}

TEST_CASE("equal is labelled plane isomorphism") {
  CHECK(equal(parse("+(+,-)"), parse("+(+,-)")));
  CHECK_FALSE(equal(parse("+(+,-)"), parse("+(-,+)")));
  CHECK_FALSE(equal(parse("+"), parse("-")));
}

TEST_CASE("from_records validates and renumbers in preorder") {
  using R = PlaneTree::VertexRecord;
  // Root stored last; children listed out of index order.
  const std::vector<R> recs{
      {Sign::minus, 2, {}},
      {Sign::plus, 2, {}},
      {Sign::plus, std::nullopt, {1, 0}},
  };
  const PlaneTree t = PlaneTree::from_records(recs);
  CHECK(t.to_text() == "+(+,-)");
  CHECK(well_formed(t));

  CHECK_THROWS_AS(PlaneTree::from_records({}), DomainError);
  // two roots
  CHECK_THROWS_AS(PlaneTree::from_records({{Sign::plus, std::nullopt, {}},
                                           {Sign::plus, std::nullopt, {}}}),
                  DomainError);
  // duplicate child
  CHECK_THROWS_AS(PlaneTree::from_records({{Sign::plus, std::nullopt, {1, 1}},
                                           {Sign::plus, 0, {}}}),
                  DomainError);
  // parent field disagrees with children list
  CHECK_THROWS_AS(PlaneTree::from_records({{Sign::plus, std::nullopt, {1}},
                                           {Sign::plus, 0, {}},
                                           {Sign::plus, 1, {}}}),
                  DomainError);
  // cycle detached from the root
  CHECK_THROWS_AS(PlaneTree::from_records({{Sign::plus, std::nullopt, {}},
                                           {Sign::plus, 2, {2}},
                                           {Sign::plus, 1, {1}}}),
                  DomainError);
}

TEST_CASE("delete_leaf") {
  const PlaneTree t = parse("+(+,-)");
  CHECK(delete_leaf(t, 2).to_text() == "+(+)");
  CHECK(delete_leaf(t, 1).to_text() == "+(-)");
  CHECK_THROWS_AS(delete_leaf(t, 0), DomainError);
  CHECK_THROWS_AS(delete_leaf(parse("+"), 0), DomainError);
  CHECK_THROWS_AS(delete_leaf(t, 7), DomainError);
  // sibling order of the remaining children is kept
  CHECK(delete_leaf(parse("+(-,+,-(+))"), 2).to_text() == "+(-,-(+))");
}

TEST_CASE("strip_root") {
  CHECK(strip_root(parse("+(-)")).to_text() == "-");
  CHECK(strip_root(parse("+(-(+,+))")).to_text() == "-(+,+)");
  CHECK_THROWS_AS(strip_root(parse("+(+,-)")), DomainError);
  CHECK_THROWS_AS(strip_root(parse("+")), DomainError);
}

TEST_CASE("contract_path") {
  CHECK(contract_path(parse("+(-(+))"), 0, 2).to_text() == "+(+)");
  CHECK(contract_path(parse("+(+)"), 0, 1) == parse("+(+)"));
  // interior vertex with two children
  CHECK_THROWS_AS(contract_path(parse("+(-(+,+))"), 0, 2), DomainError);
  // not a descendant
  CHECK_THROWS_AS(contract_path(parse("+(-,+)"), 1, 2), DomainError);
  CHECK_THROWS_AS(contract_path(parse("+(-,+)"), 1, 1), DomainError);
  // w keeps the slot of the first interior vertex among u's children
  CHECK(contract_path(parse("+(-,+(-(-)),+)"), 0, 4).to_text() == "+(-,-,+)");
  // long path, labels of interior vertices are irrelevant
  CHECK(contract_path(parse("-(+(-(+(-))))"), 0, 4).to_text() == "-(-)");
}

TEST_CASE("reductions shrink the tree and stay well formed") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& t : enumerate(n)) {
      for (Vertex v = 0; v < t.size(); ++v) {
        if (t.is_leaf(v) && t.size() > 1) {
          const auto r = delete_leaf(t, v);
          CHECK(r.size() == t.size() - 1);
          CHECK(well_formed(r));
        }
      }
      if (t.child_count(0) == 1) {
        const auto r = strip_root(t);
        CHECK(r.size() == t.size() - 1);
        CHECK(well_formed(r));
      }
      for (Vertex w = 1; w < t.size(); ++w) {
        for (Vertex u = *t.parent(w);; u = *t.parent(u)) {
          bool ok = true;
          for (Vertex x = *t.parent(w); x != u; x = *t.parent(x)) ok = ok && t.child_count(x) == 1;
          if (ok) {
            const auto r = contract_path(t, u, w);
            CHECK(r.size() == t.size() - (t.depth(w) - t.depth(u) - 1));
            CHECK(well_formed(r));
            if (t.depth(w) - t.depth(u) == 1) CHECK(r == t);
          } else {
            CHECK_THROWS_AS(contract_path(t, u, w), DomainError);
          }
          if (u == 0) break;
        }
      }
    }
  }
}

TEST_CASE("round trip through text and JSON over universe(6)") {
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& t : enumerate(n)) {
      CHECK(parse(t.to_text()) == t);
      CHECK(tree_from_json(tree_to_json(t)) == t);
      CHECK(well_formed(t));
    }
  }
}

TEST_CASE("JSON form") {
  CHECK(tree_to_json(parse("-(+)")) ==
        R"({"children":[{"children":[],"label":"+"}],"label":"-"})");
  CHECK(tree_from_json(R"({"label":"+","children":[{"label":"-"}]})") == parse("+(-)"));
  CHECK_THROWS_AS(tree_from_json(R"({"label":"x"})"), DomainError);
  CHECK_THROWS_AS(tree_from_json(R"({"label":"+","children":{}})"), DomainError);
  CHECK_THROWS_AS(tree_from_json("{"), ParseError);
}

TEST_CASE("accessors") {
  const PlaneTree t = parse("+(-(+,+),-)");
  CHECK(t.subtree_size(0) == 5);
  CHECK(t.subtree_size(1) == 3);
  CHECK(t.is_ancestor(1, 3));
  CHECK_FALSE(t.is_ancestor(1, 4));
  CHECK(t.depth(3) == 2);
  CHECK(t.child_position(4) == 1);
  CHECK(t.subtree(1).to_text() == "-(+,+)");
  CHECK(t.count_label(Sign::minus) == 2);
  CHECK_FALSE(t.all_labels_equal());
  CHECK(parse("-(-,-)").all_labels_equal());
}
