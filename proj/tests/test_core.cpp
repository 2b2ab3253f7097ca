#include "doctest.h"
#include "limattn/core.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace limattn;
using support::menu;
using support::order;
using support::relation;

TEST_CASE("submask enumeration visits every subset once in ascending order") {
  const ItemSet s = ItemSet::of({0, 2, 3});
  std::vector<Mask> seen;
  for_each_subset(s, [&](ItemSet t) { seen.push_back(t.bits()); });
  CHECK(seen == std::vector<Mask>{1, 4, 5, 8, 9, 12, 13});
}

TEST_CASE("ground set labels and formatting") {
  const GroundSet g = GroundSet::letters("wxyz");
  CHECK(g.size() == 4);
  CHECK(g.format(menu(g, "xz")) == "xz");
  CHECK(g.describe(menu(g, "wyz")) == "{w, y, z}");
  CHECK_FALSE(g.index_of("q").has_value());
  CHECK(GroundSet::valid_label("a_1"));
  CHECK_FALSE(GroundSet::valid_label("a b"));
}

TEST_CASE("max_elements") {
  const GroundSet g = GroundSet::letters("wxyz");
  CHECK(max_elements(menu(g, "xyz"), order(g, "yxzw").to_relation()) == menu(g, "y"));
  CHECK(max_elements(menu(g, "xy"), Relation(g)) == menu(g, "xy"));
  CHECK(max_elements(menu(g, "wxyz"), relation(g, {{'x', 'y'}, {'z', 'w'}})) == menu(g, "xz"));
}

TEST_CASE("relation_props") {
  const GroundSet g = GroundSet::letters("wxyz");
  const auto lin = relation_props(order(g, "zyxw").to_relation());
  CHECK(lin.asymmetric);
  CHECK(lin.acyclic);
  CHECK(lin.transitive);
  CHECK(lin.complete);

  const auto sym = relation_props(relation(g, {{'x', 'y'}, {'y', 'x'}}));
  CHECK_FALSE(sym.asymmetric);
  CHECK(sym.acyclic);
  CHECK_FALSE(sym.transitive);

  CHECK_FALSE(relation_props(relation(g, {{'z', 'y'}, {'y', 'x'}, {'x', 'z'}})).acyclic);
}

TEST_CASE("transitive closure matches the matrix-power oracle") {
  const GroundSet g = GroundSet::letters("abc");
  const Relation chain = relation(g, {{'a', 'b'}, {'b', 'c'}});
  const Closure cl = transitive_closure(chain);
  CHECK(cl.relation.has(0, 2));
  CHECK_FALSE(cl.cyclic);

  const LinearOrder lin = order(g, "cab");
  CHECK(transitive_closure(lin.to_relation()).relation == lin.to_relation());

  oracle::Rng rng(5);
  const GroundSet g5 = GroundSet::letters("vwxyz");
  for (int i = 0; i < 300; ++i) {
    Relation r(g5);
    for (Item x = 0; x < 5; ++x)
      for (Item y = 0; y < 5; ++y)
        if (x != y && rng() % 4 == 0) r.add(x, y);
    CHECK(transitive_closure(r).relation == oracle::closure_by_powers(r));
  }
}

TEST_CASE("cycles") {
  const GroundSet g = GroundSet::letters("wxyz");
  const Relation r = relation(g, {{'w', 'x'}, {'x', 'y'}, {'y', 'w'}, {'z', 'w'}});
  CHECK_FALSE(is_cycle_free(r));
  CHECK(shortest_cycle(r).size() == 3);
  CHECK_FALSE(is_cycle_free(relation(g, {{'w', 'x'}, {'x', 'w'}})));  // two-cycles count
}

TEST_CASE("szpilrajn extension contains the relation") {
  const GroundSet g = GroundSet::letters("xyz");
  CHECK(szpilrajn_extend(Relation(g), order(g, "xyz")) == order(g, "xyz"));
  const LinearOrder ext = szpilrajn_extend(relation(g, {{'y', 'x'}}), order(g, "xyz"));
  CHECK(ext.prefers(support::item(g, "y"), support::item(g, "x")));

  const GroundSet g4 = GroundSet::letters("wxyz");
  const Relation sal = relation(g4, {{'z', 'w'}, {'z', 'x'}, {'z', 'y'}, {'x', 'w'}, {'x', 'y'}});
  const LinearOrder o = szpilrajn_extend(sal);
  CHECK(o.ranking().front() == support::item(g4, "z"));
  CHECK(sal.subset_of(o.to_relation()));

  CHECK_THROWS_AS(szpilrajn_extend(relation(g, {{'x', 'y'}, {'y', 'z'}, {'z', 'x'}})), Error);
}

TEST_CASE("random partial orders extend to linear orders containing them") {
  oracle::Rng rng(9);
  const GroundSet g = GroundSet::letters("uvwxyz");
  for (int i = 0; i < 200; ++i) {
    const Relation p = oracle::random_partial_order(g, rng);
    CHECK(p.subset_of(szpilrajn_extend(p).to_relation()));
  }
}

TEST_CASE("linear order helpers") {
  const GroundSet g = GroundSet::letters("wxyz");
  const LinearOrder o = order(g, "ywxz");
  CHECK(o.best(menu(g, "wxz")) == support::item(g, "w"));
  CHECK(o.worst(menu(g, "wxy")) == support::item(g, "x"));
  CHECK(o.below(support::item(g, "w")) == menu(g, "xz"));
  CHECK_THROWS_AS(LinearOrder(g, {0, 1, 1, 2}), Error);
}
