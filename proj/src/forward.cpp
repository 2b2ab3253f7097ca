#include "limattn/forward.hpp"

namespace limattn {

namespace {

void require_same_ground(const GroundSet& a, const GroundSet& b) {
  if (!(a == b)) {
    throw Error(ErrorCode::InvalidArgument, "model parts use different ground sets");
  }
}

ChoiceFunction run(const FilterOrderModel& m) {
  require_same_ground(m.gamma.ground(), m.order.ground());
  return ChoiceFunction::from_rule(m.gamma.ground(), [&](ItemSet a) {
    return m.order.best(m.gamma(a));
  });
}

ChoiceFunction run(const ShortlistModel& m) {
  require_same_ground(m.partial.ground(), m.order.ground());
  const GroundSet& g = m.order.ground();
  return ChoiceFunction::from_rule(g, [&](ItemSet a) {
    const ItemSet shortlist = max_elements(a, m.partial);
    if (shortlist.empty()) {
      throw Error(ErrorCode::CyclicShortlist,
                  "first-stage relation has no maximal element in " + g.describe(a));
    }
    return m.order.best(shortlist);
  });
}

ChoiceFunction run(const ListModel& m) {
  require_same_ground(m.list.ground(), m.beats.ground());
  const GroundSet& g = m.list.ground();
  const int n = g.size();
  for (Item x = 0; x < n; ++x) {
    for (Item y = x + 1; y < n; ++y) {
      if (m.beats.has(x, y) == m.beats.has(y, x)) {
        throw Error(ErrorCode::InvalidArgument,
                    "tournament must pick exactly one winner of " +
                        g.describe(ItemSet::of({x, y})));
      }
    }
  }
  // Menus in ascending encoding visit every A∖m before A.
  std::vector<std::int8_t> table(std::size_t{1} << n, 0);
  for_each_menu(n, [&](ItemSet a) {
    if (a.size() == 1) {
      table[a.bits()] = static_cast<std::int8_t>(a.first());
      return;
    }
    const Item head = m.list.best(a);
    const Item rest = table[a.without(head).bits()];
    table[a.bits()] = static_cast<std::int8_t>(m.beats.has(head, rest) ? head : rest);
  });
  return ChoiceFunction(g, std::move(table));
}

ChoiceFunction run(const CerModel& m) {
  const GroundSet& g = m.conspicuity.ground();
  if (static_cast<int>(m.references.size()) != g.size()) {
    throw Error(ErrorCode::InvalidArgument, "need one reference order per item");
  }
  for (const auto& ref : m.references) require_same_ground(g, ref.ground());
  return ChoiceFunction::from_rule(g, [&](ItemSet a) {
    return m.references[m.conspicuity.best(a)].best(a);
  });
}

}  // namespace

const GroundSet& ground_of(const ModelSpec& model) {
  return std::visit(
      [](const auto& m) -> const GroundSet& {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, FilterOrderModel>) return m.order.ground();
        else if constexpr (std::is_same_v<T, ShortlistModel>) return m.order.ground();
        else if constexpr (std::is_same_v<T, ListModel>) return m.list.ground();
        else return m.conspicuity.ground();
      },
      model);
}

ChoiceFunction simulate(const ModelSpec& model) {
  return std::visit([](const auto& m) { return run(m); }, model);
}

bool check_list_rational(const ChoiceFunction& c, const LinearOrder& f) {
  bool ok = true;
  for_each_menu(c.size(), [&](ItemSet a) {
    if (!ok || a.size() < 2) return;
    const Item head = f.best(a);
    const Item rest = c(a.without(head));
    if (c(a) != c(ItemSet::of({head, rest}))) ok = false;
  });
  return ok;
}

Relation binary_tournament(const ChoiceFunction& c) {
  Relation beats(c.ground());
  for (Item x = 0; x < c.size(); ++x) {
    for (Item y = x + 1; y < c.size(); ++y) {
      const Item w = c(x, y);
      beats.add(w, w == x ? y : x);
    }
  }
  return beats;
}

}  // namespace limattn
