#ifndef LIMATTN_TESTS_SUPPORT_HPP
#define LIMATTN_TESTS_SUPPORT_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "limattn/core.hpp"
#include "limattn/fixtures.hpp"

namespace support {

inline limattn::Item item(const limattn::GroundSet& g, std::string_view label) {
  return *g.index_of(label);
}

// Menu from concatenated one-character labels, e.g. "wxy".
inline limattn::ItemSet menu(const limattn::GroundSet& g, std::string_view chars) {
  limattn::ItemSet s;
  for (char ch : chars) s = s.with(item(g, std::string_view(&ch, 1)));
  return s;
}

inline limattn::LinearOrder order(const limattn::GroundSet& g, std::string_view chars) {
  std::vector<limattn::Item> ranking;
  for (char ch : chars) ranking.push_back(item(g, std::string_view(&ch, 1)));
  return limattn::LinearOrder(g, ranking);
}

inline limattn::Relation relation(const limattn::GroundSet& g,
                                  std::vector<std::pair<char, char>> edges) {
  limattn::Relation r(g);
  for (auto [a, b] : edges) {
    r.add(item(g, std::string_view(&a, 1)), item(g, std::string_view(&b, 1)));
  }
  return r;
}

inline limattn::ChoiceFunction fixture(std::string_view name) {
  return limattn::choice_fixture(name).choice();
}

inline limattn::ChoiceCorrespondence corr(std::string_view name) {
  return limattn::corr_fixture(name).gamma();
}

// The function rationalized by a linear order.
inline limattn::ChoiceFunction rational(const limattn::LinearOrder& o) {
  return limattn::ChoiceFunction::from_rule(o.ground(), [&](limattn::ItemSet a) { return o.best(a); });
}

}  // namespace support

#endif  // LIMATTN_TESTS_SUPPORT_HPP
