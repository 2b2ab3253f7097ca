#include "limattn/classify.hpp"

#include <algorithm>

#include "limattn/axioms.hpp"

namespace limattn {

const char* to_string(ModelClass cls) {
  switch (cls) {
    case ModelClass::RAT: return "rat";
    case ModelClass::CLA: return "cla";
    case ModelClass::COLA: return "cola";
    case ModelClass::CSLA: return "csla";
    case ModelClass::CSSLA: return "cssla";
    case ModelClass::CCLA: return "ccla";
    case ModelClass::PILC: return "pilc";
  }
  return "?";
}

std::optional<ModelClass> parse_model_class(std::string_view text) {
  for (ModelClass cls : kAllModelClasses) {
    if (text == to_string(cls)) return cls;
  }
  return std::nullopt;
}

bool ClassMembership::get(ModelClass cls) const {
  switch (cls) {
    case ModelClass::RAT: return rat;
    case ModelClass::CLA: return cla;
    case ModelClass::COLA: return cola;
    case ModelClass::CSLA: return csla;
    case ModelClass::CSSLA: return cssla;
    case ModelClass::CCLA: return ccla;
    case ModelClass::PILC: return pilc;
  }
  return false;
}

const ClassVerdict& ClassMembership::verdict(ModelClass cls) const {
  for (const auto& [tag, v] : verdicts) {
    if (tag == cls) return v;
  }
  throw Error(ErrorCode::InvalidArgument, "no verdict recorded");
}

namespace {

bool is_asymmetric(const Relation& r) {
  for (Item x = 0; x < r.size(); ++x) {
    if (!(r.successors(x) & r.predecessors(x)).empty()) return false;
  }
  return true;
}

std::optional<std::pair<Item, Item>> symmetric_pair(const Relation& r) {
  for (Item x = 0; x < r.size(); ++x) {
    const ItemSet both = r.successors(x) & r.predecessors(x);
    if (!both.empty()) return std::pair{x, both.first()};
  }
  return std::nullopt;
}

ClassVerdict cycle_verdict(Relation r, std::string criterion) {
  ClassVerdict v;
  v.criterion = std::move(criterion);
  v.cycle = shortest_cycle(r);
  v.member = v.cycle.empty();
  v.relation = std::move(r);
  return v;
}

}  // namespace

std::optional<LinearOrder> binary_order(const ChoiceFunction& c) {
  const int n = c.size();
  std::vector<std::pair<int, Item>> wins;
  for (Item x = 0; x < n; ++x) {
    int count = 0;
    for (Item y = 0; y < n; ++y) {
      if (y != x && c(x, y) == x) ++count;
    }
    wins.emplace_back(-count, x);
  }
  std::sort(wins.begin(), wins.end());
  std::vector<Item> ranking;
  for (const auto& w : wins) ranking.push_back(w.second);
  // A tournament is transitive iff its score sequence is n-1, n-2, ..., 0.
  for (int i = 0; i < n; ++i) {
    if (-wins[i].first != n - 1 - i) return std::nullopt;
  }
  return LinearOrder(c.ground(), std::move(ranking));
}

std::optional<GammaStar> gamma_star(const ChoiceFunction& c) {
  auto order = binary_order(c);
  if (!order) return std::nullopt;
  const Item bottom = order->ranking().back();
  auto gamma = ChoiceCorrespondence::from_rule(c.ground(), [&](ItemSet a) {
    return a == ItemSet::single(bottom) ? a : a.without(bottom);
  });
  if (!is_filter(gamma, FilterKind::SelectiveSalient, *order)) return std::nullopt;
  bool reproduces = true;
  for_each_menu(c.size(), [&](ItemSet a) {
    if (order->best(gamma(a)) != c(a)) reproduces = false;
  });
  if (!reproduces) return std::nullopt;
  return GammaStar{std::move(gamma), std::move(*order)};
}

ClassFlags classify_flags(const ChoiceFunction& c) {
  ClassFlags f;
  f.rat = axiom_alpha(c);
  f.cla = is_cycle_free(reveal(c, RevealedKind::P));
  f.cola = is_cycle_free(reveal(c, RevealedKind::Rc));
  f.csla = is_asymmetric(reveal(c, RevealedKind::Salience));
  f.cssla = gamma_star(c).has_value();
  f.ccla = is_cycle_free(reveal(c, RevealedKind::Fc));
  f.pilc = is_cycle_free(reveal(c, RevealedKind::PPI));
  return f;
}

ClassMembership classify(const ChoiceFunction& c) {
  ClassMembership m;

  ClassVerdict rat;
  rat.criterion = "no switch (contraction consistency)";
  rat.member = axiom_alpha(c);
  if (!rat.member) {
    const auto switches = find_switches(c, true);
    if (!switches.empty()) rat.first_switch = switches.front();
  }
  m.rat = rat.member;
  m.verdicts.emplace_back(ModelClass::RAT, std::move(rat));

  auto cla = cycle_verdict(reveal(c, RevealedKind::P), "P asymmetric and acyclic");
  m.cla = cla.member;
  m.verdicts.emplace_back(ModelClass::CLA, std::move(cla));

  auto cola = cycle_verdict(reveal(c, RevealedKind::Rc), "Rc asymmetric and acyclic");
  m.cola = cola.member;
  m.verdicts.emplace_back(ModelClass::COLA, std::move(cola));

  ClassVerdict csla;
  csla.criterion = "salience asymmetric";
  csla.relation = reveal(c, RevealedKind::Salience);
  csla.pair = symmetric_pair(*csla.relation);
  csla.member = !csla.pair.has_value();
  m.csla = csla.member;
  m.verdicts.emplace_back(ModelClass::CSLA, std::move(csla));

  ClassVerdict cssla;
  cssla.criterion = "binary-choice order with the drop-the-worst filter";
  cssla.member = gamma_star(c).has_value();
  if (!cssla.member) {
    const auto switches = find_switches(c, true);
    if (!switches.empty()) cssla.first_switch = switches.front();
  }
  m.cssla = cssla.member;
  m.verdicts.emplace_back(ModelClass::CSSLA, std::move(cssla));

  auto ccla = cycle_verdict(reveal(c, RevealedKind::Fc), "Fc asymmetric and acyclic");
  m.ccla = ccla.member;
  m.verdicts.emplace_back(ModelClass::CCLA, std::move(ccla));

  auto pilc = cycle_verdict(reveal(c, RevealedKind::PPI), "PPI asymmetric and acyclic");
  m.pilc = pilc.member;
  m.verdicts.emplace_back(ModelClass::PILC, std::move(pilc));

  return m;
}

}  // namespace limattn
