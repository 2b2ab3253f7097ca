#include "limattn/explain.hpp"

#include <algorithm>

namespace limattn {

const char* to_string(ExplainTarget target) {
  switch (target) {
    case ExplainTarget::CLA: return "cla";
    case ExplainTarget::COLA: return "cola";
    case ExplainTarget::CSLA: return "csla";
    case ExplainTarget::CSSLA: return "cssla";
    case ExplainTarget::CCLA: return "ccla";
    case ExplainTarget::CER: return "cer";
  }
  return "?";
}

std::optional<ExplainTarget> parse_explain_target(std::string_view text) {
  for (ExplainTarget t : {ExplainTarget::CLA, ExplainTarget::COLA, ExplainTarget::CSLA,
                          ExplainTarget::CSSLA, ExplainTarget::CCLA, ExplainTarget::CER}) {
    if (text == to_string(t)) return t;
  }
  return std::nullopt;
}

ChoiceCorrespondence gamma_triangle(const ChoiceFunction& c, const LinearOrder& order) {
  return ChoiceCorrespondence::from_rule(c.ground(), [&](ItemSet a) {
    const Item chosen = c(a);
    return (a & order.below(chosen)).with(chosen);
  });
}

namespace {

[[noreturn]] void not_in_class(const char* cls) {
  throw Error(ErrorCode::NotInClass, std::string("choice function is not ") + cls);
}

void require_reproduces(const ChoiceFunction& c, const ModelSpec& model, const char* what) {
  if (!(simulate(model) == c)) {
    throw Error(ErrorCode::VerificationFailed,
                std::string(what) + " construction does not reproduce the choices");
  }
}

void require_filter(const ChoiceCorrespondence& gamma, FilterKind kind,
                    const LinearOrder& order, const char* what) {
  const Check check = is_filter(gamma, kind, order);
  if (!check) {
    throw Error(ErrorCode::VerificationFailed,
                std::string(what) + " construction is not a " + to_string(kind) +
                    " filter: " + check.witness->describe(gamma.ground()));
  }
}

LinearOrder extend_or_fail(const Relation& r, const char* what) {
  try {
    return szpilrajn_extend(r);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::CyclicRelation) throw;
    throw Error(ErrorCode::VerificationFailed,
                std::string(what) + ": relation to extend has a cycle");
  }
}

Explanation filter_explanation(const ChoiceFunction& c, ExplainTarget target,
                               FilterKind kind, const LinearOrder& order) {
  auto gamma = gamma_triangle(c, order);
  require_filter(gamma, kind, order, to_string(target));
  Explanation e{target, kind, FilterOrderModel{std::move(gamma), order}};
  require_reproduces(c, e.model, to_string(target));
  return e;
}

// --- shortlist search ------------------------------------------------------

bool shortlist_fits(const ChoiceFunction& c, const Relation& partial,
                    const LinearOrder& order) {
  bool ok = true;
  for_each_menu(c.size(), [&](ItemSet a) {
    if (!ok) return;
    const ItemSet shortlist = max_elements(a, partial);
    if (shortlist.empty() || order.best(shortlist) != c(a)) ok = false;
  });
  return ok;
}

std::optional<Relation> closed_fit(const ChoiceFunction& c, const Relation& r,
                                   const LinearOrder& order) {
  Closure closed = transitive_closure(r);
  if (closed.cyclic || !shortlist_fits(c, closed.relation, order)) return std::nullopt;
  return std::move(closed.relation);
}

constexpr int kMaxSearchItems = 6;
constexpr std::uint64_t kMaxSearchSteps = std::uint64_t{1} << 24;

// Transitive relations containing the seed, by increasing edge count.  Only
// pairs (x, y) with y never chosen next to x can appear.
std::optional<Relation> search_shortlist(const ChoiceFunction& c, const Relation& seed,
                                         const LinearOrder& order) {
  const int n = c.size();
  if (n > kMaxSearchItems) return std::nullopt;
  std::array<Mask, kMaxItems> chosen_with{};  // chosen_with[x]: c(A) for A ∋ x
  for_each_menu(n, [&](ItemSet a) {
    for (Item x : a) chosen_with[x] |= Mask{1} << c(a);
  });
  std::vector<std::pair<Item, Item>> extra;
  for (Item x = 0; x < n; ++x) {
    for (Item y = 0; y < n; ++y) {
      if (x == y || ((chosen_with[x] >> y) & 1U)) continue;
      if (!seed.has(x, y)) extra.emplace_back(x, y);
    }
  }
  const int m = static_cast<int>(extra.size());
  std::uint64_t steps = 0;
  for (int k = 0; k <= m; ++k) {
    // Combinations of k extra edges in lexicographic order.
    std::vector<int> pick(k);
    for (int i = 0; i < k; ++i) pick[i] = i;
    while (true) {
      if (++steps > kMaxSearchSteps) return std::nullopt;
      Relation r = seed;
      for (int i : pick) r.add(extra[i].first, extra[i].second);
      if (relation_props(r).transitive && is_cycle_free(r) &&
          shortlist_fits(c, r, order)) {
        return r;
      }
      int i = k - 1;
      while (i >= 0 && pick[i] == m - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return std::nullopt;
}

Relation cola_seed(const ChoiceFunction& c) {
  Relation seed(c.ground());
  for (const Switch& s : find_switches(c, true)) {
    const Item x = s.removed().first();
    seed.add(x, s.inner_choice);
  }
  return seed;
}

Explanation explain_cola(const ChoiceFunction& c) {
  const LinearOrder order = extend_or_fail(reveal(c, RevealedKind::Rc), "cola");
  const Relation seed = cola_seed(c);
  // x > y whenever x wins the pair although y ranks higher.  Pairs force
  // exactly these edges, and in practice nothing more is needed.
  Relation binary(c.ground());
  for (Item x = 0; x < c.size(); ++x) {
    for (Item y = 0; y < c.size(); ++y) {
      if (x != y && order.prefers(y, x) && c(x, y) == x) binary.add(x, y);
    }
  }
  binary |= seed;
  std::optional<Relation> partial = closed_fit(c, binary, order);
  if (!partial) partial = closed_fit(c, seed, order);
  if (!partial) {
    // Let each choice dominate the items of its menu ranked above it.
    Relation grown = seed;
    for_each_menu(c.size(), [&](ItemSet a) {
      const Item chosen = c(a);
      for (Item y : a) {
        if (y != chosen && order.prefers(y, chosen)) grown.add(chosen, y);
      }
    });
    partial = closed_fit(c, grown, order);
  }
  if (!partial) partial = search_shortlist(c, seed, order);
  if (!partial) {
    throw Error(ErrorCode::ConstructionExhausted,
                "no first-stage order found for the cola explanation");
  }
  const Relation& p = *partial;
  auto gamma = ChoiceCorrespondence::from_rule(
      c.ground(), [&](ItemSet a) { return max_elements(a, p); });
  const Check optimal = is_filter(gamma, FilterKind::OptimalAttention);
  if (!optimal) {
    throw Error(ErrorCode::VerificationFailed,
                "cola filter is not optimal: " + optimal.witness->describe(c.ground()));
  }
  Explanation e{ExplainTarget::COLA, FilterKind::OptimalAttention,
                ShortlistModel{p, order}};
  require_reproduces(c, e.model, "cola");
  return e;
}

Explanation explain_cssla(const ChoiceFunction& c) {
  auto star = gamma_star(c);
  if (!star) not_in_class("cssla");
  Explanation e{ExplainTarget::CSSLA, FilterKind::SelectiveSalient,
                FilterOrderModel{std::move(star->gamma), std::move(star->order)}};
  require_reproduces(c, e.model, "cssla");
  return e;
}

Explanation explain_ccla(const ChoiceFunction& c) {
  const Closure closed = transitive_closure(reveal(c, RevealedKind::Fc));
  if (closed.cyclic) not_in_class("ccla");
  const LinearOrder order = extend_or_fail(closed.relation, "ccla");
  Explanation e = filter_explanation(c, ExplainTarget::CCLA, FilterKind::Competitive, order);
  if (!check_list_rational(c, order)) {
    throw Error(ErrorCode::VerificationFailed, "ccla order is not a rationalizing list");
  }
  return e;
}

Explanation explain_cer(const ChoiceFunction& c) {
  const LinearOrder conspicuity = conspicuity_order(c);
  const int n = c.size();
  const Item second_worst = conspicuity.ranking()[n - 2];
  std::vector<Relation> beats(n, Relation(c.ground()));
  for_each_menu(n, [&](ItemSet a) {
    const Item chosen = c(a);
    Relation& r = beats[conspicuity.best(a)];
    for (Item y : a.without(chosen)) r.add(chosen, y);
  });
  std::vector<LinearOrder> refs;
  for (Item k = 0; k < n; ++k) {
    if (k == second_worst) {
      refs.push_back(common_preference(c));
      continue;
    }
    const Closure closed = transitive_closure(beats[k]);
    if (closed.cyclic) {
      throw Error(ErrorCode::ConstructionExhausted,
                  "reference relation for " + c.ground().label(k) + " is cyclic");
    }
    refs.push_back(szpilrajn_extend(closed.relation));
  }
  Explanation e{ExplainTarget::CER, std::nullopt, CerModel{conspicuity, std::move(refs)}};
  require_reproduces(c, e.model, "cer");
  return e;
}

}  // namespace

LinearOrder conspicuity_order(const ChoiceFunction& c) {
  if (!classify_flags(c).csla) not_in_class("csla");
  return extend_or_fail(reveal(c, RevealedKind::Salience), "conspicuity");
}

LinearOrder common_preference(const ChoiceFunction& c) {
  const LinearOrder conspicuity = conspicuity_order(c);
  const auto& rank = conspicuity.ranking();
  const Item a = rank[rank.size() - 1];
  const Item b = rank[rank.size() - 2];
  Relation r = reveal(c, RevealedKind::Ptilde);
  const Item winner = c(a, b);
  r.add(winner, winner == a ? b : a);
  return extend_or_fail(r, "common preference");
}

Explanation explain(const ChoiceFunction& c, ExplainTarget target) {
  switch (target) {
    case ExplainTarget::CLA: {
      const Relation p = reveal(c, RevealedKind::P);
      if (!is_cycle_free(p)) not_in_class("cla");
      return filter_explanation(c, target, FilterKind::Attention, szpilrajn_extend(p));
    }
    case ExplainTarget::COLA:
      if (!is_cycle_free(reveal(c, RevealedKind::Rc))) not_in_class("cola");
      return explain_cola(c);
    case ExplainTarget::CSLA: {
      if (!classify_flags(c).csla) not_in_class("csla");
      const LinearOrder order = extend_or_fail(reveal(c, RevealedKind::Ptilde), "csla");
      Explanation e = filter_explanation(c, target, FilterKind::Salient, order);
      require_filter(std::get<FilterOrderModel>(e.model).gamma, FilterKind::Attention,
                     order, "csla");
      return e;
    }
    case ExplainTarget::CSSLA:
      return explain_cssla(c);
    case ExplainTarget::CCLA:
      return explain_ccla(c);
    case ExplainTarget::CER:
      return explain_cer(c);
  }
  throw Error(ErrorCode::InvalidArgument, "unknown explanation target");
}

Relation quasi_transitive_rationalize(const ChoiceCorrespondence& gamma) {
  for (CorrAxiom axiom : {CorrAxiom::Alpha, CorrAxiom::Gamma, CorrAxiom::Delta}) {
    const Check check = corr_axiom(gamma, axiom);
    if (!check) {
      throw Error(ErrorCode::NotRationalizable,
                  std::string("axiom ") + to_string(axiom) + " fails: " +
                      check.witness->describe(gamma.ground()));
    }
  }
  const int n = gamma.size();
  Relation r(gamma.ground());
  for (Item x = 0; x < n; ++x) {
    for (Item y = 0; y < n; ++y) {
      if (x != y && gamma(ItemSet::of({x, y})) == ItemSet::single(x)) r.add(x, y);
    }
  }
  for_each_menu(n, [&](ItemSet a) {
    if (max_elements(a, r) != gamma(a)) {
      throw Error(ErrorCode::VerificationFailed,
                  "pairwise relation does not reproduce the correspondence at " +
                      gamma.ground().describe(a));
    }
  });
  return r;
}

// --- welfare ---------------------------------------------------------------

const char* to_string(FactKind kind) {
  switch (kind) {
    case FactKind::Pref: return "pref";
    case FactKind::ShortlistDom: return "shortlist-dom";
    case FactKind::ShortlistMax: return "shortlist-max";
    case FactKind::ListEdge: return "list-edge";
    case FactKind::Considered: return "considered";
    case FactKind::ConsideredIfAttention: return "considered-if-attention";
    case FactKind::NotConsidered: return "not-considered";
    case FactKind::WorstInMenu: return "worst-in-menu";
    case FactKind::MostConspicuous: return "most-conspicuous";
    case FactKind::FilterChanged: return "filter-changed";
    case FactKind::FilterDiffers: return "filter-differs";
    case FactKind::ExistsBetter: return "exists-better";
    case FactKind::MostTempting: return "most-tempting";
    case FactKind::TemptationTradeoff: return "temptation-tradeoff";
  }
  return "?";
}

bool WelfareFact::same_claim(const WelfareFact& other) const {
  return kind == other.kind && a == other.a && b == other.b && menu == other.menu;
}

std::string WelfareFact::describe(const GroundSet& g) const {
  auto L = [&](Item x) { return g.label(x); };
  const std::string m = g.describe(menu);
  switch (kind) {
    case FactKind::Pref: return L(a) + " is preferred to " + L(b);
    case FactKind::ShortlistDom: return L(a) + " dominates " + L(b) + " in the first stage";
    case FactKind::ShortlistMax: return L(a) + " is shortlisted in " + m;
    case FactKind::ListEdge: return L(a) + " precedes " + L(b) + " on the list";
    case FactKind::Considered: return L(a) + " is considered in " + m;
    case FactKind::ConsideredIfAttention:
      return L(a) + " is considered in " + m + " when the filter is also an attention filter";
    case FactKind::NotConsidered: return L(a) + " is not considered in " + m;
    case FactKind::WorstInMenu: return L(a) + " is the worst item of " + m;
    case FactKind::MostConspicuous: return L(a) + " is the most conspicuous item of " + m;
    case FactKind::FilterChanged:
      return "removing " + L(a) + " from " + m + " changes the rest of the consideration set";
    case FactKind::FilterDiffers:
      return "removing " + L(a) + " from " + m + " changes the consideration set";
    case FactKind::ExistsBetter:
      return "some item of " + m + " other than " + L(a) + " is preferred to " + L(a);
    case FactKind::MostTempting: return L(a) + " is the most tempting item of " + m;
    case FactKind::TemptationTradeoff:
      return "utility and temptation rank " + L(a) + " and " + L(b) + " in opposite ways";
  }
  return "?";
}

namespace {

class FactList {
 public:
  void add(FactKind kind, Item a, Item b, Menu menu, const Switch& source,
           bool pattern = false) {
    WelfareFact f{kind, a, b, menu, source, pattern};
    for (const auto& g : facts_) {
      if (g.same_claim(f)) return;
    }
    facts_.push_back(f);
  }
  std::vector<WelfareFact> take() { return std::move(facts_); }

 private:
  std::vector<WelfareFact> facts_;
};

}  // namespace

std::vector<WelfareFact> welfare_report(const ChoiceFunction& c, ModelClass cls) {
  const ClassFlags flags = classify_flags(c);
  FactList out;
  const auto switches = find_switches(c, true);
  switch (cls) {
    case ModelClass::COLA:
      if (!flags.cola) not_in_class("cola");
      for (const Switch& s : switches) {
        const Item x = s.removed().first();
        const Item d = s.inner_choice;
        const Item a = s.outer_choice;
        out.add(FactKind::ShortlistDom, x, d, {}, s);
        out.add(FactKind::ShortlistMax, x, -1, s.outer, s);
        out.add(FactKind::Pref, d, a, {}, s);
        out.add(FactKind::Pref, a, x, {}, s);
        out.add(FactKind::Considered, x, -1, s.outer, s);
        out.add(FactKind::NotConsidered, d, -1, s.outer, s);
        out.add(FactKind::NotConsidered, d, -1, ItemSet::of({d, x}), s);
        out.add(FactKind::Considered, a, -1, ItemSet::of({a, x}), s);
      }
      break;
    case ModelClass::CSLA:
      if (!flags.csla) not_in_class("csla");
      for (const Switch& s : switches) {
        const Item x = s.removed().first();
        out.add(FactKind::MostTempting, x, -1, s.outer, s);
        out.add(FactKind::TemptationTradeoff, s.outer_choice, s.inner_choice, s.outer, s);
        out.add(FactKind::MostConspicuous, x, -1, s.outer, s);
        out.add(FactKind::FilterChanged, x, -1, s.outer, s);
        // The worst item is exempt from the salient condition, so a bare
        // salient filter may leave x out.
        out.add(FactKind::ConsideredIfAttention, x, -1, s.outer, s);
        out.add(FactKind::WorstInMenu, x, -1, s.outer, s);
      }
      break;
    case ModelClass::CCLA: {
      if (!flags.ccla) not_in_class("ccla");
      for (const Switch& s : switches) {
        const Item x = s.removed().first();
        out.add(FactKind::ListEdge, s.outer_choice, x, {}, s);
        out.add(FactKind::FilterDiffers, x, -1, s.outer, s);
        out.add(FactKind::Considered, x, -1, s.outer, s);
        out.add(FactKind::Pref, s.outer_choice, x, {}, s);
      }
      for_each_menu(c.size(), [&](ItemSet a) {
        if (a.size() < 3) return;
        for (Item y : a) {
          const ItemSet rest = a.without(y);
          for (Item x : rest) {
            const Item pair = c(x, y);
            const bool first = x == pair && x == c(rest) && c(a) == y;
            const bool second = y == pair && c(rest) == x && c(a) == x;
            if (!first && !second) continue;
            const Switch src{rest, a, c(rest), c(a)};
            out.add(FactKind::ListEdge, x, y, {}, src, true);
            out.add(FactKind::ExistsBetter, y, -1, a, src, true);
          }
        }
      });
      break;
    }
    default:
      throw Error(ErrorCode::InvalidArgument,
                  std::string("no welfare report for class ") + to_string(cls));
  }
  return out.take();
}

}  // namespace limattn
