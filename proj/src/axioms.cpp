#include "limattn/axioms.hpp"

#include <vector>

namespace limattn {

bool axiom_alpha(const ChoiceFunction& c) {
  // By the minimal-switch reduction it suffices to look at one-element
  // removals.
  bool ok = true;
  for_each_menu(c.size(), [&](ItemSet a) {
    if (!ok) return;
    const Item chosen = c(a);
    for (Item x : a.without(chosen)) {
      if (c(a.without(x)) != chosen) {
        ok = false;
        return;
      }
    }
  });
  return ok;
}

bool art(const ChoiceFunction& c) {
  const int n = c.size();
  const std::size_t menus = std::size_t{1} << n;
  // tainted[B]: members x of B for which some switch (B′, B″) inside B has
  // x ∈ B′.  Seed with each switch at its outer menu, then OR upward.
  std::vector<Mask> tainted(menus, 0);
  for_each_menu(n, [&](ItemSet outer) {
    const Item chosen = c(outer);
    for_each_subset(outer, [&](ItemSet inner) {
      if (inner != outer && inner.contains(chosen) && c(inner) != chosen) {
        tainted[outer.bits()] |= inner.bits();
      }
    });
  });
  for (int bit = 0; bit < n; ++bit) {
    for (Mask m = 0; m < menus; ++m) {
      if ((m >> bit) & 1U) tainted[m] |= tainted[m & ~(Mask{1} << bit)];
    }
  }
  for (Mask m = 1; m < menus; ++m) {
    if (tainted[m] == m) return false;
  }
  return true;
}

const char* to_string(CorrAxiom axiom) {
  switch (axiom) {
    case CorrAxiom::Alpha: return "alpha";
    case CorrAxiom::Gamma: return "gamma";
    case CorrAxiom::Delta: return "delta";
  }
  return "?";
}

std::string Violation::describe(const GroundSet& ground) const {
  std::string out = condition + " fails at menu " + ground.describe(menu);
  if (!other.empty()) out += " / " + ground.describe(other);
  if (element >= 0) out += ", element " + ground.label(element);
  if (partner >= 0) out += ", partner " + ground.label(partner);
  return out;
}

namespace {

Violation violation(std::string condition, Menu menu, ItemSet other = {},
                    Item element = -1, Item partner = -1) {
  return Violation{std::move(condition), menu, other, element, partner};
}

Check check_alpha(const ChoiceCorrespondence& g, const char* name) {
  std::optional<Violation> found;
  for_each_menu(g.size(), [&](ItemSet b) {
    if (found) return;
    const ItemSet gb = g(b);
    for_each_subset(b, [&](ItemSet a) {
      if (found) return;
      const ItemSet lost = (gb & a) - g(a);
      if (!lost.empty()) found = violation(name, b, a, lost.first());
    });
  });
  return found ? Check::fail(*found) : Check::pass();
}

Check check_gamma(const ChoiceCorrespondence& g) {
  const Mask end = Mask{1} << g.size();
  for (Mask am = 1; am < end; ++am) {
    const ItemSet a(am);
    for (Mask bm = 1; bm < end; ++bm) {
      const ItemSet b(bm);
      const ItemSet lost = (g(a) & g(b)) - g(a | b);
      if (!lost.empty()) return Check::fail(violation("gamma", a, b, lost.first()));
    }
  }
  return Check::pass();
}

Check check_delta(const ChoiceCorrespondence& g) {
  std::optional<Violation> found;
  for_each_menu(g.size(), [&](ItemSet b) {
    if (found || g(b).size() != 1) return;
    const Item only = g(b).first();
    for_each_subset(b, [&](ItemSet a) {
      if (found) return;
      const ItemSet ga = g(a);
      if (ga.contains(only) && ga.size() >= 2) {
        found = violation("delta", b, a, only, ga.without(only).first());
      }
    });
  });
  return found ? Check::fail(*found) : Check::pass();
}

// Attention-filter condition; also condition (a) of competitive filters.
Check check_attention(const ChoiceCorrespondence& g, const char* name) {
  std::optional<Violation> found;
  for_each_menu(g.size(), [&](ItemSet b) {
    if (found || b.size() < 2) return;
    for (Item x : b - g(b)) {
      if (g(b) != g(b.without(x))) {
        found = violation(name, b, b.without(x), x);
        return;
      }
    }
  });
  return found ? Check::fail(*found) : Check::pass();
}

Check check_optimal_a(const ChoiceCorrespondence& g) {
  std::optional<Violation> found;
  for_each_menu(g.size(), [&](ItemSet b) {
    if (found || b.size() < 2) return;
    for (Item x : b - g(b)) {
      if (!g(b.without(x)).subset_of(g(b))) {
        found = violation("(ii)(a)", b, b.without(x), x);
        return;
      }
    }
  });
  return found ? Check::fail(*found) : Check::pass();
}

Check check_optimal_b(const ChoiceCorrespondence& g) {
  std::optional<Violation> found;
  for_each_menu(g.size(), [&](ItemSet b) {
    if (found || b.size() < 2) return;
    for (Item x : b) {
      const ItemSet rest = b.without(x);
      for (Item y : rest) {
        if (g(ItemSet::of({x, y})).contains(y) && g(rest).contains(y) &&
            !g(b).contains(y)) {
          found = violation("(ii)(b)", b, rest, x, y);
          return;
        }
      }
    }
  });
  return found ? Check::fail(*found) : Check::pass();
}

Check check_optimal_c(const ChoiceCorrespondence& g) {
  std::optional<Violation> found;
  for_each_menu(g.size(), [&](ItemSet b) {
    if (found || b.size() < 2) return;
    for (Item x : b) {
      const ItemSet lost = g(b).without(x) - g(b.without(x));
      if (!lost.empty()) {
        found = violation("(ii)(c)", b, b.without(x), x, lost.first());
        return;
      }
    }
  });
  return found ? Check::fail(*found) : Check::pass();
}

Check check_salient(const ChoiceCorrespondence& g, const LinearOrder& order,
                    bool selective) {
  const char* name = selective ? "selective-salient" : "salient";
  std::optional<Violation> found;
  for_each_menu(g.size(), [&](ItemSet b) {
    if (found || b.size() < 2) return;
    const Item worst = order.worst(b);
    const Item top_considered = order.best(g(b));
    for (Item x : b) {
      if (x == top_considered || (!selective && x == worst)) continue;
      if (g(b).without(x) != g(b.without(x))) {
        found = violation(name, b, b.without(x), x);
        return;
      }
    }
  });
  return found ? Check::fail(*found) : Check::pass();
}

Check check_competitive(const ChoiceCorrespondence& g, const LinearOrder& order) {
  if (Check a = check_attention(g, "competitive (a)"); !a) return a;
  std::optional<Violation> found;
  for_each_menu(g.size(), [&](ItemSet a) {
    if (found || a.size() < 2) return;
    const Item y = order.best(a);
    const Item x = order.best(g(a.without(y)));
    const bool in_pair = g(ItemSet::of({x, y})).contains(y);
    if (in_pair != g(a).contains(y)) {
      found = violation("competitive (b)", a, ItemSet::of({x, y}), y, x);
    }
  });
  return found ? Check::fail(*found) : Check::pass();
}

Check check_path_independent(const ChoiceCorrespondence& g) {
  const Mask end = Mask{1} << g.size();
  for (Mask sm = 1; sm < end; ++sm) {
    const ItemSet s(sm);
    const ItemSet gs = g(s);
    for (Mask tm = 1; tm < end; ++tm) {
      const ItemSet t(tm);
      if (g(s | t) != g(gs | t)) {
        return Check::fail(violation("path-independence", s, t));
      }
    }
  }
  return Check::pass();
}

}  // namespace

Check corr_axiom(const ChoiceCorrespondence& gamma, CorrAxiom which) {
  switch (which) {
    case CorrAxiom::Alpha: return check_alpha(gamma, "alpha");
    case CorrAxiom::Gamma: return check_gamma(gamma);
    case CorrAxiom::Delta: return check_delta(gamma);
  }
  return Check::pass();
}

const char* to_string(FilterKind kind) {
  switch (kind) {
    case FilterKind::Attention: return "attention";
    case FilterKind::OptimalAttention: return "optimal";
    case FilterKind::Salient: return "salient";
    case FilterKind::SelectiveSalient: return "selective-salient";
    case FilterKind::Competitive: return "competitive";
    case FilterKind::Competition: return "competition";
    case FilterKind::PathIndependent: return "path-independent";
  }
  return "?";
}

std::optional<FilterKind> parse_filter_kind(std::string_view text) {
  for (FilterKind kind :
       {FilterKind::Attention, FilterKind::OptimalAttention, FilterKind::Salient,
        FilterKind::SelectiveSalient, FilterKind::Competitive,
        FilterKind::Competition, FilterKind::PathIndependent}) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

bool needs_order(FilterKind kind) {
  return kind == FilterKind::Salient || kind == FilterKind::SelectiveSalient ||
         kind == FilterKind::Competitive;
}

OptimalConditions optimal_conditions(const ChoiceCorrespondence& gamma) {
  return {check_optimal_a(gamma), check_optimal_b(gamma),
          check_optimal_c(gamma)};
}

Check is_filter(const ChoiceCorrespondence& gamma, FilterKind kind,
                const LinearOrder* order) {
  if (needs_order(kind) && order == nullptr) {
    throw Error(ErrorCode::MissingOrder,
                std::string("filter kind '") + to_string(kind) +
                    "' needs a preference order");
  }
  if (order != nullptr && needs_order(kind) && !(order->ground() == gamma.ground())) {
    throw Error(ErrorCode::InvalidArgument,
                "order and correspondence use different ground sets");
  }
  switch (kind) {
    case FilterKind::Attention: return check_attention(gamma, "attention");
    case FilterKind::OptimalAttention: {
      const auto conds = optimal_conditions(gamma);
      for (const Check* part : {&conds.a, &conds.b, &conds.c}) {
        if (!*part) return *part;
      }
      return Check::pass();
    }
    case FilterKind::Salient: return check_salient(gamma, *order, false);
    case FilterKind::SelectiveSalient: return check_salient(gamma, *order, true);
    case FilterKind::Competitive: return check_competitive(gamma, *order);
    case FilterKind::Competition: return check_alpha(gamma, "competition");
    case FilterKind::PathIndependent: return check_path_independent(gamma);
  }
  return Check::pass();
}

}  // namespace limattn
