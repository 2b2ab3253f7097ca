#include "limattn/relations.hpp"

namespace limattn {

const char* to_string(RevealedKind kind) {
  switch (kind) {
    case RevealedKind::P: return "P";
    case RevealedKind::Rc: return "Rc";
    case RevealedKind::Salience: return "salience";
    case RevealedKind::Fc: return "Fc";
    case RevealedKind::PPI: return "PPI";
    case RevealedKind::Ptilde: return "Ptilde";
  }
  return "?";
}

std::optional<RevealedKind> parse_revealed_kind(std::string_view text) {
  for (RevealedKind kind : kAllRevealedKinds) {
    if (text == to_string(kind)) return kind;
  }
  return std::nullopt;
}

namespace {

Relation reveal_p(const ChoiceFunction& c) {
  Relation r(c.ground());
  for_each_menu(c.size(), [&](ItemSet a) {
    const Item x = c(a);
    for (Item y : a.without(x)) {
      if (c(a.without(y)) != x) r.add(x, y);
    }
  });
  return r;
}

// Clauses (ii) and (iii) of the shortlist relation.  B plays A ∪ x.
Relation reveal_rc(const ChoiceFunction& c) {
  Relation r = reveal_p(c);  // clause (i) coincides with P
  for_each_menu(c.size(), [&](ItemSet b) {
    if (b.size() < 2) return;
    const Item chosen = c(b);
    for (Item x : b) {
      const ItemSet rest = b.without(x);
      // (ii) y = c(A ∪ x) and x = c(xy)
      if (chosen != x && c(x, chosen) == x) r.add(x, chosen);
      // (iii) y ≠ c(A ∪ x), y = c(xy), y = c(A)
      const Item y = c(rest);
      if (y != chosen && c(x, y) == y) r.add(x, y);
    }
  });
  return r;
}

// Clauses (i) and (iii) of the follow relation.  B plays A ∪ y.
Relation reveal_fc(const ChoiceFunction& c) {
  Relation r = reveal_p(c);  // clause (ii) coincides with P
  for_each_menu(c.size(), [&](ItemSet b) {
    if (b.size() < 2) return;
    const Item chosen = c(b);
    for (Item y : b) {
      const ItemSet rest = b.without(y);
      // (i) x = c(A ∪ y) and y = c(xy)
      if (chosen != y && c(chosen, y) == y) r.add(chosen, y);
      // (iii) x ≠ c(A ∪ y), x = c(xy), x = c(A)
      const Item x = c(rest);
      if (x != chosen && c(x, y) == x) r.add(x, y);
    }
  });
  return r;
}

Relation reveal_salience(const ChoiceFunction& c) {
  Relation r(c.ground());
  for_each_menu(c.size(), [&](ItemSet a) {
    const Item chosen = c(a);
    for (Item x : a.without(chosen)) {
      if (c(a.without(x)) == chosen) continue;
      for (Item y : a.without(x)) r.add(x, y);
    }
  });
  return r;
}

Relation reveal_ptilde(const ChoiceFunction& c) {
  // (A∖y, A) is a switch iff y ≠ c(A) ≠ c(A∖y); every other member of A is
  // then related to y.
  Relation r(c.ground());
  for_each_menu(c.size(), [&](ItemSet a) {
    const Item chosen = c(a);
    for (Item y : a.without(chosen)) {
      if (c(a.without(y)) == chosen) continue;
      for (Item x : a.without(y)) r.add(x, y);
    }
  });
  return r;
}

Relation reveal_ppi(const ChoiceFunction& c) {
  const int n = c.size();
  const std::size_t menus = std::size_t{1} << n;
  Relation r(c.ground());
  std::vector<std::uint8_t> above(menus);
  for (Item y = 0; y < n; ++y) {
    // marked[B] for menus B ∋ y where removing y changes the choice; then
    // a superset-OR sweep yields, for each A, whether some B ⊇ A is marked.
    std::fill(above.begin(), above.end(), 0);
    for_each_menu(n, [&](ItemSet b) {
      if (b.contains(y) && b.size() >= 2 && c(b) != c(b.without(y))) {
        above[b.bits()] = 1;
      }
    });
    for (int bit = 0; bit < n; ++bit) {
      for (Mask m = 0; m < menus; ++m) {
        if (!((m >> bit) & 1U)) above[m] |= above[m | (Mask{1} << bit)];
      }
    }
    for_each_menu(n, [&](ItemSet a) {
      if (!a.contains(y)) return;
      const Item x = c(a);
      // B = A is allowed.  Only strict supersets breaks the π-LC
      // characterization already on three items.
      if (x != y && above[a.bits()]) r.add(x, y);
    });
  }
  return r;
}

}  // namespace

Relation reveal(const ChoiceFunction& c, RevealedKind kind) {
  switch (kind) {
    case RevealedKind::P: return reveal_p(c);
    case RevealedKind::Rc: return reveal_rc(c);
    case RevealedKind::Salience: return reveal_salience(c);
    case RevealedKind::Fc: return reveal_fc(c);
    case RevealedKind::PPI: return reveal_ppi(c);
    case RevealedKind::Ptilde: return reveal_ptilde(c);
  }
  return Relation(c.ground());
}

bool is_switch(const ChoiceFunction& c, Menu inner, Menu outer) {
  if (inner.empty() || !inner.subset_of(outer)) return false;
  const Item outer_choice = c(outer);
  return inner.contains(outer_choice) && c(inner) != outer_choice;
}

std::vector<Switch> find_switches(const ChoiceFunction& c, bool minimal_only) {
  std::vector<Switch> out;
  for_each_menu(c.size(), [&](ItemSet outer) {
    const Item chosen = c(outer);
    if (minimal_only) {
      // Inner menus A∖x in ascending encoding are produced by removing the
      // highest-indexed element first.
      for (int x = c.size() - 1; x >= 0; --x) {
        if (!outer.contains(x) || x == chosen) continue;
        const ItemSet inner = outer.without(x);
        if (c(inner) != chosen) out.push_back({inner, outer, c(inner), chosen});
      }
      return;
    }
    for_each_subset(outer, [&](ItemSet inner) {
      if (inner != outer && inner.contains(chosen) && c(inner) != chosen) {
        out.push_back({inner, outer, c(inner), chosen});
      }
    });
  });
  return out;
}

Switch reduce_switch(const ChoiceFunction& c, const Switch& s) {
  if (!is_switch(c, s.inner, s.outer)) {
    throw Error(ErrorCode::NotASwitch,
                "(" + c.ground().describe(s.inner) + ", " +
                    c.ground().describe(s.outer) + ") is not a switch");
  }
  const Item kept = c(s.outer);
  ItemSet current = s.outer;
  for (Item z : s.removed()) {
    const ItemSet next = current.without(z);
    if (c(next) != kept) return {next, current, c(next), kept};
    current = next;
  }
  // Unreachable: the walk ends at s.inner, whose choice differs from kept.
  throw Error(ErrorCode::VerificationFailed, "switch reduction did not terminate");
}

}  // namespace limattn
