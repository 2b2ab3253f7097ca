#ifndef LIMATTN_AXIOMS_HPP
#define LIMATTN_AXIOMS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "limattn/core.hpp"

namespace limattn {

// Contraction consistency: no switch exists.
bool axiom_alpha(const ChoiceFunction& c);

// Axiom of Revealed Temptation: every menu B has a member x such that no
// pair x ∈ B′ ⊊ B″ ⊆ B is a switch.
bool art(const ChoiceFunction& c);

enum class CorrAxiom { Alpha, Gamma, Delta };

const char* to_string(CorrAxiom axiom);

// First failing instance of a universally quantified condition.  Menus are
// scanned in ascending set encoding, so the witness is deterministic.
struct Violation {
  std::string condition;  // e.g. "(ii)(b)", "alpha", "path-independence"
  Menu menu;              // primary menu (B, or S for path independence)
  ItemSet other;          // secondary menu when the condition has one
  Item element = -1;      // the removed / tested element
  Item partner = -1;      // second element, when the condition names one

  std::string describe(const GroundSet& ground) const;
};

struct Check {
  bool holds = true;
  std::optional<Violation> witness;

  explicit operator bool() const { return holds; }
  static Check pass() { return {}; }
  static Check fail(Violation v) { return {false, std::move(v)}; }
};

Check corr_axiom(const ChoiceCorrespondence& gamma, CorrAxiom which);

enum class FilterKind {
  Attention,
  OptimalAttention,
  Salient,
  SelectiveSalient,
  Competitive,
  Competition,
  PathIndependent,
};

const char* to_string(FilterKind kind);
std::optional<FilterKind> parse_filter_kind(std::string_view text);
bool needs_order(FilterKind kind);

// Exact universal check of the filter property.  Kinds that depend on the
// preference (Salient, SelectiveSalient, Competitive) throw
// Error(MissingOrder) when `order` is null; other kinds ignore it.
Check is_filter(const ChoiceCorrespondence& gamma, FilterKind kind,
                const LinearOrder* order = nullptr);

inline Check is_filter(const ChoiceCorrespondence& gamma, FilterKind kind,
                       const LinearOrder& order) {
  return is_filter(gamma, kind, &order);
}

// The three conditions that make up an optimal attention filter, checked
// separately:
//   (a) x ∉ Γ(B) implies Γ(B) ⊇ Γ(B∖x);
//   (b) y ∈ Γ(xy) ∩ Γ(B∖x) implies y ∈ Γ(B)   (y ≠ x);
//   (c) Γ(B)∖x ⊆ Γ(B∖x).
struct OptimalConditions {
  Check a;
  Check b;
  Check c;
};

OptimalConditions optimal_conditions(const ChoiceCorrespondence& gamma);

}  // namespace limattn

#endif  // LIMATTN_AXIOMS_HPP
