#ifndef LIMATTN_EXPLAIN_HPP
#define LIMATTN_EXPLAIN_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "limattn/axioms.hpp"
#include "limattn/classify.hpp"
#include "limattn/forward.hpp"

namespace limattn {

enum class ExplainTarget { CLA, COLA, CSLA, CSSLA, CCLA, CER };

const char* to_string(ExplainTarget target);
std::optional<ExplainTarget> parse_explain_target(std::string_view text);

// A generative model that reproduces a choice function.  For filter-based
// targets `certified` names the filter property checked on the model's Γ;
// COLA explanations are shortlist models whose Γ = max(·, >) is certified
// optimal, and CER explanations carry no filter.
struct Explanation {
  ExplainTarget target;
  std::optional<FilterKind> certified;
  ModelSpec model;
};

// Γ_▷(A) = {x ∈ A : c(A) ▷ x} ∪ {c(A)}.
ChoiceCorrespondence gamma_triangle(const ChoiceFunction& c, const LinearOrder& order);

// Throws Error(NotInClass) if c is outside the target class, and
// Error(VerificationFailed) / Error(ConstructionExhausted) if the built model
// does not check out.
Explanation explain(const ChoiceFunction& c, ExplainTarget target);

// Preference shared by the salient, CER and temptation readings of a CSLA
// choice: a linear extension of Ptilde that orients the two least
// conspicuous items as c does.  Throws Error(NotInClass) unless c is CSLA.
LinearOrder common_preference(const ChoiceFunction& c);

// Conspicuity order ≫ used by the CER construction.
LinearOrder conspicuity_order(const ChoiceFunction& c);

// x > y iff Γ({x, y}) = {x}, checked against Γ(A) = max(A, >) on every menu.
// Throws Error(NotRationalizable) naming the failed axiom, or
// Error(VerificationFailed).
Relation quasi_transitive_rationalize(const ChoiceCorrespondence& gamma);

enum class FactKind {
  Pref,            // a ▷ b
  ShortlistDom,    // a > b in the first-stage order
  ShortlistMax,    // a ∈ max(menu, >)
  ListEdge,        // a comes before b on every rationalizing list
  Considered,      // a ∈ Γ(menu)
  ConsideredIfAttention,  // a ∈ Γ(menu) when Γ is also an attention filter
  NotConsidered,   // a ∉ Γ(menu)
  WorstInMenu,     // a = min(menu, ▷)
  MostConspicuous, // a = max(menu, ≫)
  FilterChanged,   // Γ(menu∖a) ≠ Γ(menu)∖a
  FilterDiffers,   // Γ(menu∖a) ≠ Γ(menu)
  ExistsBetter,    // some z ∈ menu∖a has z ▷ a
  MostTempting,    // v(a) = max of v over menu
  TemptationTradeoff,  // u and v rank a = c(menu), b = c(menu∖x) oppositely
};

const char* to_string(FactKind kind);

struct WelfareFact {
  FactKind kind;
  Item a = -1;
  Item b = -1;
  Menu menu;
  // The minimal switch, or for list patterns the pair (menu∖b, menu), that
  // produced the fact.
  Switch source;
  bool from_pattern = false;

  bool same_claim(const WelfareFact& other) const;
  std::string describe(const GroundSet& ground) const;
};

// Facts implied by every representation of the class; `cls` is COLA, CSLA
// or CCLA.  Deduplicated, in order of first derivation.  Throws
// Error(NotInClass) when c is outside the class, Error(InvalidArgument) for
// other classes.
std::vector<WelfareFact> welfare_report(const ChoiceFunction& c, ModelClass cls);

}  // namespace limattn

#endif  // LIMATTN_EXPLAIN_HPP
