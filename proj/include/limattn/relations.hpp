#ifndef LIMATTN_RELATIONS_HPP
#define LIMATTN_RELATIONS_HPP

#include <optional>
#include <string_view>
#include <vector>

#include "limattn/core.hpp"

namespace limattn {

// Revealed relations computed from observed choices.
//
//   P         x P y   iff some menu A ∋ x,y has x = c(A) ≠ c(A∖y).
//   Rc        shortlist-revealed relation (three clauses).
//   Salience  x ⊨ y   iff (A∖x, A) is a minimal switch for some A ∋ x,y.
//   Fc        x is revealed to follow y (three clauses).
//   PPI       x P^PI y iff x,y ∈ A ⊆ B with x = c(A) and c(B) ≠ c(B∖y).
//   Ptilde    x P̃ y   iff some A ∋ x,y makes (A∖y, A) a switch.
//
// The three-clause relations quantify over menus A that do not contain the
// adjoined element.
enum class RevealedKind { P, Rc, Salience, Fc, PPI, Ptilde };

inline constexpr RevealedKind kAllRevealedKinds[] = {
    RevealedKind::P,  RevealedKind::Rc,  RevealedKind::Salience,
    RevealedKind::Fc, RevealedKind::PPI, RevealedKind::Ptilde};

const char* to_string(RevealedKind kind);
std::optional<RevealedKind> parse_revealed_kind(std::string_view text);

Relation reveal(const ChoiceFunction& c, RevealedKind kind);

bool is_switch(const ChoiceFunction& c, Menu inner, Menu outer);

// All switches, outer menu ascending in set encoding, then inner ascending.
std::vector<Switch> find_switches(const ChoiceFunction& c, bool minimal_only);

// Minimal switch nested inside s: returns (C∖z, C) with
// s.inner ⊆ C∖z ⊆ C ⊆ s.outer.  Walks from the outer menu toward the inner
// one, dropping the surplus elements in label order, and stops at the first
// drop that changes the choice.  Throws Error(NotASwitch).
Switch reduce_switch(const ChoiceFunction& c, const Switch& s);

}  // namespace limattn

#endif  // LIMATTN_RELATIONS_HPP
