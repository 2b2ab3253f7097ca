#ifndef LIMATTN_CLASSIFY_HPP
#define LIMATTN_CLASSIFY_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "limattn/core.hpp"
#include "limattn/relations.hpp"

namespace limattn {

enum class ModelClass { RAT, CLA, COLA, CSLA, CSSLA, CCLA, PILC };

inline constexpr ModelClass kAllModelClasses[] = {
    ModelClass::RAT,   ModelClass::CLA,  ModelClass::COLA, ModelClass::CSLA,
    ModelClass::CSSLA, ModelClass::CCLA, ModelClass::PILC};

// Lower-case tag: "rat", "cla", ..., "pilc".
const char* to_string(ModelClass cls);
std::optional<ModelClass> parse_model_class(std::string_view text);

// Outcome for one class.  `relation` is the revealed relation behind the
// decision (when the criterion uses one).  For non-members, `cycle` holds the
// shortest cycle of that relation, `pair` a symmetric pair (salience), or
// `first_switch` the first switch found (RAT).
struct ClassVerdict {
  bool member = false;
  std::string criterion;
  std::optional<Relation> relation;
  std::vector<Item> cycle;
  std::optional<std::pair<Item, Item>> pair;
  std::optional<Switch> first_switch;
};

struct ClassMembership {
  bool rat = false;
  bool cla = false;
  bool cola = false;
  bool csla = false;
  bool cssla = false;
  bool ccla = false;
  bool pilc = false;

  std::vector<std::pair<ModelClass, ClassVerdict>> verdicts;

  bool get(ModelClass cls) const;
  const ClassVerdict& verdict(ModelClass cls) const;
};

// Flags only, no witnesses; what the census runs in its inner loop.
struct ClassFlags {
  bool rat = false, cla = false, cola = false, csla = false, cssla = false,
       ccla = false, pilc = false;
};

ClassFlags classify_flags(const ChoiceFunction& c);
ClassMembership classify(const ChoiceFunction& c);

// The preference revealed by binary choices, when it is a linear order.
std::optional<LinearOrder> binary_order(const ChoiceFunction& c);

// Selective-salient route: binary order ▷, Γ*(A) = A∖min(X,▷) except at the
// singleton {min}.  Returns (Γ*, ▷) when Γ* is a selective salient filter
// that reproduces c; nullopt otherwise.
struct GammaStar {
  ChoiceCorrespondence gamma;
  LinearOrder order;
};
std::optional<GammaStar> gamma_star(const ChoiceFunction& c);

}  // namespace limattn

#endif  // LIMATTN_CLASSIFY_HPP
