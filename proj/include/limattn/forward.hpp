#ifndef LIMATTN_FORWARD_HPP
#define LIMATTN_FORWARD_HPP

#include <variant>
#include <vector>

#include "limattn/core.hpp"

namespace limattn {

// c(A) = max(Γ(A), ▷).
struct FilterOrderModel {
  ChoiceCorrespondence gamma;
  LinearOrder order;
};

// c(A) = max(max(A, >), ▷) with > a strict partial order.
struct ShortlistModel {
  Relation partial;
  LinearOrder order;
};

// c(A) = T(c(A∖m), m) with m the first item of A on the list; binary menus
// are settled by the tournament.  `beats.has(x, y)` means x wins {x, y}.
struct ListModel {
  LinearOrder list;
  Relation beats;
};

// c(A) = max(A, ▷_k) with k the most conspicuous item of A.
// `references[k]` is ▷_k.
struct CerModel {
  LinearOrder conspicuity;
  std::vector<LinearOrder> references;
};

using ModelSpec = std::variant<FilterOrderModel, ShortlistModel, ListModel, CerModel>;

const GroundSet& ground_of(const ModelSpec& model);

// Throws Error(InvalidArgument) when the model's parts disagree (ground
// sets, incomplete or two-way tournament, missing reference orders) and
// Error(CyclicShortlist) when max(A, >) comes out empty.
ChoiceFunction simulate(const ModelSpec& model);

// Does f list-rationalize c, evaluating the recursion with c itself?
bool check_list_rational(const ChoiceFunction& c, const LinearOrder& f);

// Tournament read off c's binary choices.
Relation binary_tournament(const ChoiceFunction& c);

}  // namespace limattn

#endif  // LIMATTN_FORWARD_HPP
