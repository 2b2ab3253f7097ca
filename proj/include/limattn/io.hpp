#ifndef LIMATTN_IO_HPP
#define LIMATTN_IO_HPP

#include <string>
#include <string_view>

#include "limattn/core.hpp"
#include "limattn/forward.hpp"

namespace limattn {

// Choice file:
//   ground: w x y z
//   wxyz -> x
//   ...
// one line per menu with at least two items; singletons are implicit.  Menus
// are written as concatenated labels when every label is one character, as
// space-separated labels otherwise.  `#` starts a comment.  Errors throw
// ParseError with the 1-based line number.
ChoiceFunction parse_choice_file(std::string_view text);
std::string print_choice_file(const ChoiceFunction& c);

// Correspondence file: same layout with `menu => submenu`.
ChoiceCorrespondence parse_corr_file(std::string_view text);
std::string print_corr_file(const ChoiceCorrespondence& gamma);

// Model file:
//   model: limited-attention | shortlist | list | cer
//   ground: ...
//   order: <best first>               (limited-attention, shortlist)
//   gamma:      block of `A => B`     (limited-attention)
//   partial:    block of `a > b`      (shortlist)
//   list: <first first>               (list)
//   tournament: block of `ab -> a`    (list)
//   conspicuity: <most first>         (cer)
//   ref <z>: <best first>             (cer, one per item)
ModelSpec parse_model_file(std::string_view text);
// `comment`, when nonempty, is written as a leading `#` line.
std::string print_model_file(const ModelSpec& model, std::string_view comment = {});

// Ranking written as space-separated labels, best first.
std::string format_ranking(const LinearOrder& order);

// Parses "y w x z" (or "ywxz" for one-character labels) into an order.
LinearOrder parse_ranking(const GroundSet& ground, std::string_view text, int line = 0);

// Reads a whole file; throws ParseError(0, ...) if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace limattn

#endif  // LIMATTN_IO_HPP
