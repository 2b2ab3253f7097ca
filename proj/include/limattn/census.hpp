#ifndef LIMATTN_CENSUS_HPP
#define LIMATTN_CENSUS_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "limattn/classify.hpp"
#include "limattn/core.hpp"

namespace limattn {

inline constexpr int kMaxCensusItems = 4;

// Ground set used by the census: the last n letters of "vwxyz".
GroundSet census_ground(int n);

// Number of choice functions on n items: the product of menu sizes.
std::uint64_t choice_function_count(int n);

// Decodes an index in [0, count) into a choice function.  The menus of size
// >= 2, in ascending encoding, are mixed-radix digits (first menu least
// significant); a digit is the position of the chosen item within its menu.
ChoiceFunction choice_function_at(const GroundSet& ground, std::uint64_t index);

// Calls f on choice functions [begin, end) in index order.
void for_each_choice_function(const GroundSet& ground, std::uint64_t begin,
                              std::uint64_t end,
                              const std::function<void(const ChoiceFunction&)>& f);

// All choice functions on n items; throws Error(SizeTooLarge) unless
// 2 <= n <= 4.
std::vector<ChoiceFunction> enumerate_choice_functions(int n);

// Cells of the diagram of subclasses inside CLA.
enum class Region {
  None,          // CLA only
  ColaOnly,
  CslaOnly,
  CclaOnly,
  ColaCsla,
  ColaCcla,
  CslaCcla,
  AllNotRat,     // all three, not rationalizable
  Rat,
};

inline constexpr int kRegionCount = 9;
const char* to_string(Region region);
Region region_of(const ClassFlags& flags);

struct CensusReport {
  int n = 0;
  int workers = 1;
  std::uint64_t total = 0;
  std::uint64_t rat = 0, cla = 0, cola = 0, csla = 0, cssla = 0, ccla = 0, pilc = 0;
  std::array<std::uint64_t, kRegionCount> regions{};
  double elapsed_seconds = 0;

  std::uint64_t region(Region r) const { return regions[static_cast<int>(r)]; }
  // Counts only; elapsed time and worker count are ignored.
  bool same_counts(const CensusReport& other) const;
  // rat <= each class <= cla <= total, regions sum to cla.
  bool consistent() const;
};

// Classifies every choice function on n items, splitting the index range
// into `workers` contiguous blocks.  Throws Error(SizeTooLarge) unless
// 2 <= n <= 4, Error(InvalidArgument) if workers < 1.
CensusReport run_census(int n, int workers = 1);

// key: value lines; the n = 4 report adds the exploratory cla/24 figure.
std::string format_census(const CensusReport& report);

}  // namespace limattn

#endif  // LIMATTN_CENSUS_HPP
