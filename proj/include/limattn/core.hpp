#ifndef LIMATTN_CORE_HPP
#define LIMATTN_CORE_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "limattn/error.hpp"

namespace limattn {

// Index of an alternative in its ground set.
using Item = int;
using Mask = std::uint32_t;

inline constexpr int kMaxItems = 16;
inline constexpr int kMinItems = 2;

// A set of alternatives encoded as a bit mask; bit i stands for item i.
// Menus are nonempty ItemSets; the type itself also represents the empty set
// because several raw operations (max_elements on a cyclic relation) can
// legitimately produce it.
class ItemSet {
 public:
  class iterator {
   public:
    using value_type = Item;
    using difference_type = std::ptrdiff_t;

    constexpr iterator() = default;
    constexpr explicit iterator(Mask rest) : rest_(rest) {}
    constexpr Item operator*() const { return std::countr_zero(rest_); }
    constexpr iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    constexpr iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    constexpr bool operator==(const iterator&) const = default;

   private:
    Mask rest_ = 0;
  };

  constexpr ItemSet() = default;
  constexpr explicit ItemSet(Mask bits) : bits_(bits) {}

  static constexpr ItemSet single(Item x) { return ItemSet(Mask{1} << x); }
  static constexpr ItemSet of(std::initializer_list<Item> items) {
    Mask bits = 0;
    for (Item x : items) bits |= Mask{1} << x;
    return ItemSet(bits);
  }
  static constexpr ItemSet full(int n) {
    return ItemSet(n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1);
  }

  constexpr Mask bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(Item x) const { return (bits_ >> x) & 1U; }
  constexpr bool subset_of(ItemSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }
  constexpr ItemSet with(Item x) const {
    return ItemSet(bits_ | (Mask{1} << x));
  }
  constexpr ItemSet without(Item x) const {
    return ItemSet(bits_ & ~(Mask{1} << x));
  }
  // Lowest-indexed member; undefined on the empty set.
  constexpr Item first() const { return std::countr_zero(bits_); }

  constexpr iterator begin() const { return iterator(bits_); }
  constexpr iterator end() const { return iterator(0); }

  friend constexpr ItemSet operator|(ItemSet a, ItemSet b) {
    return ItemSet(a.bits_ | b.bits_);
  }
  friend constexpr ItemSet operator&(ItemSet a, ItemSet b) {
    return ItemSet(a.bits_ & b.bits_);
  }
  friend constexpr ItemSet operator-(ItemSet a, ItemSet b) {
    return ItemSet(a.bits_ & ~b.bits_);
  }
  constexpr bool operator==(const ItemSet&) const = default;
  constexpr auto operator<=>(const ItemSet&) const = default;

 private:
  Mask bits_ = 0;
};

using Menu = ItemSet;

// Calls f on every nonempty subset of s in ascending set-encoding order,
// s itself included.
template <class F>
void for_each_subset(ItemSet s, F&& f) {
  const Mask full = s.bits();
  if (full == 0) return;
  Mask sub = full & (~full + 1);
  while (true) {
    f(ItemSet(sub));
    if (sub == full) break;
    sub = full & (sub - full);
  }
}

// Calls f on every menu over n items in ascending set-encoding order.
template <class F>
void for_each_menu(int n, F&& f) {
  const Mask end = Mask{1} << n;
  for (Mask m = 1; m < end; ++m) f(ItemSet(m));
}

// The finite universe of alternatives.  Copies share one immutable label
// table, so values are cheap to pass around and compare.
class GroundSet {
 public:
  // Throws Error(InvalidArgument) for empty, duplicate, or reserved labels,
  // or a size outside [kMinItems, kMaxItems].
  explicit GroundSet(std::vector<std::string> labels);

  // One alternative per character: GroundSet::letters("wxyz").
  static GroundSet letters(std::string_view chars);

  int size() const { return static_cast<int>(labels_->size()); }
  const std::string& label(Item x) const { return (*labels_)[x]; }
  const std::vector<std::string>& labels() const { return *labels_; }
  std::optional<Item> index_of(std::string_view label) const;
  ItemSet all() const { return ItemSet::full(size()); }
  std::size_t menu_count() const { return (std::size_t{1} << size()) - 1; }
  bool single_char_labels() const;

  // Concatenated labels when they are all single characters, otherwise
  // space separated; members in index order.
  std::string format(ItemSet s) const;

  // Items in `s` as labels joined by ", "; used in diagnostics.
  std::string describe(ItemSet s) const;

  friend bool operator==(const GroundSet& a, const GroundSet& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

  static bool valid_label(std::string_view label);

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
};

// Observed data: one chosen member for every menu.
class ChoiceFunction {
 public:
  // `table[A.bits()]` is c(A); entry 0 is ignored.  Throws
  // Error(InvalidArgument) unless every entry lies in its menu.
  ChoiceFunction(GroundSet ground, std::vector<std::int8_t> table);

  template <class Rule>
  static ChoiceFunction from_rule(const GroundSet& ground, Rule&& rule) {
    std::vector<std::int8_t> table(std::size_t{1} << ground.size(), 0);
    for_each_menu(ground.size(), [&](ItemSet menu) {
      table[menu.bits()] = static_cast<std::int8_t>(rule(menu));
    });
    return ChoiceFunction(ground, std::move(table));
  }

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  Item operator()(ItemSet menu) const { return table_[menu.bits()]; }
  Item operator()(Item a, Item b) const { return (*this)(ItemSet::of({a, b})); }
  std::span<const std::int8_t> table() const { return table_; }

  friend bool operator==(const ChoiceFunction& a, const ChoiceFunction& b) {
    return a.ground_ == b.ground_ && a.table_ == b.table_;
  }

 private:
  GroundSet ground_;
  std::vector<std::int8_t> table_;
};

// Candidate consideration sets: a nonempty submenu for every menu.
class ChoiceCorrespondence {
 public:
  ChoiceCorrespondence(GroundSet ground, std::vector<Mask> images);

  template <class Rule>
  static ChoiceCorrespondence from_rule(const GroundSet& ground, Rule&& rule) {
    std::vector<Mask> images(std::size_t{1} << ground.size(), 0);
    for_each_menu(ground.size(), [&](ItemSet menu) {
      images[menu.bits()] = ItemSet(rule(menu)).bits();
    });
    return ChoiceCorrespondence(ground, std::move(images));
  }

  static ChoiceCorrespondence identity(const GroundSet& ground);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  ItemSet operator()(ItemSet menu) const { return ItemSet(images_[menu.bits()]); }
  std::span<const Mask> images() const { return images_; }

  friend bool operator==(const ChoiceCorrespondence& a,
                         const ChoiceCorrespondence& b) {
    return a.ground_ == b.ground_ && a.images_ == b.images_;
  }

 private:
  GroundSet ground_;
  std::vector<Mask> images_;
};

// Irreflexive binary relation; has(x, y) reads "x is related to y", which
// for preferences means x is better than y.
class Relation {
 public:
  explicit Relation(GroundSet ground);
  static Relation from_pairs(GroundSet ground,
                             std::initializer_list<std::pair<Item, Item>> pairs);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }

  bool has(Item x, Item y) const { return (succ_[x] >> y) & 1U; }
  // Throws Error(InvalidArgument) on x == y.
  void add(Item x, Item y);
  void remove(Item x, Item y) { succ_[x] &= ~(Mask{1} << y); }

  ItemSet successors(Item x) const { return ItemSet(succ_[x]); }
  ItemSet predecessors(Item y) const;
  std::size_t edge_count() const;
  bool empty() const { return edge_count() == 0; }

  // Edges sorted by (x, y).
  std::vector<std::pair<Item, Item>> edges() const;

  Relation converse() const;
  Relation& operator|=(const Relation& other);
  bool subset_of(const Relation& other) const;

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.ground_ == b.ground_ && a.succ_ == b.succ_;
  }

 private:
  GroundSet ground_;
  std::array<Mask, kMaxItems> succ_{};
};

// Strict linear order given as a ranking, best first.
class LinearOrder {
 public:
  // Throws Error(InvalidArgument) unless `ranking` is a permutation.
  LinearOrder(GroundSet ground, std::vector<Item> ranking);
  // The order 0 > 1 > ... > n-1 (label order).
  static LinearOrder identity(const GroundSet& ground);

  const GroundSet& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  const std::vector<Item>& ranking() const { return ranking_; }
  int position(Item x) const { return position_[x]; }
  bool prefers(Item x, Item y) const { return position_[x] < position_[y]; }

  // Best and worst member of a nonempty set.
  Item best(ItemSet s) const;
  Item worst(ItemSet s) const;
  // Members ranked strictly below x.
  ItemSet below(Item x) const;

  Relation to_relation() const;

  friend bool operator==(const LinearOrder& a, const LinearOrder& b) {
    return a.ground_ == b.ground_ && a.ranking_ == b.ranking_;
  }

 private:
  GroundSet ground_;
  std::vector<Item> ranking_;
  std::array<int, kMaxItems> position_{};
  std::array<Mask, kMaxItems> below_{};
};

// A violation of contraction consistency: inner ⊆ outer, the outer choice
// survives into the inner menu, and yet the inner choice differs.
struct Switch {
  Menu inner;
  Menu outer;
  Item inner_choice = -1;
  Item outer_choice = -1;

  ItemSet removed() const { return outer - inner; }
  bool minimal() const { return removed().size() == 1; }
  bool operator==(const Switch&) const = default;
};

// {x ∈ A : no y ∈ A with y r x}.  Empty only if r has a cycle inside A.
ItemSet max_elements(ItemSet menu, const Relation& r);

// max_elements for callers that need a menu back; throws
// Error(CyclicRelation) on an empty result.
Menu max_menu(ItemSet menu, const Relation& r);

struct RelationProps {
  bool asymmetric = false;
  // No simple cycle of length >= 3; two-cycles are only reported through
  // `asymmetric`.
  bool acyclic = false;
  bool transitive = false;
  bool complete = false;
};

RelationProps relation_props(const Relation& r);

struct Closure {
  Relation relation;
  // Set when closing produced a self-loop, i.e. r has a cycle.  The loop
  // itself is not stored.
  bool cyclic = false;
};

Closure transitive_closure(const Relation& r);

// True iff r has no directed cycle of any length (asymmetric and acyclic).
bool is_cycle_free(const Relation& r);

// Shortest directed cycle of r (a two-cycle counts), or empty if none.
std::vector<Item> shortest_cycle(const Relation& r);

// Linear order containing r, built as a stable topological sort: repeatedly
// emit the remaining element that nothing remaining beats, choosing the one
// ranked highest by `tiebreak`.  Throws Error(CyclicRelation) if r has a
// cycle.
LinearOrder szpilrajn_extend(const Relation& r, const LinearOrder& tiebreak);
LinearOrder szpilrajn_extend(const Relation& r);

}  // namespace limattn

#endif  // LIMATTN_CORE_HPP
