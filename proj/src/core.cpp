#include "limattn/core.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

namespace limattn {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::CyclicRelation: return "CyclicRelation";
    case ErrorCode::NotASwitch: return "NotASwitch";
    case ErrorCode::MissingOrder: return "MissingOrder";
    case ErrorCode::NotInClass: return "NotInClass";
    case ErrorCode::NotRationalizable: return "NotRationalizable";
    case ErrorCode::CyclicShortlist: return "CyclicShortlist";
    case ErrorCode::SizeTooLarge: return "SizeTooLarge";
    case ErrorCode::ConstructionExhausted: return "ConstructionExhausted";
    case ErrorCode::VerificationFailed: return "VerificationFailed";
  }
  return "Unknown";
}

ErrorCategory category_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return ErrorCategory::Parse;
    case ErrorCode::ConstructionExhausted:
    case ErrorCode::VerificationFailed: return ErrorCategory::Defect;
    default: return ErrorCategory::Precondition;
  }
}

ParseError::ParseError(int line, const std::string& message)
    : Error(ErrorCode::Parse,
            line > 0 ? "line " + std::to_string(line) + ": " + message : message),
      line_(line),
      message_(message) {}

// ---------------------------------------------------------------------------
// GroundSet

bool GroundSet::valid_label(std::string_view label) {
  if (label.empty()) return false;
  for (char ch : label) {
    const auto u = static_cast<unsigned char>(ch);
    if (u <= ' ' || ch == '#' || ch == ':' || ch == '>' || ch == '=' ||
        ch == ',') {
      return false;
    }
  }
  return true;
}

GroundSet::GroundSet(std::vector<std::string> labels) {
  const auto n = static_cast<int>(labels.size());
  if (n < kMinItems || n > kMaxItems) {
    throw Error(ErrorCode::InvalidArgument,
                "ground set must have between " + std::to_string(kMinItems) +
                    " and " + std::to_string(kMaxItems) + " alternatives, got " +
                    std::to_string(n));
  }
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!valid_label(labels[i])) {
      throw Error(ErrorCode::InvalidArgument,
                  "invalid alternative label '" + labels[i] + "'");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (labels[i] == labels[j]) {
        throw Error(ErrorCode::InvalidArgument,
                    "duplicate alternative label '" + labels[i] + "'");
      }
    }
  }
  labels_ = std::make_shared<const std::vector<std::string>>(std::move(labels));
}

GroundSet GroundSet::letters(std::string_view chars) {
  std::vector<std::string> labels;
  for (char ch : chars) labels.emplace_back(1, ch);
  return GroundSet(std::move(labels));
}

std::optional<Item> GroundSet::index_of(std::string_view label) const {
  for (int i = 0; i < size(); ++i) {
    if ((*labels_)[i] == label) return i;
  }
  return std::nullopt;
}

bool GroundSet::single_char_labels() const {
  return std::all_of(labels_->begin(), labels_->end(),
                     [](const std::string& s) { return s.size() == 1; });
}

std::string GroundSet::format(ItemSet s) const {
  const bool compact = single_char_labels();
  std::string out;
  for (Item x : s) {
    if (!compact && !out.empty()) out += ' ';
    out += label(x);
  }
  return out;
}

std::string GroundSet::describe(ItemSet s) const {
  std::string out;
  for (Item x : s) {
    if (!out.empty()) out += ", ";
    out += label(x);
  }
  return "{" + out + "}";
}

// ---------------------------------------------------------------------------
// ChoiceFunction / ChoiceCorrespondence

ChoiceFunction::ChoiceFunction(GroundSet ground, std::vector<std::int8_t> table)
    : ground_(std::move(ground)), table_(std::move(table)) {
  const std::size_t expected = std::size_t{1} << ground_.size();
  if (table_.size() != expected) {
    throw Error(ErrorCode::InvalidArgument,
                "choice table has " + std::to_string(table_.size()) +
                    " entries, expected " + std::to_string(expected));
  }
  table_[0] = -1;
  for_each_menu(ground_.size(), [&](ItemSet menu) {
    const int chosen = table_[menu.bits()];
    if (chosen < 0 || chosen >= ground_.size() || !menu.contains(chosen)) {
      throw Error(ErrorCode::InvalidArgument,
                  "choice from menu " + ground_.describe(menu) +
                      " is not a member of the menu");
    }
  });
}

ChoiceCorrespondence::ChoiceCorrespondence(GroundSet ground,
                                           std::vector<Mask> images)
    : ground_(std::move(ground)), images_(std::move(images)) {
  const std::size_t expected = std::size_t{1} << ground_.size();
  if (images_.size() != expected) {
    throw Error(ErrorCode::InvalidArgument,
                "correspondence table has " + std::to_string(images_.size()) +
                    " entries, expected " + std::to_string(expected));
  }
  images_[0] = 0;
  for_each_menu(ground_.size(), [&](ItemSet menu) {
    const ItemSet image(images_[menu.bits()]);
    if (image.empty() || !image.subset_of(menu)) {
      throw Error(ErrorCode::InvalidArgument,
                  "image of menu " + ground_.describe(menu) +
                      " must be a nonempty subset of it");
    }
  });
}

ChoiceCorrespondence ChoiceCorrespondence::identity(const GroundSet& ground) {
  return from_rule(ground, [](ItemSet menu) { return menu; });
}

// ---------------------------------------------------------------------------
// Relation

Relation::Relation(GroundSet ground) : ground_(std::move(ground)) {}

Relation Relation::from_pairs(
    GroundSet ground, std::initializer_list<std::pair<Item, Item>> pairs) {
  Relation r(std::move(ground));
  for (auto [x, y] : pairs) r.add(x, y);
  return r;
}

void Relation::add(Item x, Item y) {
  if (x == y) {
    throw Error(ErrorCode::InvalidArgument,
                "relations are irreflexive; cannot relate '" +
                    ground_.label(x) + "' to itself");
  }
  succ_[x] |= Mask{1} << y;
}

ItemSet Relation::predecessors(Item y) const {
  Mask out = 0;
  for (int x = 0; x < size(); ++x) {
    if (has(x, y)) out |= Mask{1} << x;
  }
  return ItemSet(out);
}

std::size_t Relation::edge_count() const {
  std::size_t total = 0;
  for (int x = 0; x < size(); ++x) total += std::popcount(succ_[x]);
  return total;
}

std::vector<std::pair<Item, Item>> Relation::edges() const {
  std::vector<std::pair<Item, Item>> out;
  for (int x = 0; x < size(); ++x) {
    for (Item y : successors(x)) out.emplace_back(x, y);
  }
  return out;
}

Relation Relation::converse() const {
  Relation out(ground_);
  for (auto [x, y] : edges()) out.succ_[y] |= Mask{1} << x;
  return out;
}

Relation& Relation::operator|=(const Relation& other) {
  for (int x = 0; x < size(); ++x) succ_[x] |= other.succ_[x];
  return *this;
}

bool Relation::subset_of(const Relation& other) const {
  for (int x = 0; x < size(); ++x) {
    if ((succ_[x] & ~other.succ_[x]) != 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// LinearOrder

LinearOrder::LinearOrder(GroundSet ground, std::vector<Item> ranking)
    : ground_(std::move(ground)), ranking_(std::move(ranking)) {
  const int n = ground_.size();
  if (static_cast<int>(ranking_.size()) != n) {
    throw Error(ErrorCode::InvalidArgument,
                "linear order must rank all " + std::to_string(n) +
                    " alternatives");
  }
  Mask seen = 0;
  for (int pos = 0; pos < n; ++pos) {
    const Item x = ranking_[pos];
    if (x < 0 || x >= n || ((seen >> x) & 1U)) {
      throw Error(ErrorCode::InvalidArgument,
                  "linear order is not a permutation of the ground set");
    }
    seen |= Mask{1} << x;
    position_[x] = pos;
  }
  Mask lower = 0;
  for (int pos = n - 1; pos >= 0; --pos) {
    below_[ranking_[pos]] = lower;
    lower |= Mask{1} << ranking_[pos];
  }
}

LinearOrder LinearOrder::identity(const GroundSet& ground) {
  std::vector<Item> ranking(ground.size());
  for (int i = 0; i < ground.size(); ++i) ranking[i] = i;
  return LinearOrder(ground, std::move(ranking));
}

Item LinearOrder::best(ItemSet s) const {
  Item out = -1;
  for (Item x : s) {
    if (out < 0 || position_[x] < position_[out]) out = x;
  }
  return out;
}

Item LinearOrder::worst(ItemSet s) const {
  Item out = -1;
  for (Item x : s) {
    if (out < 0 || position_[x] > position_[out]) out = x;
  }
  return out;
}

ItemSet LinearOrder::below(Item x) const { return ItemSet(below_[x]); }

Relation LinearOrder::to_relation() const {
  Relation r(ground_);
  for (Item x = 0; x < size(); ++x) {
    for (Item y : below(x)) r.add(x, y);
  }
  return r;
}

// ---------------------------------------------------------------------------
// Free operations

ItemSet max_elements(ItemSet menu, const Relation& r) {
  Mask out = 0;
  for (Item x : menu) {
    if ((r.predecessors(x) & menu).empty()) out |= Mask{1} << x;
  }
  return ItemSet(out);
}

Menu max_menu(ItemSet menu, const Relation& r) {
  const ItemSet out = max_elements(menu, r);
  if (out.empty()) {
    throw Error(ErrorCode::CyclicRelation,
                "relation has a cycle inside menu " +
                    r.ground().describe(menu) + "; no maximal element");
  }
  return out;
}

namespace {

// reach[x] = items reachable from x by a path of length >= 1.
std::array<Mask, kMaxItems> reachability(const Relation& r) {
  const int n = r.size();
  std::array<Mask, kMaxItems> reach{};
  for (int x = 0; x < n; ++x) reach[x] = r.successors(x).bits();
  for (int k = 0; k < n; ++k) {
    for (int x = 0; x < n; ++x) {
      if ((reach[x] >> k) & 1U) reach[x] |= reach[k];
    }
  }
  return reach;
}

}  // namespace

RelationProps relation_props(const Relation& r) {
  const int n = r.size();
  RelationProps props;
  props.asymmetric = true;
  props.transitive = true;
  props.complete = true;
  for (int x = 0; x < n; ++x) {
    for (int y = 0; y < n; ++y) {
      if (x == y) continue;
      if (r.has(x, y) && r.has(y, x)) props.asymmetric = false;
      if (!r.has(x, y) && !r.has(y, x)) props.complete = false;
      if (r.has(x, y)) {
        // x r y r x would demand x r x, which an irreflexive relation lacks.
        for (Item z : r.successors(y)) {
          if (z == x || !r.has(x, z)) props.transitive = false;
        }
      }
    }
  }

  // A simple cycle of length >= 3 exists iff some strongly connected
  // component either contains a one-way edge, or its two-way edges do not
  // form a forest.
  const auto reach = reachability(r);
  Mask assigned = 0;
  props.acyclic = true;
  for (int x = 0; x < n && props.acyclic; ++x) {
    if ((assigned >> x) & 1U) continue;
    Mask component = Mask{1} << x;
    for (int y = 0; y < n; ++y) {
      if (y != x && ((reach[x] >> y) & 1U) && ((reach[y] >> x) & 1U)) {
        component |= Mask{1} << y;
      }
    }
    assigned |= component;
    const ItemSet members(component);
    int undirected_edges = 0;
    for (Item a : members) {
      for (Item b : r.successors(a) & members) {
        if (!r.has(b, a)) {
          props.acyclic = false;
        } else if (a < b) {
          ++undirected_edges;
        }
      }
    }
    if (undirected_edges >= members.size()) props.acyclic = false;
  }
  return props;
}

Closure transitive_closure(const Relation& r) {
  const auto reach = reachability(r);
  Closure out{Relation(r.ground()), false};
  for (int x = 0; x < r.size(); ++x) {
    for (int y = 0; y < r.size(); ++y) {
      if (!((reach[x] >> y) & 1U)) continue;
      if (x == y) {
        out.cyclic = true;
      } else {
        out.relation.add(x, y);
      }
    }
  }
  return out;
}

bool is_cycle_free(const Relation& r) {
  const auto reach = reachability(r);
  for (int x = 0; x < r.size(); ++x) {
    if ((reach[x] >> x) & 1U) return false;
  }
  return true;
}

std::vector<Item> shortest_cycle(const Relation& r) {
  const int n = r.size();
  std::vector<Item> best;
  for (int start = 0; start < n; ++start) {
    // BFS from start; a cycle closes when an edge returns to start.
    std::array<int, kMaxItems> parent;
    parent.fill(-2);
    std::deque<Item> queue;
    parent[start] = -1;
    queue.push_back(start);
    std::vector<Item> found;
    while (!queue.empty() && found.empty()) {
      const Item u = queue.front();
      queue.pop_front();
      for (Item v : r.successors(u)) {
        if (v == start) {
          for (Item w = u; w != -1; w = parent[w]) found.push_back(w);
          std::reverse(found.begin(), found.end());
          break;
        }
        if (parent[v] == -2) {
          parent[v] = u;
          queue.push_back(v);
        }
      }
    }
    if (!found.empty() && (best.empty() || found.size() < best.size())) {
      best = std::move(found);
    }
  }
  return best;
}

LinearOrder szpilrajn_extend(const Relation& r, const LinearOrder& tiebreak) {
  const int n = r.size();
  std::vector<Item> ranking;
  ranking.reserve(n);
  ItemSet remaining = r.ground().all();
  while (!remaining.empty()) {
    Item pick = -1;
    for (Item x : tiebreak.ranking()) {
      if (remaining.contains(x) && (r.predecessors(x) & remaining).empty()) {
        pick = x;
        break;
      }
    }
    if (pick < 0) {
      throw Error(ErrorCode::CyclicRelation,
                  "cannot extend a cyclic relation to a linear order (cycle among " +
                      r.ground().describe(remaining) + ")");
    }
    ranking.push_back(pick);
    remaining = remaining.without(pick);
  }
  return LinearOrder(r.ground(), std::move(ranking));
}

LinearOrder szpilrajn_extend(const Relation& r) {
  return szpilrajn_extend(r, LinearOrder::identity(r.ground()));
}

}  // namespace limattn
