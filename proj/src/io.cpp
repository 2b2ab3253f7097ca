#include "limattn/io.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace limattn {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

struct Line {
  int number;
  std::string_view text;
};

// Non-blank lines with comments stripped.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  int number = 0;
  for (;;) {
    ++number;
    const auto end = text.find('\n');
    std::string_view line = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (!line.empty()) out.push_back({number, line});
    if (end == std::string_view::npos) break;
  }
  return out;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

GroundSet parse_ground(std::string_view value, int line) {
  std::vector<std::string> labels;
  for (auto tok : split_ws(value)) labels.emplace_back(tok);
  try {
    return GroundSet(std::move(labels));
  } catch (const Error& e) {
    throw ParseError(line, e.what());
  }
}

// Items named in `text`: whitespace-separated labels, where a token that is
// not itself a label is read character by character if labels are single
// characters.
std::vector<Item> parse_item_list(const GroundSet& g, std::string_view text, int line) {
  std::vector<Item> items;
  for (auto tok : split_ws(text)) {
    if (auto idx = g.index_of(tok)) {
      items.push_back(*idx);
      continue;
    }
    if (!g.single_char_labels()) {
      throw ParseError(line, "unknown label '" + std::string(tok) + "'");
    }
    for (char ch : tok) {
      auto idx = g.index_of(std::string_view(&ch, 1));
      if (!idx) throw ParseError(line, "unknown label '" + std::string(1, ch) + "'");
      items.push_back(*idx);
    }
  }
  return items;
}

ItemSet parse_set(const GroundSet& g, std::string_view text, int line) {
  ItemSet s;
  for (Item x : parse_item_list(g, text, line)) {
    if (s.contains(x)) throw ParseError(line, "label '" + g.label(x) + "' repeated");
    s = s.with(x);
  }
  if (s.empty()) throw ParseError(line, "empty menu");
  return s;
}

Item parse_single(const GroundSet& g, std::string_view text, int line) {
  const auto items = parse_item_list(g, text, line);
  if (items.size() != 1) throw ParseError(line, "expected exactly one label");
  return items.front();
}

std::pair<std::string_view, std::string_view> split_on(std::string_view s,
                                                       std::string_view sep, int line) {
  const auto at = s.find(sep);
  if (at == std::string_view::npos) {
    throw ParseError(line, "expected '" + std::string(sep) + "'");
  }
  return {trim(s.substr(0, at)), trim(s.substr(at + sep.size()))};
}

// Header/key line "key: value".
std::optional<std::pair<std::string_view, std::string_view>> header(std::string_view s) {
  const auto colon = s.find(':');
  if (colon == std::string_view::npos) return std::nullopt;
  return std::pair{trim(s.substr(0, colon)), trim(s.substr(colon + 1))};
}

GroundSet leading_ground(const std::vector<Line>& lines) {
  if (lines.empty()) throw ParseError(0, "missing 'ground:' header");
  auto h = header(lines.front().text);
  if (!h || h->first != "ground") {
    throw ParseError(lines.front().number, "first line must be 'ground: ...'");
  }
  return parse_ground(h->second, lines.front().number);
}

std::string missing_menu(const GroundSet& g, ItemSet menu) {
  return "no entry for menu " + g.format(menu);
}

// Parses `menu <sep> rhs` lines for every menu of size >= 2.  `on_entry`
// returns the image to store for the menu.
template <class OnEntry>
std::vector<Mask> parse_menu_block(const GroundSet& g, const std::vector<Line>& lines,
                                   std::size_t from, std::size_t to,
                                   std::string_view sep, OnEntry&& on_entry) {
  std::vector<Mask> image(std::size_t{1} << g.size(), 0);
  std::vector<bool> seen(image.size(), false);
  for (std::size_t i = from; i < to; ++i) {
    const auto& [number, text] = lines[i];
    auto [lhs, rhs] = split_on(text, sep, number);
    const ItemSet menu = parse_set(g, lhs, number);
    if (seen[menu.bits()]) {
      throw ParseError(number, "duplicate menu " + g.format(menu));
    }
    seen[menu.bits()] = true;
    image[menu.bits()] = on_entry(menu, rhs, number);
  }
  for_each_menu(g.size(), [&](ItemSet menu) {
    if (menu.size() == 1) {
      if (!seen[menu.bits()]) image[menu.bits()] = menu.bits();
      return;
    }
    if (!seen[menu.bits()]) {
      throw ParseError(to < lines.size() ? lines[to].number : 0, missing_menu(g, menu));
    }
  });
  return image;
}

std::vector<Mask> parse_gamma_block(const GroundSet& g, const std::vector<Line>& lines,
                                    std::size_t from, std::size_t to) {
  return parse_menu_block(g, lines, from, to, "=>", [&](ItemSet menu, std::string_view rhs,
                                                          int number) {
    const ItemSet image = parse_set(g, rhs, number);
    if (!image.subset_of(menu)) {
      throw ParseError(number, "image " + g.format(image) + " is not inside " + g.format(menu));
    }
    return image.bits();
  });
}

ChoiceFunction choice_from_block(const GroundSet& g, const std::vector<Line>& lines,
                                 std::size_t from, std::size_t to) {
  auto image = parse_menu_block(g, lines, from, to, "->", [&](ItemSet menu,
                                                              std::string_view rhs, int number) {
    const Item chosen = parse_single(g, rhs, number);
    if (!menu.contains(chosen)) {
      throw ParseError(number, "'" + g.label(chosen) + "' is not in menu " + g.format(menu));
    }
    return ItemSet::single(chosen).bits();
  });
  std::vector<std::int8_t> table(image.size(), 0);
  for (std::size_t m = 1; m < image.size(); ++m) {
    table[m] = static_cast<std::int8_t>(ItemSet(image[m]).first());
  }
  return ChoiceFunction(g, std::move(table));
}

}  // namespace

LinearOrder parse_ranking(const GroundSet& g, std::string_view text, int line) {
  auto items = parse_item_list(g, text, line);
  try {
    return LinearOrder(g, std::move(items));
  } catch (const Error& e) {
    throw ParseError(line, std::string("not a ranking of the ground set: ") + e.what());
  }
}

std::string format_ranking(const LinearOrder& order) {
  std::string out;
  for (Item x : order.ranking()) {
    if (!out.empty()) out += ' ';
    out += order.ground().label(x);
  }
  return out;
}

ChoiceFunction parse_choice_file(std::string_view text) {
  const auto lines = content_lines(text);
  const GroundSet g = leading_ground(lines);
  return choice_from_block(g, lines, 1, lines.size());
}

std::string print_choice_file(const ChoiceFunction& c) {
  const GroundSet& g = c.ground();
  std::string out = "ground:";
  for (const auto& label : g.labels()) out += " " + label;
  out += '\n';
  for_each_menu(c.size(), [&](ItemSet a) {
    if (a.size() < 2) return;
    out += g.format(a) + " -> " + g.label(c(a)) + '\n';
  });
  return out;
}

ChoiceCorrespondence parse_corr_file(std::string_view text) {
  const auto lines = content_lines(text);
  const GroundSet g = leading_ground(lines);
  return ChoiceCorrespondence(g, parse_gamma_block(g, lines, 1, lines.size()));
}

namespace {

void append_gamma(std::string& out, const ChoiceCorrespondence& gamma) {
  const GroundSet& g = gamma.ground();
  for_each_menu(gamma.size(), [&](ItemSet a) {
    if (a.size() < 2) return;
    out += g.format(a) + " => " + g.format(gamma(a)) + '\n';
  });
}

}  // namespace

std::string print_corr_file(const ChoiceCorrespondence& gamma) {
  std::string out = "ground:";
  for (const auto& label : gamma.ground().labels()) out += " " + label;
  out += '\n';
  append_gamma(out, gamma);
  return out;
}

namespace {

struct Section {
  int line;
  std::string value;
  std::size_t from, to;  // block lines [from, to)
};

}  // namespace

ModelSpec parse_model_file(std::string_view text) {
  const auto lines = content_lines(text);
  std::map<std::string, Section, std::less<>> sections;
  Section* current = nullptr;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& [number, body] = lines[i];
    if (auto h = header(body)) {
      std::string key(h->first);
      if (sections.count(key)) throw ParseError(number, "duplicate section '" + key + "'");
      current = &sections[key];
      *current = Section{number, std::string(h->second), i + 1, i + 1};
      continue;
    }
    if (!current) throw ParseError(number, "expected a 'key: value' header");
    current->to = i + 1;
  }
  auto need = [&](const std::string& key) -> const Section& {
    auto it = sections.find(key);
    if (it == sections.end()) throw ParseError(0, "missing section '" + key + "'");
    return it->second;
  };
  const Section& model = need("model");
  const Section& ground_sec = need("ground");
  const GroundSet g = parse_ground(ground_sec.value, ground_sec.line);

  auto known = [&](std::initializer_list<std::string_view> keys) {
    for (const auto& [key, sec] : sections) {
      bool ok = key == "model" || key == "ground";
      for (auto k : keys) ok = ok || key == k;
      if (!ok && model.value == "cer" && key.rfind("ref ", 0) == 0) ok = true;
      if (!ok) {
        throw ParseError(sec.line, "section '" + key + "' does not belong to model '" +
                                       model.value + "'");
      }
      const bool block = key == "gamma" || key == "partial" || key == "tournament";
      if (!block && sec.to != sec.from) {
        throw ParseError(static_cast<int>(lines[sec.from].number),
                         "unexpected line in section '" + key + "'");
      }
      if (block && !sec.value.empty()) {
        throw ParseError(sec.line, "section '" + key + "' takes its entries on later lines");
      }
    }
  };
  auto ranking = [&](const std::string& key) {
    const Section& s = need(key);
    return parse_ranking(g, s.value, s.line);
  };

  if (model.value == "limited-attention") {
    known({"order", "gamma"});
    const Section& gs = need("gamma");
    ChoiceCorrespondence gamma(g, parse_gamma_block(g, lines, gs.from, gs.to));
    return FilterOrderModel{std::move(gamma), ranking("order")};
  }
  if (model.value == "shortlist") {
    known({"order", "partial"});
    const Section& ps = need("partial");
    Relation partial(g);
    for (std::size_t i = ps.from; i < ps.to; ++i) {
      const auto& [number, body] = lines[i];
      auto [lhs, rhs] = split_on(body, ">", number);
      const Item a = parse_single(g, lhs, number);
      const Item b = parse_single(g, rhs, number);
      if (a == b) throw ParseError(number, "an item cannot dominate itself");
      partial.add(a, b);
    }
    return ShortlistModel{std::move(partial), ranking("order")};
  }
  if (model.value == "list") {
    known({"list", "tournament"});
    const Section& ts = need("tournament");
    Relation beats(g);
    std::vector<bool> seen(std::size_t{1} << g.size(), false);
    for (std::size_t i = ts.from; i < ts.to; ++i) {
      const auto& [number, body] = lines[i];
      auto [lhs, rhs] = split_on(body, "->", number);
      const ItemSet pair = parse_set(g, lhs, number);
      if (pair.size() != 2) throw ParseError(number, "tournament entries are pairs");
      if (seen[pair.bits()]) throw ParseError(number, "duplicate pair " + g.format(pair));
      seen[pair.bits()] = true;
      const Item w = parse_single(g, rhs, number);
      if (!pair.contains(w)) throw ParseError(number, "winner is not in the pair");
      beats.add(w, pair.without(w).first());
    }
    for_each_menu(g.size(), [&](ItemSet a) {
      if (a.size() == 2 && !seen[a.bits()]) {
        throw ParseError(ts.line, "tournament has no entry for " + g.format(a));
      }
    });
    return ListModel{ranking("list"), std::move(beats)};
  }
  if (model.value == "cer") {
    known({"conspicuity"});
    std::vector<std::optional<LinearOrder>> refs(g.size());
    for (const auto& [key, sec] : sections) {
      if (key.rfind("ref ", 0) != 0) continue;
      const Item z = parse_single(g, std::string_view(key).substr(4), sec.line);
      refs[z] = parse_ranking(g, sec.value, sec.line);
    }
    std::vector<LinearOrder> ordered;
    for (Item z = 0; z < g.size(); ++z) {
      if (!refs[z]) throw ParseError(0, "missing section 'ref " + g.label(z) + "'");
      ordered.push_back(std::move(*refs[z]));
    }
    return CerModel{ranking("conspicuity"), std::move(ordered)};
  }
  throw ParseError(model.line, "unknown model '" + model.value + "'");
}

std::string print_model_file(const ModelSpec& model, std::string_view comment) {
  const GroundSet& g = ground_of(model);
  std::string out;
  if (!comment.empty()) out += "# " + std::string(comment) + '\n';
  auto ground_line = [&] {
    std::string s = "ground:";
    for (const auto& label : g.labels()) s += " " + label;
    return s + '\n';
  };
  std::visit(
      [&](const auto& m) {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, FilterOrderModel>) {
          out += "model: limited-attention\n" + ground_line();
          out += "order: " + format_ranking(m.order) + "\ngamma:\n";
          append_gamma(out, m.gamma);
        } else if constexpr (std::is_same_v<T, ShortlistModel>) {
          out += "model: shortlist\n" + ground_line();
          out += "order: " + format_ranking(m.order) + "\npartial:\n";
          for (auto [a, b] : m.partial.edges()) {
            out += g.label(a) + " > " + g.label(b) + '\n';
          }
        } else if constexpr (std::is_same_v<T, ListModel>) {
          out += "model: list\n" + ground_line();
          out += "list: " + format_ranking(m.list) + "\ntournament:\n";
          for_each_menu(g.size(), [&](ItemSet a) {
            if (a.size() != 2) return;
            const Item x = a.first();
            const Item y = a.without(x).first();
            out += g.format(a) + " -> " + g.label(m.beats.has(x, y) ? x : y) + '\n';
          });
        } else {
          out += "model: cer\n" + ground_line();
          out += "conspicuity: " + format_ranking(m.conspicuity) + '\n';
          for (Item z = 0; z < g.size(); ++z) {
            out += "ref " + g.label(z) + ": " + format_ranking(m.references[z]) + '\n';
          }
        }
      },
      model);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace limattn
