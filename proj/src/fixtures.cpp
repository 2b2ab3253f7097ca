#include "limattn/fixtures.hpp"

#include "limattn/classify.hpp"
#include "limattn/forward.hpp"
#include "limattn/io.hpp"

namespace limattn {

ChoiceFunction ChoiceFixture::choice() const { return parse_choice_file(source); }
ChoiceCorrespondence CorrFixture::gamma() const { return parse_corr_file(source); }

const std::vector<ChoiceFixture>& choice_fixtures() {
  static const std::vector<ChoiceFixture> fixtures = {
      {"c1",
       "ground: v w x y z\n"
       "vwxyz -> z\nvwxy -> y\nvwxz -> w\nvwyz -> v\nvxyz -> z\nwxyz -> z\n"
       "vwx -> w\nvwy -> v\nvwz -> w\nvxz -> z\nvxy -> y\nvyz -> v\n"
       "wxy -> y\nwxz -> w\nwyz -> z\nxyz -> z\n"
       "vw -> w\nvx -> x\nvy -> v\nvz -> v\nwx -> w\nwy -> y\nwz -> w\n"
       "xy -> y\nxz -> z\nyz -> z\n",
       true, false, false, std::nullopt},
      {"c2",
       "ground: w x y z\n"
       "wxyz -> x\nwxy -> y\nwxz -> x\nwyz -> w\nxyz -> x\n"
       "wx -> x\nwy -> w\nwz -> w\nxy -> y\nxz -> x\nyz -> y\n",
       false, true, false, std::nullopt},
      {"c3",
       "ground: w x y z\n"
       "wxyz -> y\nwxy -> y\nwxz -> w\nwyz -> y\nxyz -> x\n"
       "wx -> w\nwy -> y\nwz -> z\nxy -> x\nxz -> x\nyz -> y\n",
       false, false, true, false},
      {"c4",
       "ground: w x y z\n"
       "wxyz -> x\nwxy -> w\nwxz -> x\nwyz -> y\nxyz -> x\n"
       "wx -> w\nwy -> y\nwz -> z\nxy -> x\nxz -> x\nyz -> y\n",
       true, true, false, true},
      {"c5",
       "ground: v w x y z\n"
       "vwxyz -> w\nvwxy -> w\nvwxz -> z\nvwyz -> v\nvxyz -> x\nwxyz -> w\n"
       "vwx -> w\nvwy -> v\nvwz -> z\nvxy -> x\nvxz -> z\nvyz -> v\n"
       "wxy -> w\nwxz -> z\nwyz -> w\nxyz -> x\n"
       "vw -> v\nvx -> x\nvy -> v\nvz -> z\nwx -> w\nwy -> w\nwz -> z\n"
       "xy -> x\nxz -> z\nyz -> y\n",
       true, false, true, std::nullopt},
      {"c6",
       "ground: w x y z\n"
       "wxyz -> x\nwxy -> y\nwxz -> x\nwyz -> y\nxyz -> x\n"
       "wx -> w\nwy -> y\nwz -> z\nxy -> x\nxz -> x\nyz -> y\n",
       false, true, true, std::nullopt},
      {"c7",
       "ground: x y z\n"
       "xyz -> x\nxy -> y\nxz -> x\nyz -> z\n",
       true, true, true, std::nullopt},
  };
  return fixtures;
}

const std::vector<CorrFixture>& corr_fixtures() {
  static const std::vector<CorrFixture> fixtures = {
      {"c4-gamma-pi",
       "ground: w x y z\n"
       "wxyz => xz\nwxy => wx\nwxz => xz\nwyz => yz\nxyz => xz\n"
       "wx => wx\nwy => wy\nwz => z\nxy => x\nxz => xz\nyz => yz\n"},
      {"remark1-gamma",
       "ground: x y z\n"
       "xyz => yz\nxy => xy\nxz => xz\nyz => yz\n"},
      {"remark1-gamma-prime",
       "ground: x y z\n"
       "xyz => xyz\nxy => x\nxz => xz\nyz => yz\n"},
      {"remark1-gamma-double-prime",
       "ground: w x y z\n"
       "wxyz => w\nwxy => w\nwxz => w\nwyz => wy\nxyz => x\n"
       "wx => w\nwy => wy\nwz => w\nxy => x\nxz => x\nyz => y\n"},
  };
  return fixtures;
}

const ChoiceFixture& choice_fixture(std::string_view name) {
  for (const auto& f : choice_fixtures()) {
    if (f.name == name) return f;
  }
  throw Error(ErrorCode::InvalidArgument, "no fixture named " + std::string(name));
}

const CorrFixture& corr_fixture(std::string_view name) {
  for (const auto& f : corr_fixtures()) {
    if (f.name == name) return f;
  }
  throw Error(ErrorCode::InvalidArgument, "no fixture named " + std::string(name));
}

namespace {

std::string yn(bool b) { return b ? "yes" : "no"; }

FixtureCheck class_check(const ChoiceFixture& f) {
  const ChoiceFunction c = f.choice();
  const ClassFlags got = classify_flags(c);
  bool pass = got.cola == f.cola && got.csla == f.csla && got.ccla == f.ccla && !got.rat &&
              got.cla;
  std::string detail = "cola=" + yn(got.cola) + " csla=" + yn(got.csla) +
                       " ccla=" + yn(got.ccla) + " rat=" + yn(got.rat);
  return {f.name + " classes", pass, detail};
}

// Optimal-attention conditions (a), (b), (c); `fails` names the one that
// should fail.
FixtureCheck remark_check(const std::string& name, char fails,
                          const std::string& witness_menu, const std::string& witness_item) {
  const ChoiceCorrespondence gamma = corr_fixture(name).gamma();
  const GroundSet& g = gamma.ground();
  const auto conds = optimal_conditions(gamma);
  const Check* parts[] = {&conds.a, &conds.b, &conds.c};
  bool pass = true;
  std::string detail;
  for (int i = 0; i < 3; ++i) {
    const char label = static_cast<char>('a' + i);
    const bool holds = parts[i]->holds;
    pass = pass && holds == (label != fails);
    detail += std::string("(") + label + ")=" + (holds ? "holds" : "fails") + ' ';
  }
  const Check& failing = *parts[fails - 'a'];
  if (failing.witness) {
    const Violation& v = *failing.witness;
    const Item named = fails == 'b' || fails == 'c' ? v.partner : v.element;
    pass = pass && g.format(v.menu) == witness_menu && named >= 0 &&
           g.label(named) == witness_item;
    detail += "witness: " + v.describe(g);
  }
  return {name + " fails only (" + fails + ")", pass, detail};
}

}  // namespace

std::vector<FixtureCheck> verify_fixtures() {
  std::vector<FixtureCheck> out;
  for (const auto& f : choice_fixtures()) out.push_back(class_check(f));

  for (const char* name : {"c3", "c4"}) {
    const auto& f = choice_fixture(name);
    const bool got = classify_flags(f.choice()).pilc;
    out.push_back({f.name + (*f.pilc ? " is pi-LC" : " is not pi-LC"), got == *f.pilc,
                   "pilc=" + yn(got)});
  }

  {
    const ChoiceFunction c4 = choice_fixture("c4").choice();
    const ChoiceCorrespondence gamma = corr_fixture("c4-gamma-pi").gamma();
    const GroundSet& g = gamma.ground();
    const LinearOrder order = parse_ranking(g, "y w x z");
    const Check pi = is_filter(gamma, FilterKind::PathIndependent);
    out.push_back({"c4 gamma-pi is path independent", pi.holds,
                   pi ? "holds" : pi.witness->describe(g)});
    const bool reproduces = simulate(FilterOrderModel{gamma, order}) == c4;
    out.push_back({"c4 gamma-pi with y w x z reproduces c4", reproduces, yn(reproduces)});
    const Check comp = is_filter(gamma, FilterKind::Competitive, order);
    bool pass = !comp.holds && comp.witness && g.format(comp.witness->menu) == "wxy" &&
                comp.witness->element == *g.index_of("y") &&
                comp.witness->partner == *g.index_of("w");
    out.push_back({"c4 gamma-pi is not competitive at wxy", pass,
                   comp ? "holds" : comp.witness->describe(g)});
  }

  out.push_back(remark_check("remark1-gamma", 'b', "xyz", "x"));
  out.push_back(remark_check("remark1-gamma-prime", 'c', "xyz", "y"));
  out.push_back(remark_check("remark1-gamma-double-prime", 'a', "wxy", "x"));
  return out;
}

}  // namespace limattn
