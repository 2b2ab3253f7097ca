// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>

#include "limattn/axioms.hpp"
#include "limattn/census.hpp"
#include "limattn/classify.hpp"
#include "limattn/explain.hpp"
#include "limattn/fixtures.hpp"
#include "limattn/forward.hpp"
#include "oracles.hpp"

using namespace limattn;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Tally {
 public:
  explicit Tally(std::string what) : what_(std::move(what)) {}
  void check(bool ok, const std::string& failure) {
    ++runs_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = failure;
    }
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::string s = what_ + " " + std::to_string(runs_ - failures_) + "/" + std::to_string(runs_);
    if (!first_.empty()) s += " (first failure: " + first_ + ")";
    return s;
  }

 private:
  std::string what_;
  long runs_ = 0, failures_ = 0;
  std::string first_;
};

Outcome combine(const std::vector<Tally>& tallies) {
  Outcome out;
  for (const auto& t : tallies) {
    out.pass = out.pass && t.ok();
    if (!out.detail.empty()) out.detail += "; ";
    out.detail += t.summary();
  }
  return out;
}

std::string table_of(const ChoiceFunction& c) {
  std::string s;
  for_each_menu(c.size(), [&](ItemSet a) {
    if (a.size() > 1) s += c.ground().format(a) + ":" + c.ground().label(c(a)) + " ";
  });
  return s;
}

// --- 1 ---------------------------------------------------------------------
Outcome fixtures() {
  Outcome out;
  int passed = 0;
  const auto checks = verify_fixtures();
  for (const auto& c : checks) {
    if (c.pass) ++passed;
    else {
      out.pass = false;
      out.detail += "failed: " + c.name + " [" + c.detail + "] ";
    }
  }
  out.detail += std::to_string(passed) + "/" + std::to_string(checks.size()) + " fixture checks";
  return out;
}

// --- 2 ---------------------------------------------------------------------
Outcome census3() {
  const CensusReport r = run_census(3, 1);
  Outcome out;
  out.pass = r.total == 24 && r.cla == 24 && r.rat == 6 && r.consistent();
  out.detail = "total=" + std::to_string(r.total) + " cla=" + std::to_string(r.cla) +
               " rat=" + std::to_string(r.rat);
  return out;
}

// --- 3 ---------------------------------------------------------------------
Outcome census4() {
  const CensusReport single = run_census(4, 1);
  Outcome out;
  out.pass = single.total == 20736 && single.consistent() && single.elapsed_seconds < 10;
  for (int workers : {2, 3, 4, 7}) {
    const CensusReport r = run_census(4, workers);
    out.pass = out.pass && r.same_counts(single);
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", single.elapsed_seconds);
  out.detail = "total=" + std::to_string(single.total) + " cla=" + std::to_string(single.cla) +
               " nesting+regions " + (single.consistent() ? "ok" : "broken") +
               ", identical for workers 1,2,3,4,7, single worker " + buf + " s";
  return out;
}

// --- 4 ---------------------------------------------------------------------
Outcome oracle_equivalences() {
  std::vector<ChoiceFunction> sample = enumerate_choice_functions(3);
  const GroundSet g4 = census_ground(4);
  oracle::Rng rng(20240601);
  std::uniform_int_distribution<std::uint64_t> pick(0, choice_function_count(4) - 1);
  for (int i = 0; i < 1000; ++i) sample.push_back(choice_function_at(g4, pick(rng)));

  Tally cola("cola=shortlist"), ccla("ccla=list"), csla("csla=art=cer"), rat("rat=gamma*"),
      cla("cla=filter"), pilc("pilc=path-independent");
  for (const auto& c : sample) {
    const ClassFlags f = classify_flags(c);
    const std::string id = table_of(c);
    cola.check(f.cola == oracle::has_shortlist(c), id);
    ccla.check(f.ccla == oracle::has_list(c), id);
    const bool cer = oracle::has_cer(c);
    csla.check(f.csla == art(c) && f.csla == cer, id);
    rat.check(f.rat == oracle::gamma_star_verifies(c) && f.rat == f.cssla, id);
    cla.check(f.cla == oracle::has_cla_filter(c), id);
    pilc.check(f.pilc == oracle::has_path_independent(c), id);
  }
  Outcome out = combine({cola, ccla, csla, rat, cla, pilc});
  out.detail = std::to_string(sample.size()) + " functions: " + out.detail;
  return out;
}

// --- 5 ---------------------------------------------------------------------
void round_trip(Tally& t, const ChoiceFunction& c, bool member, ExplainTarget target) {
  if (!member) {
    t.check(false, std::string("not classified ") + to_string(target) + ": " + table_of(c));
    return;
  }
  try {
    const Explanation e = explain(c, target);
    t.check(simulate(e.model) == c, std::string("explain/simulate mismatch: ") + table_of(c));
  } catch (const Error& e) {
    t.check(false, std::string(e.what()) + ": " + table_of(c));
  }
}

Outcome round_trips() {
  oracle::Rng rng(77);
  Tally shortlist("shortlist"), list("list"), cer("cer"), filter("gamma-filter");
  for (int n : {4, 5}) {
    const GroundSet g = GroundSet::letters(std::string_view("vwxyz").substr(5 - n));
    for (int i = 0; i < 1000; ++i) {
      {
        const ChoiceFunction c =
            simulate(ShortlistModel{oracle::random_partial_order(g, rng), oracle::random_order(g, rng)});
        const ClassFlags f = classify_flags(c);
        round_trip(shortlist, c, f.cola && f.cla, ExplainTarget::COLA);
      }
      {
        const ChoiceFunction c =
            simulate(ListModel{oracle::random_order(g, rng), oracle::random_tournament(g, rng)});
        const ClassFlags f = classify_flags(c);
        round_trip(list, c, f.ccla && f.cla, ExplainTarget::CCLA);
      }
      {
        std::vector<LinearOrder> refs;
        for (int k = 0; k < n; ++k) refs.push_back(oracle::random_order(g, rng));
        const ChoiceFunction c = simulate(CerModel{oracle::random_order(g, rng), refs});
        const ClassFlags f = classify_flags(c);
        round_trip(cer, c, f.csla && f.cla, ExplainTarget::CER);
        round_trip(cer, c, f.csla, ExplainTarget::CSLA);
      }
      {
        // Rejection-sample a CLA function, then pair it with Γ_▷ for a random
        // extension of its revealed relation.
        ChoiceFunction c = oracle::random_choice(g, rng);
        while (!is_cycle_free(reveal(c, RevealedKind::P))) c = oracle::random_choice(g, rng);
        const LinearOrder order = oracle::random_extension(reveal(c, RevealedKind::P), rng);
        const ChoiceCorrespondence gamma = gamma_triangle(c, order);
        const ChoiceFunction sim = simulate(FilterOrderModel{gamma, order});
        filter.check(oracle::attention_filter(gamma), "not an attention filter: " + table_of(c));
        round_trip(filter, sim, sim == c && classify_flags(sim).cla, ExplainTarget::CLA);
      }
    }
  }
  return combine({shortlist, list, cer, filter});
}

// --- 6 ---------------------------------------------------------------------
std::vector<ChoiceFunction> random_functions(int n, int count, oracle::Rng& rng) {
  const GroundSet g = GroundSet::letters(std::string_view("vwxyz").substr(5 - n));
  std::vector<ChoiceFunction> out;
  for (int i = 0; i < count; ++i) out.push_back(oracle::random_choice(g, rng));
  return out;
}

void check_reduction(Tally& t, const ChoiceFunction& c) {
  for (const Switch& s : find_switches(c, false)) {
    const Switch m = reduce_switch(c, s);
    const bool ok = m.minimal() && s.inner.subset_of(m.inner) && m.outer.subset_of(s.outer) &&
                    is_switch(c, m.inner, m.outer);
    t.check(ok, table_of(c));
  }
}

void check_idempotent(Tally& t, const ChoiceFunction& c, const LinearOrder& order) {
  const ChoiceCorrespondence gamma = gamma_triangle(c, order);
  for_each_menu(c.size(), [&](ItemSet a) {
    t.check(gamma(gamma(a)) == gamma(a), table_of(c));
  });
}

void check_csla_filter(Tally& t, const ChoiceFunction& c) {
  try {
    const Explanation e = explain(c, ExplainTarget::CSLA);
    const auto& m = std::get<FilterOrderModel>(e.model);
    t.check(oracle::attention_filter(m.gamma) && oracle::salient_filter(m.gamma, m.order) &&
                oracle::reproduces(c, m.gamma, m.order),
            table_of(c));
  } catch (const Error& e) {
    t.check(false, std::string(e.what()) + ": " + table_of(c));
  }
}

long unconsidered_witnesses = 0;

void welfare_in_representations(Tally& cola_t, Tally& csla_t, Tally& ccla_t,
                                const ChoiceFunction& c,
                                const std::vector<Relation>& partials,
                                const std::vector<ChoiceCorrespondence>& corrs) {
  const GroundSet& g = c.ground();
  const auto orders = oracle::all_linear_orders(g);
  const ClassFlags f = classify_flags(c);
  const std::string id = table_of(c);

  if (f.cola) {
    const auto facts = welfare_report(c, ModelClass::COLA);
    for (const auto& p : partials) {
      for (const auto& o : orders) {
        if (!oracle::shortlist_fits(c, p, o)) continue;
        for (const auto& fact : facts) {
          bool holds = true;
          switch (fact.kind) {
            case FactKind::ShortlistDom: holds = p.has(fact.a, fact.b); break;
            case FactKind::ShortlistMax:
            case FactKind::Considered: holds = oracle::maximal(fact.menu, p).contains(fact.a); break;
            case FactKind::NotConsidered: holds = !oracle::maximal(fact.menu, p).contains(fact.a); break;
            case FactKind::Pref: holds = o.prefers(fact.a, fact.b); break;
            default: holds = false;
          }
          cola_t.check(holds, fact.describe(g) + " in " + id);
        }
      }
    }
  }

  if (f.csla) {
    const auto facts = welfare_report(c, ModelClass::CSLA);
    for (const auto& o : orders) {
      for (const auto& gamma : corrs) {
        if (!oracle::reproduces(c, gamma, o) || !oracle::salient_filter(gamma, o)) continue;
        for (const auto& fact : facts) {
          const ItemSet a = fact.menu;
          switch (fact.kind) {
            case FactKind::ConsideredIfAttention:
              if (oracle::attention_filter(gamma)) {
                csla_t.check(gamma(a).contains(fact.a), fact.describe(g) + " in " + id);
              } else if (!gamma(a).contains(fact.a)) {
                ++unconsidered_witnesses;
              }
              break;
            case FactKind::FilterChanged:
              csla_t.check(gamma(a.without(fact.a)) != gamma(a).without(fact.a),
                           fact.describe(g) + " in " + id);
              break;
            case FactKind::WorstInMenu:
              csla_t.check(o.ranking().back() == fact.a || [&] {
                for (Item y : a) if (y != fact.a && o.prefers(fact.a, y)) return false;
                return true;
              }(), fact.describe(g) + " in " + id);
              break;
            default: break;  // conspicuity checked below; temptation facts are symbolic
          }
        }
      }
    }
    // Every conspicuity order that belongs to some CER representation.
    for (const auto& consp : orders) {
      bool representable = true;
      for (Item k = 0; k < c.size() && representable; ++k) {
        bool found = false;
        for (const auto& ref : orders) {
          bool fits = true;
          for_each_menu(c.size(), [&](ItemSet a) {
            if (oracle::top(a, consp) == k) fits = fits && oracle::top(a, ref) == c(a);
          });
          found = found || fits;
        }
        representable = found;
      }
      if (!representable) continue;
      for (const auto& fact : facts) {
        if (fact.kind == FactKind::MostConspicuous) {
          csla_t.check(oracle::top(fact.menu, consp) == fact.a, fact.describe(g) + " in " + id);
        }
      }
    }
  }

  if (f.ccla) {
    const auto facts = welfare_report(c, ModelClass::CCLA);
    for (const auto& lst : orders) {
      if (!oracle::list_fits(c, lst)) continue;
      for (const auto& fact : facts) {
        if (fact.kind == FactKind::ListEdge) {
          ccla_t.check(lst.prefers(fact.a, fact.b), fact.describe(g) + " in " + id);
        }
      }
    }
    for (const auto& o : orders) {
      for (const auto& gamma : corrs) {
        if (!oracle::reproduces(c, gamma, o) || !oracle::competitive_filter(gamma, o)) continue;
        for (const auto& fact : facts) {
          const ItemSet a = fact.menu;
          switch (fact.kind) {
            case FactKind::Considered:
              ccla_t.check(gamma(a).contains(fact.a), fact.describe(g) + " in " + id);
              break;
            case FactKind::FilterDiffers:
              ccla_t.check(gamma(a.without(fact.a)) != gamma(a), fact.describe(g) + " in " + id);
              break;
            case FactKind::Pref:
              ccla_t.check(o.prefers(fact.a, fact.b), fact.describe(g) + " in " + id);
              break;
            case FactKind::ExistsBetter: {
              bool some = false;
              for (Item z : a.without(fact.a)) some = some || o.prefers(z, fact.a);
              ccla_t.check(some, fact.describe(g) + " in " + id);
              break;
            }
            default: break;
          }
        }
      }
    }
  }
}

Outcome structural_properties() {
  oracle::Rng rng(4242);
  Tally l1("switch-reduction"), l11("triangle-idempotent"), l13("p-within-fc"),
      l5("salient-and-attention"), l4("optimal=partial-order=alpha+gamma+delta"),
      w3("cola-facts"), w7("csla-facts"), w12("ccla-facts");

  const auto all3 = enumerate_choice_functions(3);
  const auto all4 = enumerate_choice_functions(4);
  const auto rand4 = random_functions(4, 1000, rng);
  const auto rand5 = random_functions(5, 1000, rng);

  // Every switch shrinks to a minimal one inside it.
  for (const auto* set : {&all3, &rand4, &rand5})
    for (const auto& c : *set) check_reduction(l1, c);

  // P ⊆ Fc.
  for (const auto* set : {&all3, &all4, &rand5})
    for (const auto& c : *set) {
      l13.check(reveal(c, RevealedKind::P).subset_of(reveal(c, RevealedKind::Fc)), table_of(c));
    }

  // Γ_▷ is idempotent when ▷ belongs to some limited-attention explanation.
  const GroundSet g3 = census_ground(3);
  const auto corrs3 = oracle::all_correspondences(g3);
  const auto orders3 = oracle::all_linear_orders(g3);
  for (const auto& c : all3) {
    for (const auto& o : orders3) {
      bool explains = false;
      for (const auto& gamma : corrs3) {
        if (oracle::attention_filter(gamma) && oracle::reproduces(c, gamma, o)) {
          explains = true;
          break;
        }
      }
      if (explains) check_idempotent(l11, c, o);
    }
  }
  for (const auto* set : {&rand4, &rand5})
    for (const auto& c : *set) {
      const Relation p = reveal(c, RevealedKind::P);
      if (is_cycle_free(p)) check_idempotent(l11, c, oracle::random_extension(p, rng));
    }

  // The CSLA construction yields a filter that is both salient and attention.
  for (const auto* set : {&all3, &all4, &rand5})
    for (const auto& c : *set)
      if (classify_flags(c).csla) check_csla_filter(l5, c);

  // Optimal filters, maxima of partial orders and α∧γ∧δ coincide.
  for (int n : {3, 4}) {
    const GroundSet g = census_ground(n);
    const auto partials = oracle::all_partial_orders(g);
    std::vector<ChoiceCorrespondence> corrs;
    if (n == 3) {
      corrs = corrs3;
    } else {
      for (const auto& p : partials) {
        auto gamma = ChoiceCorrespondence::from_rule(g, [&](ItemSet a) { return oracle::maximal(a, p); });
        corrs.push_back(gamma);
        // One-menu perturbation of a rationalizable correspondence.
        std::vector<Mask> images(gamma.images().begin(), gamma.images().end());
        std::uniform_int_distribution<Mask> menu(3, (Mask{1} << n) - 1);
        Mask m = menu(rng);
        while (std::popcount(m) < 2) m = menu(rng);
        Mask sub = 0;
        while (sub == 0) sub = static_cast<Mask>(rng()) & m;
        images[m] = sub;
        corrs.emplace_back(g, images);
      }
      for (int i = 0; i < 1000; ++i) corrs.push_back(oracle::random_correspondence(g, rng));
    }
    for (const auto& gamma : corrs) {
      const bool optimal = is_filter(gamma, FilterKind::OptimalAttention).holds;
      const bool by_order = oracle::max_of_some_partial_order(gamma, partials);
      const bool sen = corr_axiom(gamma, CorrAxiom::Alpha).holds &&
                       corr_axiom(gamma, CorrAxiom::Gamma).holds &&
                       corr_axiom(gamma, CorrAxiom::Delta).holds;
      bool round = !by_order;
      if (by_order) {
        const Relation r = quasi_transitive_rationalize(gamma);
        round = oracle::max_of_some_partial_order(gamma, {r});
      }
      l4.check(optimal == by_order && sen == by_order && round, "correspondence on n=" + std::to_string(n));
    }
  }

  // Welfare facts hold in every brute-force representation on n=3.
  const auto partials3 = oracle::all_partial_orders(g3);
  for (const auto& c : all3) welfare_in_representations(w3, w7, w12, c, partials3, corrs3);

  Outcome out = combine({l1, l11, l13, l5, l4, w3, w7, w12});
  out.detail += "; salient non-attention filters leaving the switch item unconsidered: " +
                std::to_string(unconsidered_witnesses);
  return out;
}

// --- 7 ---------------------------------------------------------------------
Outcome exploratory_ratio() {
  const CensusReport r = run_census(4, 1);
  const std::string text = format_census(r);
  Outcome out;
  out.pass = text.find("cla/24 (exploratory)") != std::string::npos;
  char buf[96];
  std::snprintf(buf, sizeof buf, "raw cla=%llu, cla/24=%.3f (reported for comparison only)",
                static_cast<unsigned long long>(r.cla), static_cast<double>(r.cla) / 24.0);
  out.detail = buf;
  return out;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_seconds;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "published examples", 1, fixtures},
      {2, "n=3 census", 1, census3},
      {3, "n=4 census", 10, census4},
      {4, "oracle equivalences", 60, oracle_equivalences},
      {5, "explain/simulate round trips", 1e9, round_trips},
      {6, "structural properties", 120, structural_properties},
      {7, "exploratory cla/24 ratio", 1e9, exploratory_ratio},
  };
  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      o.pass = false;
      o.detail += " [over time budget]";
    }
    all = all && o.pass;
    std::printf("criterion %d %s: %s (%.2f s) %s\n", c.id, c.name, o.pass ? "PASS" : "FAIL",
                secs, o.detail.c_str());
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
