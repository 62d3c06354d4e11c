#pragma once

// Suite registry, lemma anchors and the coverage self-test.

#include <exreg/suites_exreg.hpp>

namespace exreg {

struct Anchor {
  std::string id;
  std::string statement;  // paraphrase of the checked law, for listings
  bool required;          // part of the minimum registry
};

inline const std::vector<Anchor>& anchors() {
  static const std::vector<Anchor> table = {
      {"r4-redundancy", "a surjection is the coinserter of its kernel congruence", true},
      {"pasting", "comma square pasted with a square is a comma iff that square is a pullback", true},
      {"kernel-coinserter-duality", "kernel congruences and coinserters determine each other", true},
      {"modular-law", "the modular law and its dual for relations", true},
      {"map-distributivity", "composition with maps distributes over meets", true},
      {"kernel-identity", "f^* f_* equals the comma f/f", true},
      {"maps-theorem", "weakening-closed left adjoints are hypergraphs of maps", true},
      {"effective-splitting", "congruences split as idempotents of weakening relations", true},
      {"quotient-bijection", "order-reversing bijection of morphisms and quotient maps", true},
      {"tabulation", "tabulations and their factorization property", true},
      {"jointly-mono", "jointly order-mono pairs by the meet of kernels", true},
      {"classification", "ff, so and iso morphisms by kernel and image equations", true},
      {"exreg-limits", "finite limits of the completion", true},
      {"exreg-factorization", "(so,ff)-factorizations of the completion", true},
      {"exactness", "the completion is exact", true},
      {"presentation", "every object has a canonical exact presentation", true},
      {"universal-property", "regular functors extend uniquely along Γ", true},
      {"coinserter-so", "coinserters are so-morphisms", true},
      {"finpos-regular", "image factorization and pullback-stable surjections in FinPos", false},
      {"finpos-limits", "products, inserters, equalizers, commas and powers in FinPos", false},
      {"relation-calculus", "associativity, units, opposite and pointwise membership", false},
      {"hypergraphs", "hypergraphs, hypographs and the pointwise order", false},
      {"exact-fork", "identities satisfied by a congruence and its quotient", false},
      {"graph-conjugation", "realized maps as conjugated graphs", false},
      {"graph-functor", "functoriality of the graph of a morphism", false},
      {"exreg-so-stability", "so-morphisms of the completion are pullback-stable", false},
      {"rel-equivalence", "relations in the completion compose as Q(E) and Q_w(E) morphisms", false},
      {"characterization", "FinSet_ex/reg hom-posets match FinPos", false},
      {"ord-commutation", "Ord(FinSet) agrees with FinPos", false},
  };
  return table;
}

inline const std::vector<Suite>& registry() {
  static const std::vector<Suite> suites = [] {
    using namespace suites;
    return std::vector<Suite>{
        finpos_factorization(), so_stability(),       r4_redundancy(),      kernel_coinserter_duality(),
        coinserter_so(),        pasting(),            finpos_limits(),      modular_law(),
        map_distributivity(),   relation_laws(),      compose_crosscheck(), hypergraph_order(),
        kernel_identity(),      maps_theorem(),       effective_splitting(), exact_fork(),
        quotient_bijection(),   graph_conjugation(),  graph_functor(),      classification(),
        tabulation_suite(),     jointly_mono(),       exreg_factorization(), exreg_so_stability(),
        exreg_limits(),         gamma_limits(),       exactness(),          presentation(),
        universal_property(),   rel_equivalence(),    set_pos(),            ord_commutation(),
    };
  }();
  return suites;
}

inline const Suite& find_suite(const std::string& name) {
  for (const auto& s : registry())
    if (s.name == name) return s;
  fail(ErrorCode::UnknownSuite, "no suite named '" + name + "'");
}

// Problems with the registry: anchors without suites, suites without
// anchors, and duplicate names. Empty when coverage is complete.
inline std::vector<std::string> coverage_gaps(const std::vector<Suite>& suites, const std::vector<Anchor>& table) {
  std::vector<std::string> gaps;
  for (const auto& a : table) {
    bool covered = false;
    for (const auto& s : suites) covered = covered || s.anchor == a.id;
    if (!covered) gaps.push_back("anchor '" + a.id + "' has no suite");
  }
  for (const auto& s : suites) {
    bool known = false;
    for (const auto& a : table) known = known || a.id == s.anchor;
    if (!known) gaps.push_back("suite '" + s.name + "' has unknown anchor '" + s.anchor + "'");
  }
  for (std::size_t i = 0; i < suites.size(); ++i)
    for (std::size_t j = i + 1; j < suites.size(); ++j)
      if (suites[i].name == suites[j].name) gaps.push_back("duplicate suite name '" + suites[i].name + "'");
  for (const auto& a : table)
    if (a.required) {
      bool named = false;
      for (const auto& s : suites) named = named || s.name == a.id;
      if (!named) gaps.push_back("required anchor '" + a.id + "' has no suite of the same name");
    }
  return gaps;
}

inline std::vector<std::string> coverage_gaps() { return coverage_gaps(registry(), anchors()); }

inline SuiteReport run_suite(const std::string& name, const RunOptions& opt) {
  return run_trials(find_suite(name), opt);
}

inline SuiteReport run_suite(const std::string& name, std::size_t trials, std::uint64_t seed) {
  RunOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  return run_suite(name, opt);
}

// A report for `all` or a single suite, starting with the coverage line.
struct HarnessResult {
  std::vector<SuiteReport> reports;
  std::vector<std::string> gaps;
  bool ok() const {
    if (!gaps.empty()) return false;
    for (const auto& r : reports)
      if (!r.ok()) return false;
    return true;
  }
  std::string str() const {
    std::ostringstream os;
    os << "coverage: " << anchors().size() << " anchors, " << registry().size() << " suites, "
       << gaps.size() << " gaps\n";
    for (const auto& g : gaps) os << "  gap: " << g << "\n";
    for (const auto& r : reports) os << r.str();
    os << summary_table(reports);
    return os.str();
  }
};

inline HarnessResult run_harness(const std::string& which, const RunOptions& opt) {
  HarnessResult res;
  res.gaps = coverage_gaps();
  if (which == "all") {
    for (const auto& s : registry()) res.reports.push_back(run_trials(s, opt));
  } else {
    res.reports.push_back(run_suite(which, opt));
  }
  return res;
}

}  // namespace exreg
