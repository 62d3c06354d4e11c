#include "oracles.hpp"

#include <exreg/suites.hpp>

#include <gtest/gtest.h>

using namespace exreg;

namespace {

// A suite that fails whenever the poset has a strict pair, with shrinking.
Suite always_ordered_fails() {
  return property<FinPoset>(
      "toy", "toy", "fails on any strict pair",
      [](Generator& g) { return g.poset_upto(6); },
      [](const FinPoset& P) -> std::optional<std::string> {
        for (std::size_t i = 0; i < P.size(); ++i)
          for (std::size_t j = 0; j < P.size(); ++j)
            if (i != j && P.leq(i, j)) return "strict pair " + std::to_string(i) + " < " + std::to_string(j);
        return std::nullopt;
      },
      [](Artifacts& a, const FinPoset& P) { a.poset("p", P); }, Candidates<FinPoset>(poset_candidates));
}

bool has_strict_pair(const FinPoset& P) {
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = 0; j < P.size(); ++j)
      if (i != j && P.leq(i, j)) return true;
  return false;
}

}  // namespace

TEST(Seeds, DeriveSeedIsStableAndSpread) {
  EXPECT_EQ(derive_seed(1, 0), derive_seed(1, 0));
  std::set<std::uint64_t> seen;
  for (std::uint64_t s = 0; s < 20; ++s)
    for (std::uint64_t i = 0; i < 50; ++i) seen.insert(derive_seed(s, i));
  EXPECT_EQ(seen.size(), 1000U);
}

TEST(Harness, DeterministicAcrossRunsAndJobs) {
  RunOptions a;
  a.trials = 40;
  a.seed = 9;
  RunOptions b = a;
  b.jobs = 4;
  for (const char* name : {"modular-law", "exreg-factorization", "tabulation"}) {
    std::string x = run_suite(name, a).str(), y = run_suite(name, a).str(), z = run_suite(name, b).str();
    EXPECT_EQ(x, y) << name;
    EXPECT_EQ(x, z) << name;
  }
  Suite toy = always_ordered_fails();
  EXPECT_EQ(run_trials(toy, a).str(), run_trials(toy, b).str());
}

TEST(Harness, ZeroTrialsPassVacuously) {
  SuiteReport r = run_suite("modular-law", 0, 1);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.trials, 0U);
}

TEST(Harness, UnknownSuite) {
  try {
    run_suite("no-such-suite", 1, 1);
    FAIL() << "expected UnknownSuite";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownSuite);
  }
}

TEST(Harness, ModularLawAndMapsTheoremHold) {
  SuiteReport ml = run_suite("modular-law", 500, 7);
  EXPECT_EQ(ml.failures.size(), 0U) << ml.str();
  SuiteReport mt = run_suite("maps-theorem", 200, 7);
  EXPECT_EQ(mt.failures.size(), 0U) << mt.str();
}

TEST(Harness, EverySuitePassesShortRun) {
  RunOptions opt;
  opt.trials = 8;
  opt.seed = 3;
  for (const auto& s : registry()) {
    SuiteReport r = run_trials(s, opt);
    EXPECT_TRUE(r.ok()) << r.str();
  }
}

TEST(Harness, CoverageIsComplete) {
  EXPECT_TRUE(coverage_gaps().empty());
  EXPECT_EQ(registry().size(), 32U);
  // a missing suite and a stray anchor are both reported
  std::vector<Suite> fewer(registry().begin() + 1, registry().end());
  fewer.push_back(always_ordered_fails());
  auto gaps = coverage_gaps(fewer, anchors());
  EXPECT_FALSE(gaps.empty());
  bool stray = false;
  for (const auto& g : gaps) stray = stray || g.find("unknown anchor 'toy'") != std::string::npos;
  EXPECT_TRUE(stray);
}

TEST(Harness, FailuresAreShrunkCappedAndReplayable) {
  Suite toy = always_ordered_fails();
  RunOptions opt;
  opt.trials = 60;
  opt.seed = 4;
  SuiteReport r = run_trials(toy, opt);
  ASSERT_FALSE(r.ok());
  std::size_t failing = 0;
  for (std::size_t t = 0; t < opt.trials; ++t) failing += run_trial(toy, derive_seed(4, t), opt.bounds).ok ? 0 : 1;
  EXPECT_EQ(r.failures.size(), failing);
  for (std::size_t i = 0; i < r.failures.size(); ++i) {
    const auto& f = r.failures[i];
    EXPECT_EQ(f.subseed, derive_seed(4, f.trial));
    if (i >= opt.max_reported) {
      EXPECT_TRUE(f.counterexample.files.empty());
      continue;
    }
    // shrunk to a two-element chain
    ASSERT_EQ(f.counterexample.files.size(), 1U);
    std::istringstream in(f.counterexample.files[0].second);
    EXPECT_TRUE(isomorphic(parse_poset(in, "dump"), chain(2)));
    TrialOutcome again = run_trial(toy, f.subseed, opt.bounds);
    EXPECT_FALSE(again.ok);
    EXPECT_EQ(again.message, f.message);
  }
}

TEST(Shrink, Examples) {
  // chain of two padded with an isolated point
  FinPoset padded = make_poset(3, {{0, 1}});
  FinPoset s = shrink<FinPoset>(padded, has_strict_pair, Candidates<FinPoset>(poset_candidates));
  EXPECT_TRUE(s == chain(2));
  try {
    shrink<FinPoset>(discrete(3), has_strict_pair, Candidates<FinPoset>(poset_candidates));
    FAIL() << "expected NotFailing";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotFailing);
  }
}

TEST(Shrink, CandidatesAreSmaller) {
  Generator g(80);
  for (int t = 0; t < 100; ++t) {
    FinPoset P = g.poset_upto(6);
    for (const auto& c : poset_candidates(P)) {
      EXPECT_TRUE(c.size() < P.size() || oracle::pairs(oracle::order(c)).size() < oracle::pairs(oracle::order(P)).size());
      EXPECT_NO_THROW(make_poset(c.size(), cover_pairs(c)));
    }
    ExRegObject A = g.exreg_object(4);
    for (const auto& c : object_candidates(A))
      EXPECT_TRUE(c.size() < A.size() || c.congruence().pairs().size() < A.congruence().pairs().size());
  }
}

TEST(Generators, Validity) {
  EXPECT_TRUE(gen_poset(11, 0).empty());
  for (std::uint64_t s = 0; s < 300; ++s) {
    FinPoset P = gen_poset(s, 5);
    EXPECT_EQ(P.size(), 5U);
    // reflexive, antisymmetric, transitive by the oracle closure
    oracle::Mat m = oracle::order(P);
    EXPECT_EQ(oracle::warshall(m), m);
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0; j < 5; ++j) EXPECT_FALSE(i != j && m[i][j] && m[j][i]);
    Relation w = gen_weakening_relation(s, P, P);
    EXPECT_TRUE(w.is_weakening_closed());
    EXPECT_TRUE(gen_poset(s, 5) == P);
  }
  SizeBounds small;
  small.poset = 2;
  Generator g(5, small);
  EXPECT_EQ(g.bounds().poset, 2U);
}
