#pragma once

// Property suites: each trial draws an instance from its own stream
// derive_seed(seed, trial), checks it, and on failure shrinks it and dumps
// it. Trials may run on several threads; results are merged by index so the
// report does not depend on scheduling.

#include <exreg/generators.hpp>
#include <exreg/shrink.hpp>

#include <chrono>
#include <iomanip>
#include <thread>

namespace exreg {

struct TrialOutcome {
  bool ok = true;
  std::string message;
  Bundle counterexample;
};

struct Suite {
  std::string name;
  std::string anchor;       // key into the anchor table
  std::string description;  // one line
  std::function<TrialOutcome(Generator&)> trial;
};

// A suite from a generator, a check returning a failure message, a dump
// and optional shrink candidates. Exceptions count as failures.
template <class Instance>
Suite property(std::string name, std::string anchor, std::string description,
               std::function<Instance(Generator&)> generate,
               std::function<std::optional<std::string>(const Instance&)> check,
               std::function<void(Artifacts&, const Instance&)> dump, Candidates<Instance> candidates = {}) {
  auto trial = [generate, check, dump, candidates](Generator& g) {
    auto run = [&](const Instance& inst) -> std::optional<std::string> {
      try {
        return check(inst);
      } catch (const std::exception& e) {
        return std::string("exception: ") + e.what();
      }
    };
    Instance inst = generate(g);
    auto msg = run(inst);
    if (!msg) return TrialOutcome{};
    if (candidates) {
      inst = shrink<Instance>(inst, [&](const Instance& i) { return run(i).has_value(); }, candidates);
      msg = run(inst);
    }
    Artifacts d;
    dump(d, inst);
    return TrialOutcome{false, *msg, d.bundle()};
  };
  return Suite{std::move(name), std::move(anchor), std::move(description), std::move(trial)};
}

struct TrialFailure {
  std::size_t trial;
  std::uint64_t subseed;
  std::string message;
  Bundle counterexample;
};

struct SuiteReport {
  std::string suite;
  std::string anchor;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::vector<TrialFailure> failures;
  double seconds = 0;  // kept out of str() so reports compare byte for byte

  bool ok() const noexcept { return failures.empty(); }

  std::string str() const {
    std::ostringstream os;
    os << (ok() ? "PASS " : "FAIL ") << suite << " [" << anchor << "] trials=" << trials << " seed=" << seed
       << " failures=" << failures.size() << "\n";
    for (const auto& f : failures) {
      os << "  trial " << f.trial << " subseed 0x" << std::hex << std::setw(16) << std::setfill('0') << f.subseed
         << std::dec << std::setfill(' ') << ": " << f.message << "\n";
      std::istringstream in(to_text([&](std::ostream& o) { f.counterexample.print(o); }));
      for (std::string line; std::getline(in, line);) os << "    | " << line << "\n";
    }
    return os.str();
  }
};

struct RunOptions {
  std::size_t trials = 100;
  std::uint64_t seed = 1;
  SizeBounds bounds{};
  std::size_t jobs = 1;
  std::size_t max_reported = 5;  // failures kept per suite
};

inline TrialOutcome run_trial(const Suite& s, std::uint64_t subseed, const SizeBounds& bounds) {
  Generator g(subseed, bounds);
  try {
    return s.trial(g);
  } catch (const std::exception& e) {
    return TrialOutcome{false, std::string("exception while generating: ") + e.what(), {}};
  }
}

inline SuiteReport run_trials(const Suite& s, const RunOptions& opt) {
  auto start = std::chrono::steady_clock::now();
  SuiteReport rep;
  rep.suite = s.name;
  rep.anchor = s.anchor;
  rep.trials = opt.trials;
  rep.seed = opt.seed;
  std::vector<TrialOutcome> outcomes(opt.trials);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t t = first; t < opt.trials; t += stride)
      outcomes[t] = run_trial(s, derive_seed(opt.seed, t), opt.bounds);
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(opt.jobs, opt.trials));
  if (jobs == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(work, j, jobs);
    for (auto& th : pool) th.join();
  }
  for (std::size_t t = 0; t < opt.trials; ++t)
    if (!outcomes[t].ok && rep.failures.size() < opt.max_reported)
      rep.failures.push_back({t, derive_seed(opt.seed, t), outcomes[t].message, outcomes[t].counterexample});
  // Count failures beyond the reporting cap without their dumps.
  for (std::size_t t = 0, seen = 0; t < opt.trials; ++t)
    if (!outcomes[t].ok && ++seen > opt.max_reported)
      rep.failures.push_back({t, derive_seed(opt.seed, t), outcomes[t].message, {}});
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

inline std::string summary_table(const std::vector<SuiteReport>& reports) {
  std::ostringstream os;
  std::size_t width = 5;
  for (const auto& r : reports) width = std::max(width, r.suite.size());
  os << std::left << std::setw(static_cast<int>(width)) << "suite" << std::right << std::setw(8) << "trials"
     << std::setw(10) << "failures" << "\n";
  std::size_t trials = 0, failures = 0;
  for (const auto& r : reports) {
    os << std::left << std::setw(static_cast<int>(width)) << r.suite << std::right << std::setw(8) << r.trials
       << std::setw(10) << r.failures.size() << "\n";
    trials += r.trials;
    failures += r.failures.size();
  }
  os << std::left << std::setw(static_cast<int>(width)) << "total" << std::right << std::setw(8) << trials
     << std::setw(10) << failures << "\n";
  return os.str();
}

}  // namespace exreg
