#pragma once

// Random instances for the property harness. Every draw goes through
// mt19937_64 with hand-written uniform and Bernoulli helpers, so streams are
// identical across standard libraries.
//
// Distributions:
//   poset(n)      strict pairs i<j kept with probability p_edge (0.35) under a
//                 random labelling, then closed
//   map(X,Y)      depth-first search over assignments with shuffled candidates
//   relation      each pair independently with probability p_pair (0.35)
//   weakening     weakening closure of a random relation with p_pair / 2
//   congruence    closure of the order plus pairs with probability p_cong (0.2)
//   exreg object  poset of size uniform in [0, cap] with a random congruence
//   exreg map     Γ of a random map, or a random monotone map between the
//                 quotient realizations transported by q^* r_* p_*

#include <exreg/quotient.hpp>

#include <numeric>
#include <random>

namespace exreg {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Independent stream for trial `index` of a run seeded with `seed`.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return splitmix64(splitmix64(seed) ^ (index * 0xD1B54A32D192ED03ULL + 1));
}

struct SizeBounds {
  std::size_t poset = 6;     // generic posets
  std::size_t relation = 5;  // carriers for cubic relation suites
  std::size_t exreg = 4;     // carriers of exreg objects
  std::size_t limit = 3;     // carriers where universal properties are enumerated
  std::size_t cone = 3;      // test cone sources
};

class Generator {
 public:
  static constexpr double p_edge = 0.35;
  static constexpr double p_pair = 0.35;
  static constexpr double p_cong = 0.2;

  explicit Generator(std::uint64_t seed, SizeBounds bounds = {}) : rng_(seed), seed_(seed), bounds_(bounds) {}

  std::uint64_t seed() const noexcept { return seed_; }
  const SizeBounds& bounds() const noexcept { return bounds_; }

  // Uniform in [lo, hi].
  std::size_t uniform(std::size_t lo, std::size_t hi) {
    const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % span);
    std::uint64_t v;
    do v = rng_();
    while (v >= limit);
    return lo + static_cast<std::size_t>(v % span);
  }

  std::uint64_t bits() { return rng_(); }

  bool coin(double p) { return static_cast<double>(rng_() >> 11) * 0x1.0p-53 < p; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[uniform(0, i - 1)]);
  }

  FinPoset poset(std::size_t n) {
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    shuffle(perm);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (coin(p_edge)) pairs.emplace_back(perm[i], perm[j]);
    return make_poset(n, pairs);
  }

  FinPoset poset_upto(std::size_t cap) { return poset(uniform(0, cap)); }
  FinPoset nonempty_poset_upto(std::size_t cap) { return poset(uniform(1, std::max<std::size_t>(cap, 1))); }

  // A random monotone map, or nothing when none exists (X nonempty, Y empty).
  std::optional<MonotoneMap> map(const FinPoset& X, const FinPoset& Y) {
    const std::size_t n = X.size();
    std::vector<std::size_t> a(n, 0);
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
      if (i == n) return true;
      std::vector<std::size_t> cand(Y.size());
      std::iota(cand.begin(), cand.end(), 0);
      shuffle(cand);
      for (std::size_t y : cand) {
        bool ok = true;
        for (std::size_t j = 0; j < i && ok; ++j) {
          if (X.leq(j, i) && !Y.leq(a[j], y)) ok = false;
          if (X.leq(i, j) && !Y.leq(y, a[j])) ok = false;
        }
        if (!ok) continue;
        a[i] = y;
        if (go(i + 1)) return true;
      }
      return false;
    };
    if (!go(0)) return std::nullopt;
    return MonotoneMap::unchecked(X, Y, std::move(a));
  }

  // X arbitrary up to `cap`; Y nonempty whenever X is, so a map exists.
  MonotoneMap map_upto(std::size_t cap) {
    FinPoset X = poset_upto(cap);
    FinPoset Y = X.empty() ? poset_upto(cap) : nonempty_poset_upto(cap);
    return *map(X, Y);
  }

  MonotoneMap map_into(const FinPoset& Y, std::size_t cap) {
    FinPoset X = Y.empty() ? FinPoset() : poset_upto(cap);
    return *map(X, Y);
  }

  MonotoneMap map_from(const FinPoset& X, std::size_t cap) {
    FinPoset Y = X.empty() ? poset_upto(cap) : nonempty_poset_upto(cap);
    return *map(X, Y);
  }

  // Surjection: the first factor of the image factorization of a random map.
  MonotoneMap surjection_upto(std::size_t cap) { return image_factorize(map_upto(cap)).first; }

  Relation relation(const FinPoset& X, const FinPoset& Y, double p = p_pair) {
    BoolMatrix m(X.size(), Y.size());
    for (std::size_t x = 0; x < X.size(); ++x)
      for (std::size_t y = 0; y < Y.size(); ++y)
        if (coin(p)) m.set(x, y);
    return Relation(X, Y, std::move(m));
  }

  Relation weakening_relation(const FinPoset& X, const FinPoset& Y, double p = p_pair / 2) {
    return weakening_closure(relation(X, Y, p));
  }

  Relation congruence(const FinPoset& X, double p = p_cong) {
    BoolMatrix m = X.order();
    for (std::size_t i = 0; i < X.size(); ++i)
      for (std::size_t j = 0; j < X.size(); ++j)
        if (i != j && coin(p)) m.set(i, j);
    m.transitive_close();
    return Relation(X, X, std::move(m));
  }

  ExRegObject exreg_object(std::size_t cap) {
    FinPoset X = poset_upto(cap);
    return ExRegObject(X, congruence(X));
  }

  ExRegObject exreg_object() { return exreg_object(bounds_.exreg); }

  ExRegObject nonempty_exreg_object(std::size_t cap) {
    FinPoset X = nonempty_poset_upto(cap);
    return ExRegObject(X, congruence(X));
  }

  // A random morphism between given objects, or nothing when none exists.
  std::optional<ExRegMorphism> exreg_morphism(const ExRegObject& A, const ExRegObject& B) {
    Realization P = quotient_realize(A);
    Realization Q = quotient_realize(B);
    auto r = map(P.poset, Q.poset);
    if (!r) return std::nullopt;
    return morphism_from_map(A, B, P, Q, *r);
  }

  // Either Γ of a random map or a transported random map between quotients.
  ExRegMorphism exreg_morphism(std::size_t cap) {
    if (coin(0.5)) return gamma(map_upto(cap));
    ExRegObject A = exreg_object(cap);
    ExRegObject B = A.size() == 0 ? exreg_object(cap) : nonempty_exreg_object(cap);
    return *exreg_morphism(A, B);
  }

  ExRegMorphism exreg_morphism() { return exreg_morphism(bounds_.exreg); }

  ExRegMorphism exreg_morphism_from(const ExRegObject& A, std::size_t cap) {
    ExRegObject B = A.size() == 0 ? exreg_object(cap) : nonempty_exreg_object(cap);
    return *exreg_morphism(A, B);
  }

  ExRegMorphism exreg_morphism_into(const ExRegObject& B, std::size_t cap) {
    ExRegObject A = B.size() == 0 ? ExRegObject(FinPoset(), Relation(FinPoset(), FinPoset(), BoolMatrix()))
                                  : exreg_object(cap);
    return *exreg_morphism(A, B);
  }

  // Preorder R ⊇ E obtained by adding random pairs to E and closing.
  Relation congruence_over(const Relation& E, double p = p_cong) {
    BoolMatrix m = E.matrix();
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (i != j && coin(p)) m.set(i, j);
    m.transitive_close();
    return Relation(E.dom(), E.cod(), std::move(m));
  }

 private:
  std::mt19937_64 rng_;
  std::uint64_t seed_;
  SizeBounds bounds_;
};

// One-shot draws from a fresh stream.
inline FinPoset gen_poset(std::uint64_t seed, std::size_t n) { return Generator(seed).poset(n); }
inline std::optional<MonotoneMap> gen_map(std::uint64_t seed, const FinPoset& X, const FinPoset& Y) {
  return Generator(seed).map(X, Y);
}
inline Relation gen_relation(std::uint64_t seed, const FinPoset& X, const FinPoset& Y) {
  return Generator(seed).relation(X, Y);
}
inline Relation gen_weakening_relation(std::uint64_t seed, const FinPoset& X, const FinPoset& Y) {
  return Generator(seed).weakening_relation(X, Y);
}
inline Relation gen_congruence(std::uint64_t seed, const FinPoset& X) { return Generator(seed).congruence(X); }
inline ExRegObject gen_exreg_object(std::uint64_t seed, std::size_t cap) { return Generator(seed).exreg_object(cap); }
inline ExRegMorphism gen_exreg_morphism(std::uint64_t seed, std::size_t cap) {
  return Generator(seed).exreg_morphism(cap);
}

}  // namespace exreg
