#pragma once

// Property suites for FinPos: regularity, limits, coinserters and the
// kernel/coinserter correspondence.

#include <exreg/harness.hpp>
#include <exreg/universal.hpp>

namespace exreg::suites {

using Msg = std::optional<std::string>;

inline Msg unless(bool ok, const std::string& what) { return ok ? Msg{} : Msg{what}; }

inline std::vector<MonotoneMap> surjective_candidates(const MonotoneMap& f) {
  std::vector<MonotoneMap> out;
  for (auto& c : map_candidates(f))
    if (classify_map(c).is_so) out.push_back(std::move(c));
  return out;
}

struct ParallelPair {
  MonotoneMap f0, f1;
};

inline ParallelPair gen_parallel(Generator& g, std::size_t cap) {
  MonotoneMap f0 = g.map_upto(cap);
  return {f0, *g.map(f0.dom(), f0.cod())};
}

inline void dump_parallel(Artifacts& d, const ParallelPair& p) {
  std::string a = d.poset("A", p.f0.dom()), x = d.poset("X", p.f0.cod());
  d.map("f0", p.f0, a, x);
  d.map("f1", p.f1, a, x);
}

inline Suite finpos_factorization() {
  return property<MonotoneMap>(
      "finpos-factorization", "finpos-regular", "image factorization is so followed by ff",
      [](Generator& g) { return g.map_upto(g.bounds().poset); },
      [](const MonotoneMap& f) -> Msg {
        auto [e, m] = image_factorize(f);
        if (!(compose(m, e) == f)) return "m e != f";
        if (!classify_map(e).is_so) return "e is not surjective";
        if (!classify_map(m).is_ff) return "m is not an order-embedding";
        // image carrier is the set-image of f
        std::set<std::size_t> img(f.assign().begin(), f.assign().end());
        return unless(img.size() == m.dom().size(), "image has the wrong size");
      },
      [](Artifacts& d, const MonotoneMap& f) { d.map("f", f); }, map_candidates);
}

struct SoCospan {
  MonotoneMap f;  // surjective
  MonotoneMap g;
};

inline Suite so_stability() {
  return property<SoCospan>(
      "so-stability", "finpos-regular", "surjections are stable under pullback",
      [](Generator& g) {
        MonotoneMap f = g.surjection_upto(g.bounds().poset);
        return SoCospan{f, g.map_into(f.cod(), g.bounds().poset)};
      },
      [](const SoCospan& c) -> Msg {
        Span pb = pullback(c.f, c.g);
        return unless(classify_map(pb.p1).is_so, "pullback leg opposite the surjection is not surjective");
      },
      [](Artifacts& d, const SoCospan& c) {
        std::string y = d.poset("Y", c.f.cod());
        d.map("f", c.f, d.poset("X", c.f.dom()), y);
        d.map("g", c.g, d.poset("Z", c.g.dom()), y);
      });
}

inline Suite r4_redundancy() {
  return property<MonotoneMap>(
      "r4-redundancy", "r4-redundancy", "every surjection is the coinserter of its kernel congruence",
      [](Generator& g) { return g.surjection_upto(g.bounds().poset); },
      [](const MonotoneMap& f) -> Msg {
        Span k = kernel_congruence(f);
        if (auto c = verify_coinserter(f, k.p0, k.p1); !c) return "f: " + c.detail;
        MonotoneMap q = coinserter(k.p0, k.p1);
        if (auto c = verify_coinserter(q, k.p0, k.p1); !c) return "constructed coinserter: " + c.detail;
        return unless(isomorphic(q.cod(), f.cod()), "coinserter of the kernel is not iso to the codomain");
      },
      [](Artifacts& d, const MonotoneMap& f) { d.map("f", f); }, surjective_candidates);
}

struct DualityInstance {
  ParallelPair pair;   // an arbitrary pair into X
  BoolMatrix cong;     // a congruence on X
};

inline Suite kernel_coinserter_duality() {
  return property<DualityInstance>(
      "kernel-coinserter-duality", "kernel-coinserter-duality",
      "coinserters are coinserters of their kernels, congruences are kernels of their coinserters",
      [](Generator& g) {
        ParallelPair p = gen_parallel(g, g.bounds().poset);
        return DualityInstance{p, g.congruence(p.f0.cod()).matrix()};
      },
      [](const DualityInstance& in) -> Msg {
        MonotoneMap q = coinserter(in.pair.f0, in.pair.f1);
        Span k = kernel_congruence(q);
        MonotoneMap q2 = coinserter(k.p0, k.p1);
        if (!(q2.assign() == q.assign()) || !(q2.cod() == q.cod()))
          return "coinserter of the kernel differs from the coinserter";
        if (auto c = verify_coinserter(q, k.p0, k.p1); !c) return "kernel direction: " + c.detail;
        const FinPoset& X = in.pair.f0.cod();
        Span e = pair_subposet(X, X, [&](std::size_t a, std::size_t b) { return in.cong.test(a, b); });
        MonotoneMap p = coinserter(e.p0, e.p1);
        Relation ker = compose(hypograph(p), hypergraph(p));
        return unless(ker.matrix() == in.cong, "congruence is not the kernel of its coinserter");
      },
      [](Artifacts& d, const DualityInstance& in) {
        dump_parallel(d, in.pair);
        const FinPoset& X = in.pair.f0.cod();
        d.rel("E", Relation(X, X, in.cong), "X.poset", "X.poset");
      });
}

inline Suite coinserter_so() {
  return property<ParallelPair>(
      "coinserter-so", "coinserter-so", "every coinserter is surjective and universal",
      [](Generator& g) { return gen_parallel(g, g.bounds().poset); },
      [](const ParallelPair& p) -> Msg {
        MonotoneMap q = coinserter(p.f0, p.f1);
        if (!classify_map(q).is_so) return "coinserter is not surjective";
        if (auto c = verify_coinserter(q, p.f0, p.f1); !c) return c.detail;
        return {};
      },
      dump_parallel);
}

// Right square: the comma of f: X -> Y and g: Z -> Y. Left square: a
// commuting square over x: W -> X and the comma leg, either the pullback or
// a restriction or discretization of it.
struct PastingInstance {
  MonotoneMap f, g, x;
  std::vector<std::size_t> keep;  // elements of the pullback kept
  bool discrete;                  // forget the order on the kept part
};

inline Suite pasting() {
  return property<PastingInstance>(
      "pasting", "pasting", "pasted rectangle is a comma iff the left square is a pullback",
      [](Generator& g) {
        std::size_t cap = std::min<std::size_t>(g.bounds().poset, 4);
        MonotoneMap f = g.map_upto(cap);
        MonotoneMap h = g.map_into(f.cod(), cap);
        MonotoneMap x = g.map_into(f.dom(), cap);
        Span pb = pullback(x, comma(f, h).p0);
        std::vector<std::size_t> keep;
        bool full = g.coin(0.5);
        for (std::size_t i = 0; i < pb.apex.size(); ++i)
          if (full || g.coin(0.8)) keep.push_back(i);
        return PastingInstance{f, h, x, keep, !full && g.coin(0.3)};
      },
      [](const PastingInstance& in) -> Msg {
        Span right = comma(in.f, in.g);
        Span pb = pullback(in.x, right.p0);
        MonotoneMap incl = subposet_inclusion(pb.apex, in.keep);
        FinPoset P = in.discrete ? discrete(in.keep.size()) : incl.dom();
        MonotoneMap p0(P, in.x.dom(), compose(pb.p0, incl).assign());
        MonotoneMap p1(P, right.apex, compose(pb.p1, incl).assign());
        bool left_pb = static_cast<bool>(verify_pair_limit(
            Span{P, p0, p1}, [&](std::size_t w, std::size_t c) { return in.x(w) == right.p0(c); }));
        const FinPoset& Y = in.f.cod();
        bool outer_comma = static_cast<bool>(
            verify_pair_limit(Span{P, p0, compose(right.p1, p1)},
                              [&](std::size_t w, std::size_t z) { return Y.leq(in.f(in.x(w)), in.g(z)); }));
        if (left_pb != outer_comma)
          return std::string("left square ") + (left_pb ? "is" : "is not") + " a pullback but the rectangle " +
                 (outer_comma ? "is" : "is not") + " a comma";
        return {};
      },
      [](Artifacts& d, const PastingInstance& in) {
        std::string x = d.poset("X", in.f.dom()), y = d.poset("Y", in.f.cod());
        d.map("f", in.f, x, y);
        d.map("g", in.g, d.poset("Z", in.g.dom()), y);
        d.map("x", in.x, d.poset("W", in.x.dom()), x);
        std::string keep = "keep";
        for (auto k : in.keep) keep += " " + std::to_string(k);
        d.note("square.txt", keep + "\ndiscrete " + (in.discrete ? "yes" : "no") + "\n");
      });
}

// Equalizers by inserters, powers by inserters, and the universal properties
// of products, inserters and commas.
inline Suite finpos_limits() {
  return property<ParallelPair>(
      "finpos-limits", "finpos-limits", "finite limits of FinPos and their inserter constructions",
      [](Generator& g) { return gen_parallel(g, std::min<std::size_t>(g.bounds().poset, 5)); },
      [](const ParallelPair& p) -> Msg {
        const MonotoneMap &f = p.f0, &g = p.f1;
        MonotoneMap eq = equalizer(f, g);
        MonotoneMap eqi = equalizer_via_inserters(f, g);
        if (!(eq.assign() == eqi.assign()) || !(eq.dom() == eqi.dom()))
          return "equalizer via inserters differs from the direct equalizer";
        if (auto c = verify_sub_limit(eq, [&](std::size_t x) { return f(x) == g(x); }); !c) return "equalizer: " + c.detail;
        const FinPoset& Y = f.cod();
        if (auto c = verify_sub_limit(inserter(f, g), [&](std::size_t x) { return Y.leq(f(x), g(x)); }); !c)
          return "inserter: " + c.detail;
        if (auto c = verify_pair_limit(comma(f, g), [&](std::size_t a, std::size_t b) { return Y.leq(f(a), g(b)); }); !c)
          return "comma: " + c.detail;
        if (auto c = verify_pair_limit(pullback(f, g), [&](std::size_t a, std::size_t b) { return f(a) == g(b); }); !c)
          return "pullback: " + c.detail;
        if (auto c = verify_pair_limit(product(f.dom(), Y), [](std::size_t, std::size_t) { return true; }); !c)
          return "product: " + c.detail;
        if (f.dom().size() <= 3 && Y.size() <= 3) {
          MonotoneMap pw = power_via_inserters(Y, f.dom());
          if (!isomorphic(pw.dom(), power(Y, f.dom()))) return "power via inserters is not iso to the hom-poset";
          if (!classify_map(pw).is_ff) return "power via inserters is not a subobject of the product";
        }
        return {};
      },
      dump_parallel);
}

}  // namespace exreg::suites
