#pragma once

// Property suites for the relation calculus of FinPos.

#include <exreg/rel_laws.hpp>
#include <exreg/suites_finpos.hpp>

namespace exreg::suites {

// Composable P: X⇸Y, Q: Y⇸Z and S: X⇸Z.
struct RelTriple {
  Relation P, Q, S;
};

inline RelTriple gen_triple(Generator& g, std::size_t cap, bool weakening) {
  FinPoset X = g.poset_upto(cap), Y = g.poset_upto(cap), Z = g.poset_upto(cap);
  auto rel = [&](const FinPoset& A, const FinPoset& B) {
    return weakening ? g.weakening_relation(A, B) : g.relation(A, B);
  };
  Relation P = rel(X, Y);
  Relation Q = rel(Y, Z);
  return {P, Q, rel(X, Z)};
}

// Drop one pair from one of the three relations.
inline std::vector<RelTriple> triple_candidates(const RelTriple& t) {
  std::vector<RelTriple> out;
  auto drop = [](const Relation& R, Pair p) {
    BoolMatrix m = R.matrix();
    m.set(p.first, p.second, false);
    return Relation(R.dom(), R.cod(), std::move(m));
  };
  for (auto p : t.P.pairs()) out.push_back({drop(t.P, p), t.Q, t.S});
  for (auto p : t.Q.pairs()) out.push_back({t.P, drop(t.Q, p), t.S});
  for (auto p : t.S.pairs()) out.push_back({t.P, t.Q, drop(t.S, p)});
  return out;
}

inline void dump_triple(Artifacts& d, const RelTriple& t) {
  std::string x = d.poset("X", t.P.dom()), y = d.poset("Y", t.P.cod()), z = d.poset("Z", t.Q.cod());
  d.rel("P", t.P, x, y);
  d.rel("Q", t.Q, y, z);
  d.rel("S", t.S, x, z);
}

inline std::string pair_text(const std::optional<Pair>& p) {
  return p ? " at " + std::to_string(p->first) + " ~ " + std::to_string(p->second) : "";
}

inline Suite modular_law() {
  return property<RelTriple>(
      "modular-law", "modular-law", "QP ∩ S ⊆ Q(P ∩ Q°S) and its dual",
      [](Generator& g) { return gen_triple(g, g.bounds().relation, false); },
      [](const RelTriple& t) -> Msg {
        ModularLawReport r = check_modular_law(t.P, t.Q, t.S);
        if (!r.ml.holds) return "ML fails" + pair_text(r.ml.witness);
        if (!r.ml_star.holds) return "ML* fails" + pair_text(r.ml_star.witness);
        return {};
      },
      dump_triple, triple_candidates);
}

struct DistributivityInstance {
  Relation R, S;  // Y⇸Z
  MonotoneMap f;  // X -> Y
  MonotoneMap g;  // X -> Z
};

inline Suite map_distributivity() {
  return property<DistributivityInstance>(
      "map-distributivity", "map-distributivity", "maps distribute over meets on either side",
      [](Generator& g) {
        std::size_t cap = g.bounds().relation;
        FinPoset Y = g.nonempty_poset_upto(cap), Z = g.nonempty_poset_upto(cap), X = g.poset_upto(cap);
        Relation R = g.relation(Y, Z);
        Relation S = g.relation(Y, Z);
        MonotoneMap f = *g.map(X, Y);
        return DistributivityInstance{R, S, f, *g.map(X, Z)};
      },
      [](const DistributivityInstance& in) -> Msg {
        DistributivityReport r = check_map_distributivity(in.R, in.S, in.f, in.g);
        if (!r.md) return "(R∩S)f != Rf ∩ Sf";
        if (!r.md_star) return "g°(R∩S) != g°R ∩ g°S";
        return {};
      },
      [](Artifacts& d, const DistributivityInstance& in) {
        std::string x = d.poset("X", in.f.dom()), y = d.poset("Y", in.R.dom()), z = d.poset("Z", in.R.cod());
        d.rel("R", in.R, y, z);
        d.rel("S", in.S, y, z);
        d.map("f", in.f, x, y);
        d.map("g", in.g, x, z);
      });
}

// Associativity, units, opposite, weakening closure and pointwise membership.
struct ChainInstance {
  Relation R, S, T;  // W⇸X⇸Y⇸Z
  bool weakening;
};

inline Suite relation_laws() {
  return property<ChainInstance>(
      "relation-laws", "relation-calculus", "composition is associative and unital, opposite reverses it",
      [](Generator& g) {
        std::size_t cap = g.bounds().relation;
        bool w = g.coin(0.5);
        FinPoset W = g.poset_upto(cap), X = g.poset_upto(cap), Y = g.poset_upto(cap), Z = g.poset_upto(cap);
        auto rel = [&](const FinPoset& A, const FinPoset& B) {
          return w ? g.weakening_relation(A, B) : g.relation(A, B);
        };
        Relation R = rel(W, X);
        Relation S = rel(X, Y);
        return ChainInstance{R, S, rel(Y, Z), w};
      },
      [](const ChainInstance& c) -> Msg {
        const Relation &R = c.R, &S = c.S, &T = c.T;
        if (!(compose(T, compose(S, R)) == compose(compose(T, S), R))) return "composition is not associative";
        if (!(compose(S, delta(S.dom())) == S) || !(compose(delta(S.cod()), S) == S)) return "Δ is not a unit";
        if (!(opposite(compose(S, R)) == compose(opposite(R), opposite(S)))) return "(SR)° != R°S°";
        if (!(opposite(opposite(S)) == S)) return "opposite is not an involution";
        // pointwise membership against a direct triple loop
        for (std::size_t w = 0; w < R.dom().size(); ++w)
          for (std::size_t y = 0; y < S.cod().size(); ++y) {
            bool exists = false;
            for (std::size_t x = 0; x < R.cod().size() && !exists; ++x) exists = R(w, x) && S(x, y);
            if (exists != compose(S, R)(w, y)) return "composite disagrees with pointwise membership";
          }
        if (c.weakening) {
          if (!(compose(identity_I(S.cod()), S) == S) || !(compose(S, identity_I(S.dom())) == S))
            return "I is not a unit on a weakening-closed relation";
          if (!compose(S, R).is_weakening_closed()) return "composite is not weakening-closed";
          // a second weakening-closed relation of the same shape
          BoolMatrix half(S.dom().size(), S.cod().size());
          for (auto [x, y] : S.pairs())
            if ((x + y) % 2 == 0) half.set(x, y);
          Relation S2 = weakening_closure(Relation(S.dom(), S.cod(), std::move(half)));
          if (!meet(S, S2).is_weakening_closed()) return "meet is not weakening-closed";
        }
        return {};
      },
      [](Artifacts& d, const ChainInstance& c) {
        std::string w = d.poset("W", c.R.dom()), x = d.poset("X", c.R.cod()), y = d.poset("Y", c.S.cod()),
                    z = d.poset("Z", c.T.cod());
        d.rel("R", c.R, w, x);
        d.rel("S", c.S, x, y);
        d.rel("T", c.T, y, z);
      });
}

inline Suite compose_crosscheck() {
  return property<RelTriple>(
      "compose-crosscheck", "relation-calculus", "matrix composition equals pullback followed by image",
      [](Generator& g) { return gen_triple(g, std::min<std::size_t>(g.bounds().relation, 4), false); },
      [](const RelTriple& t) -> Msg {
        return unless(compose(t.Q, t.P) == compose_via_pullback(t.Q, t.P),
                      "composites differ");
      },
      dump_triple, triple_candidates);
}

// Parallel f, g: X -> Y and h: Y -> Z.
struct MapTriple {
  MonotoneMap f, g, h;
};

inline Suite hypergraph_order() {
  return property<MapTriple>(
      "hypergraph-order", "hypergraphs", "hypergraphs and hypographs encode maps and their order",
      [](Generator& g) {
        std::size_t cap = g.bounds().poset;
        MonotoneMap f = g.map_upto(cap);
        MonotoneMap f2 = *g.map(f.dom(), f.cod());
        return MapTriple{f, f2, g.map_from(f.cod(), cap)};
      },
      [](const MapTriple& m) -> Msg {
        const MonotoneMap &f = m.f, &g = m.g, &h = m.h;
        bool le = pointwise_leq(f, g);
        if (le != includes(hypergraph(f), hypergraph(g))) return "f <= g disagrees with g_* ⊆ f_*";
        if (le != includes(hypograph(g), hypograph(f))) return "f <= g disagrees with f^* ⊆ g^*";
        if (!(hypergraph(compose(h, f)) == compose(hypergraph(h), hypergraph(f)))) return "(hf)_* != h_* f_*";
        if (!(hypograph(compose(h, f)) == compose(hypograph(f), hypograph(h)))) return "(hf)^* != f^* h^*";
        if (!hypergraph(f).is_weakening_closed() || !hypograph(f).is_weakening_closed())
          return "hypergraph or hypograph is not weakening-closed";
        if (!is_adjoint_pair(hypergraph(f), hypograph(f))) return "f_* is not left adjoint to f^*";
        Relation gr = graph(f);
        if (!(compose(identity_I(f.cod()), gr) == hypergraph(f))) return "f_* != I f";
        return unless(compose(opposite(gr), identity_I(f.cod())) == hypograph(f), "f^* != f° I");
      },
      [](Artifacts& d, const MapTriple& m) {
        std::string x = d.poset("X", m.f.dom()), y = d.poset("Y", m.f.cod());
        d.map("f", m.f, x, y);
        d.map("g", m.g, x, y);
        d.map("h", m.h, y, d.poset("Z", m.h.cod()));
      });
}

inline Suite kernel_identity() {
  return property<MonotoneMap>(
      "kernel-identity", "kernel-identity", "f^* f_* is the kernel congruence f/f",
      [](Generator& g) { return g.map_upto(g.bounds().poset); },
      [](const MonotoneMap& f) -> Msg {
        if (!kernel_identity_check(f)) return "f^* f_* differs from the comma f/f";
        Relation k = compose(hypograph(f), hypergraph(f));
        for (std::size_t a = 0; a < f.dom().size(); ++a)
          for (std::size_t b = 0; b < f.dom().size(); ++b)
            if (k(a, b) != f.cod().leq(f(a), f(b))) return "f^* f_* disagrees with f a <= f b";
        return {};
      },
      [](Artifacts& d, const MonotoneMap& f) { d.map("f", f); }, map_candidates);
}

// Every weakening-closed relation with carriers at most `cap` is enumerated
// by subsets; small enough for exhaustive right-adjoint search.
inline std::vector<Relation> all_weakening_relations(const FinPoset& X, const FinPoset& Y) {
  std::vector<Relation> out;
  const std::size_t n = X.size(), m = Y.size(), bits = n * m;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
    BoolMatrix b(n, m);
    for (std::size_t k = 0; k < bits; ++k)
      if (mask >> k & 1) b.set(k / m, k % m);
    Relation R(X, Y, std::move(b));
    if (R.is_weakening_closed()) out.push_back(std::move(R));
  }
  return out;
}

struct MapsInstance {
  MonotoneMap f;
  Relation phi;  // weakening-closed, small carriers
};

inline Suite maps_theorem() {
  return property<MapsInstance>(
      "maps-theorem", "maps-theorem", "left adjoints in Rel_w are exactly hypergraphs of maps",
      [](Generator& g) {
        MonotoneMap f = g.map_upto(g.bounds().poset);
        std::size_t cap = std::min<std::size_t>(g.bounds().relation, 3);
        FinPoset X = g.poset_upto(cap), Y = g.poset_upto(cap);
        // bias towards hypergraphs so both answers occur
        Relation phi = g.coin(0.4) && (X.empty() || !Y.empty()) ? hypergraph(*g.map(X, Y)) : g.weakening_relation(X, Y);
        return MapsInstance{f, phi};
      },
      [](const MapsInstance& in) -> Msg {
        if (!(extract_map(hypergraph(in.f), hypograph(in.f)) == in.f)) return "extract_map does not recover f";
        const Relation& phi = in.phi;
        bool has_adjoint = false;
        for (const auto& psi : all_weakening_relations(phi.cod(), phi.dom()))
          if (is_adjoint_pair(phi, psi)) {
            has_adjoint = true;
            if (!(hypergraph(extract_map(phi, psi)) == phi)) return "extracted map does not give back φ";
          }
        bool is_hyper = false;
        for (const auto& h : monotone_maps(phi.dom(), phi.cod())) is_hyper = is_hyper || hypergraph(h) == phi;
        if (has_adjoint != is_hyper)
          return std::string("φ ") + (has_adjoint ? "has" : "has no") + " right adjoint but " +
                 (is_hyper ? "is" : "is not") + " a hypergraph";
        return {};
      },
      [](Artifacts& d, const MapsInstance& in) {
        d.map("f", in.f);
        std::string x = d.poset("X", in.phi.dom()), y = d.poset("Y", in.phi.cod());
        d.rel("phi", in.phi, x, y);
      });
}

struct CongruenceInstance {
  FinPoset X;
  BoolMatrix E;
};

inline CongruenceInstance gen_congruence_instance(Generator& g, std::size_t cap) {
  FinPoset X = g.poset_upto(cap);
  return {X, g.congruence(X).matrix()};
}

inline std::vector<CongruenceInstance> congruence_candidates(const CongruenceInstance& c) {
  std::vector<CongruenceInstance> out;
  for (const auto& A : object_candidates(ExRegObject(c.X, Relation(c.X, c.X, c.E))))
    out.push_back({A.carrier(), A.congruence().matrix()});
  return out;
}

inline void dump_congruence(Artifacts& d, const CongruenceInstance& c) {
  std::string x = d.poset("X", c.X);
  d.rel("E", Relation(c.X, c.X, c.E), x, x);
}

inline MonotoneMap congruence_quotient(const CongruenceInstance& c) {
  Span e = pair_subposet(c.X, c.X, [&](std::size_t a, std::size_t b) { return c.E.test(a, b); });
  return coinserter(e.p0, e.p1);
}

inline Suite effective_splitting() {
  return property<CongruenceInstance>(
      "effective-splitting", "effective-splitting", "congruences split as idempotents through their quotients",
      [](Generator& g) { return gen_congruence_instance(g, g.bounds().poset); },
      [](const CongruenceInstance& c) -> Msg {
        Relation E(c.X, c.X, c.E);
        if (!E.is_weakening_closed()) return "congruence is not weakening-closed";
        if (!(compose(E, E) == E)) return "E E != E";
        MonotoneMap q = congruence_quotient(c);
        if (!(compose(hypograph(q), hypergraph(q)) == E)) return "q^* q_* != E";
        if (!(compose(hypergraph(q), hypograph(q)) == identity_I(q.cod()))) return "q_* q^* != I";
        return unless(extract_map(hypergraph(q), hypograph(q)) == q, "splitting is not given by a map");
      },
      dump_congruence, congruence_candidates);
}

inline Suite exact_fork() {
  return property<CongruenceInstance>(
      "exact-fork", "exact-fork", "identities of the exact fork of a congruence",
      [](Generator& g) { return gen_congruence_instance(g, g.bounds().poset); },
      [](const CongruenceInstance& c) -> Msg {
        ForkReport r = exact_fork_identities(congruence_quotient(c), Relation(c.X, c.X, c.E));
        if (!r.pE) return "pE != p_*";
        if (!r.Ep) return "Ep° != p^*";
        if (!r.pEp) return "p_* E p^* != I";
        if (!r.counit) return "p_* p^* != I";
        return unless(r.symmetric, "p° p != E ∩ E°");
      },
      dump_congruence, congruence_candidates);
}

}  // namespace exreg::suites
