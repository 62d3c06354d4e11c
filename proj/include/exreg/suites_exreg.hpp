#pragma once

// Property suites for the exact completion: maps, tabulations, limits,
// factorization, exactness, presentations and the lifted functor.

#include <exreg/equivalence.hpp>
#include <exreg/exreg_universal.hpp>
#include <exreg/suites_rel.hpp>
#include <exreg/tabulation.hpp>

namespace exreg::suites {

inline void dump_morphism(Artifacts& d, const ExRegMorphism& R) { d.morphism("R", R); }

// Two morphisms R: A -> B and S: B -> C.
struct ComposablePair {
  ExRegMorphism R, S;
};

inline ComposablePair gen_composable(Generator& g, std::size_t cap) {
  ExRegMorphism R = g.exreg_morphism(cap);
  return {R, g.exreg_morphism_from(R.tgt(), cap)};
}

inline void dump_composable(Artifacts& d, const ComposablePair& p) {
  std::string a = d.object("A", p.R.src()), b = d.object("B", p.R.tgt()), c = d.object("C", p.S.tgt());
  d.morphism("R", p.R, a, b);
  d.morphism("S", p.S, b, c);
}

struct MapPair {
  ExRegObject A, B;
  MonotoneMap r, r2;  // between the quotient realizations
};

inline Suite quotient_bijection() {
  return property<MapPair>(
      "quotient-bijection", "quotient-bijection",
      "morphisms correspond to monotone maps of quotients, order-reversingly in the lower relation",
      [](Generator& g) {
        std::size_t cap = g.bounds().exreg;
        ExRegObject A = g.exreg_object(cap);
        ExRegObject B = A.size() == 0 ? g.exreg_object(cap) : g.nonempty_exreg_object(cap);
        FinPoset P = quotient_realize(A).poset, Q = quotient_realize(B).poset;
        MonotoneMap r = *g.map(P, Q);
        return MapPair{A, B, r, *g.map(P, Q)};
      },
      [](const MapPair& m) -> Msg {
        Realization P = quotient_realize(m.A), Q = quotient_realize(m.B);
        ExRegMorphism R = morphism_from_map(m.A, m.B, P, Q, m.r);
        ExRegMorphism R2 = morphism_from_map(m.A, m.B, P, Q, m.r2);
        if (!(realize_morphism(R, P, Q) == m.r)) return "r -> R -> r does not round-trip";
        if (!(realized_hypergraph(R, P, Q) == hypergraph(m.r))) return "q_* R_* p^* != r_*";
        if (!(morphism_from_map(m.A, m.B, P, Q, realize_morphism(R2, P, Q)) == R2))
          return "R -> r -> R does not round-trip";
        if (pointwise_leq(m.r, m.r2) != includes(R.lower(), R2.lower()))
          return "r <= r' disagrees with R'_* ⊆ R_*";
        if (pointwise_leq(m.r, m.r2) != hom_leq(R, R2)) return "hom order disagrees with the map order";
        return unless((m.r == m.r2) == (R == R2), "correspondence is not injective");
      },
      [](Artifacts& d, const MapPair& m) {
        d.object("A", m.A);
        d.object("B", m.B);
        Realization P = quotient_realize(m.A), Q = quotient_realize(m.B);
        std::string p = d.poset("A.quotient", P.poset), q = d.poset("B.quotient", Q.poset);
        d.map("r", m.r, p, q);
        d.map("r2", m.r2, p, q);
      });
}

inline Suite graph_conjugation() {
  return property<ExRegMorphism>(
      "graph-conjugation", "graph-conjugation", "the realized map is q gr(R) p° and its hypergraph q R_* p°",
      [](Generator& g) { return g.exreg_morphism(); },
      [](const ExRegMorphism& R) -> Msg {
        Realization P = quotient_realize(R.src()), Q = quotient_realize(R.tgt());
        MonotoneMap r = realize_morphism(R, P, Q);
        Relation pinv = opposite(graph(P.projection));
        Relation q = graph(Q.projection);
        if (!(compose(q, compose(graph_of(R), pinv)) == graph(r))) return "q gr(R) p° != r";
        return unless(compose(q, compose(R.lower(), pinv)) == hypergraph(r), "q R_* p° != r_*");
      },
      dump_morphism);
}

inline Suite graph_functor() {
  return property<ComposablePair>(
      "graph-functor", "graph-functor", "gr is functorial and recovers both relations",
      [](Generator& g) { return gen_composable(g, g.bounds().exreg); },
      [](const ComposablePair& p) -> Msg {
        const ExRegMorphism &R = p.R, &S = p.S;
        if (!(graph_of(compose(S, R)) == compose(graph_of(S), graph_of(R)))) return "gr(SR) != gr(S) gr(R)";
        const Relation& F = R.tgt().congruence();
        if (!(compose(F, graph_of(R)) == R.lower())) return "F gr(R) != R_*";
        if (!(compose(opposite(graph_of(R)), F) == R.upper())) return "gr(R)° F != R^*";
        const Relation& E = R.src().congruence();
        if (!(graph_of(identity(R.src())) == symmetric_part(E))) return "gr(1) != E ∩ E°";
        if (!(compose(R, identity(R.src())) == R) || !(compose(identity(R.tgt()), R) == R))
          return "identity is not a unit";
        return unless(derive_right_adjoint(R.src(), R.tgt(), R.lower()) == R.upper(),
                      "derived right adjoint differs from R^*");
      },
      dump_composable);
}

inline Suite classification() {
  return property<ExRegMorphism>(
      "classification", "classification", "ff, so and iso by kernel and image equations",
      [](Generator& g) {
        // mix in covers and quotient legs, which are so by construction
        std::size_t cap = g.bounds().exreg;
        switch (g.uniform(0, 3)) {
          case 0: {
            ExRegObject A = g.exreg_object(cap);
            return validate_morphism(gamma(A.carrier()), A, A.congruence(), A.congruence());
          }
          case 1: return factorize(g.exreg_morphism(cap)).ff;
          default: return g.exreg_morphism(cap);
        }
      },
      [](const ExRegMorphism& R) -> Msg {
        MapClass c = classify(R);
        MapClass r = classify_map(realize_morphism(R));
        if (c.is_ff != r.is_ff) return "ff disagrees with the realized map";
        if (c.is_so != r.is_so) return "so disagrees with the realized map";
        if (c.is_iso != r.is_iso) return "iso disagrees with the realized map";
        Relation g = graph_of(R);
        bool so_graph = compose(g, opposite(g)) == symmetric_part(R.tgt().congruence());
        return unless(so_graph == c.is_so, "RR° = F ∩ F° disagrees with R_* R^* = F");
      },
      dump_morphism);
}

struct TabInstance {
  ExRegObject A, B;
  Relation phi;
  std::uint64_t cone_seed;
  std::size_t cones;
};

inline std::string check_tabulation(const TabInstance& in, std::size_t cone_cap) {
  Tabulation tab = tabulate(in.phi, in.A, in.B);
  if (!tabulation_laws_hold(tab)) return "tabulation laws fail";
  if (!jointly_order_mono(tab.leg0, tab.leg1)) return "legs are not jointly order-mono";
  Generator g(in.cone_seed);
  for (std::size_t c = 0; c < in.cones; ++c) {
    ExRegObject T = g.exreg_object(cone_cap);
    // a cone through the apex, and a pair of arbitrary morphisms
    if (auto H = g.exreg_morphism(T, tab.apex)) {
      ExRegMorphism S0 = compose(tab.leg0, *H), S1 = compose(tab.leg1, *H);
      ExRegMorphism K = tabulation_factor(tab, S0, S1);
      if (!(K == *H)) return "factorization of cone " + std::to_string(c) + " is not unique";
    }
    auto S0 = g.exreg_morphism(T, in.A);
    auto S1 = g.exreg_morphism(T, in.B);
    if (!S0 || !S1) continue;
    bool inside = includes(in.phi, compose(graph_of(*S1), opposite(graph_of(*S0))));
    try {
      ExRegMorphism K = tabulation_factor(tab, *S0, *S1);
      if (!inside) return "factor exists for a cone outside Φ";
      if (!(compose(tab.leg0, K) == *S0) || !(compose(tab.leg1, K) == *S1)) return "factor does not commute";
      // uniqueness by brute force when the hom is small
      Realization PT = quotient_realize(T), PA = quotient_realize(tab.apex);
      double homs = std::pow(static_cast<double>(PA.poset.size()), static_cast<double>(PT.poset.size()));
      if (homs <= 256) {
        std::size_t count = 0;
        for (const auto& H : hom_morphisms(T, tab.apex))
          count += compose(tab.leg0, H) == *S0 && compose(tab.leg1, H) == *S1;
        if (count != 1) return "cone " + std::to_string(c) + " has " + std::to_string(count) + " factorizations";
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::ConeNotIncluded || inside) throw;
    }
  }
  return {};
}

inline TabInstance gen_tab_instance(Generator& g, std::size_t cap, std::size_t cones) {
  ExRegObject A = g.exreg_object(cap), B = g.exreg_object(cap);
  Relation phi = q_closure(g.relation(A.carrier(), B.carrier(), 0.3), A, B);
  return {A, B, phi, g.bits(), cones};
}

inline Suite tabulation_suite() {
  return property<TabInstance>(
      "tabulation", "tabulation", "tabulations exist and cones factor through them uniquely",
      [](Generator& g) { return gen_tab_instance(g, g.bounds().exreg, 5); },
      [](const TabInstance& in) -> Msg {
        std::string m = check_tabulation(in, 3);
        return m.empty() ? Msg{} : Msg{m};
      },
      [](Artifacts& d, const TabInstance& in) {
        std::string a = d.object("A", in.A), b = d.object("B", in.B);
        d.rel("phi", in.phi, "A.poset", "B.poset");
        d.note("cones.txt", "seed " + std::to_string(in.cone_seed) + "\ncones " + std::to_string(in.cones) + "\n");
      });
}

inline Suite jointly_mono() {
  return property<ComposablePair>(
      "jointly-mono", "jointly-mono", "joint order-monos are detected by the meet of kernels",
      [](Generator& g) {
        std::size_t cap = g.bounds().exreg;
        ExRegObject A = g.exreg_object(cap);
        ExRegMorphism R = g.coin(0.3) ? identity(A) : g.exreg_morphism_from(A, cap);
        return ComposablePair{R, g.exreg_morphism_from(A, cap)};
      },
      [](const ComposablePair& p) -> Msg {
        // here R and S share their source
        const ExRegMorphism &R = p.R, &S = p.S;
        bool criterion = jointly_order_mono(R, S);
        bool brute = true;
        for (const auto& T : test_objects(2)) {
          auto homs = hom_morphisms(T, R.src());
          for (const auto& H : homs)
            for (const auto& K : homs)
              if (hom_leq(compose(R, H), compose(R, K)) && hom_leq(compose(S, H), compose(S, K)) && !hom_leq(H, K))
                brute = false;
        }
        return unless(criterion == brute, std::string("kernel criterion says ") + (criterion ? "mono" : "not mono") +
                                              " but test stages disagree");
      },
      [](Artifacts& d, const ComposablePair& p) {
        std::string a = d.object("A", p.R.src());
        d.morphism("R", p.R, a, d.object("B", p.R.tgt()));
        d.morphism("S", p.S, a, d.object("C", p.S.tgt()));
      });
}

struct FactorInstance {
  ExRegMorphism R;
  std::optional<MonotoneMap> f;  // R = Γf when present
};

inline Suite exreg_factorization() {
  return property<FactorInstance>(
      "exreg-factorization", "exreg-factorization", "(so,ff)-factorization through the tabulation of RR°",
      [](Generator& g) {
        if (g.coin(0.4)) {
          MonotoneMap f = g.map_upto(g.bounds().exreg);
          return FactorInstance{gamma(f), f};
        }
        return FactorInstance{g.exreg_morphism(), std::nullopt};
      },
      [](const FactorInstance& in) -> Msg {
        Factorization F = factorize(in.R);
        if (!(F.tab.leg0 == F.tab.leg1)) return "tabulation legs differ";
        if (!(compose(F.ff, F.so) == in.R)) return "M Q != R";
        if (!classify(F.so).is_so) return "Q is not so";
        if (!classify(F.ff).is_ff) return "M is not ff";
        if (in.f) {
          auto [e, m] = image_factorize(*in.f);
          if (!objects_isomorphic(F.so.tgt(), gamma(e.cod()))) return "image differs from the FinPos image";
        }
        return {};
      },
      [](Artifacts& d, const FactorInstance& in) { d.morphism("R", in.R); });
}

struct CospanInstance {
  ExRegMorphism R;  // A -> C
  ExRegMorphism S;  // B -> C
};

inline Suite exreg_so_stability() {
  return property<CospanInstance>(
      "exreg-so-stability", "exreg-so-stability", "so-morphisms are stable under pullback",
      [](Generator& g) {
        std::size_t cap = g.bounds().exreg;
        ExRegMorphism Q = factorize(g.exreg_morphism(cap)).so;
        return CospanInstance{Q, g.exreg_morphism_into(Q.tgt(), cap)};
      },
      [](const CospanInstance& c) -> Msg {
        ExRegLimit L = limit_pullback(c.R, c.S);
        if (!(compose(c.R, L.legs[0]) == compose(c.S, L.legs[1]))) return "pullback square does not commute";
        return unless(classify(L.legs[1]).is_so, "pulled back leg is not so");
      },
      [](Artifacts& d, const CospanInstance& c) {
        std::string t = d.object("C", c.R.tgt());
        d.morphism("R", c.R, d.object("A", c.R.src()), t);
        d.morphism("S", c.S, d.object("B", c.S.src()), t);
      });
}

// A limit problem of one of the five shapes.
struct LimitInstance {
  int kind;  // 0 terminal, 1 product, 2 inserter, 3 comma, 4 pullback
  ExRegMorphism R, S;
};

inline const char* limit_kind_name(int k) {
  static const char* names[] = {"terminal", "product", "inserter", "comma", "pullback"};
  return names[k];
}

inline Suite exreg_limits() {
  return property<LimitInstance>(
      "exreg-limits", "exreg-limits", "finite limits by tabulation, verified on all small cones",
      [](Generator& g) {
        std::size_t cap = g.bounds().limit;
        int kind = static_cast<int>(g.uniform(0, 4));
        ExRegMorphism R = g.exreg_morphism(cap);
        ExRegMorphism S = kind == 2   ? g.exreg_morphism(R.src(), R.tgt()).value_or(R)
                          : kind >= 3 ? g.exreg_morphism_into(R.tgt(), cap)
                                      : g.exreg_morphism(cap);
        return LimitInstance{kind, R, S};
      },
      [](const LimitInstance& in) -> Msg {
        const std::size_t bound = default_cone_bound;
        UniversalCheck c;
        switch (in.kind) {
          case 0: c = verify_terminal(limit_terminal(), bound); break;
          case 1: c = verify_product(limit_product(in.R.src(), in.S.src()), in.R.src(), in.S.src(), bound); break;
          case 2: c = verify_inserter(limit_inserter(in.R, in.S), in.R, in.S, bound); break;
          case 3: c = verify_comma(limit_comma(in.R, in.S), in.R, in.S, bound); break;
          default: c = verify_pullback(limit_pullback(in.R, in.S), in.R, in.S, bound); break;
        }
        if (!c) return std::string(limit_kind_name(in.kind)) + ": " + c.detail;
        if (in.kind == 2) {
          ExRegLimit self = limit_inserter(in.R, in.R);
          if (!classify(self.legs[0]).is_iso) return "inserter of (R,R) is not the whole object";
        }
        return {};
      },
      [](Artifacts& d, const LimitInstance& in) {
        d.note("kind.txt", std::string(limit_kind_name(in.kind)) + "\n");
        d.morphism("R", in.R);
        d.morphism("S", in.S);
      });
}

// Γ preserves limits: pullbacks and commas of Γf, Γg against FinPos.
inline Suite gamma_limits() {
  return property<suites::ParallelPair>(
      "gamma-limits", "exreg-limits", "Γ carries FinPos pullbacks and commas to exreg ones",
      [](Generator& g) {
        MonotoneMap f = g.map_upto(g.bounds().exreg);
        return suites::ParallelPair{f, g.map_into(f.cod(), g.bounds().exreg)};
      },
      [](const suites::ParallelPair& p) -> Msg {
        if (!objects_isomorphic(limit_pullback(gamma(p.f0), gamma(p.f1)).apex, gamma(pullback(p.f0, p.f1).apex)))
          return "pullback of Γf, Γg is not Γ of the pullback";
        if (!objects_isomorphic(limit_comma(gamma(p.f0), gamma(p.f1)).apex, gamma(comma(p.f0, p.f1).apex)))
          return "comma of Γf, Γg is not Γ of the comma";
        return {};
      },
      [](Artifacts& d, const suites::ParallelPair& p) {
        std::string y = d.poset("Y", p.f0.cod());
        d.map("f", p.f0, d.poset("X", p.f0.dom()), y);
        d.map("g", p.f1, d.poset("Z", p.f1.dom()), y);
      });
}

struct ExactInstance {
  ExRegObject A;
  Relation R;  // ⊇ E
};

inline Suite exactness() {
  return property<ExactInstance>(
      "exactness", "exactness", "congruences over E split with kernel R, matching the FinPos quotient",
      [](Generator& g) {
        ExRegObject A = g.exreg_object(g.bounds().exreg);
        return ExactInstance{A, g.congruence_over(A.congruence())};
      },
      [](const ExactInstance& in) -> Msg {
        Splitting s = split_congruence(in.A, in.R);
        if (!(compose(s.section.rel, s.quotient.lower()) == in.R)) return "legs do not compose to R";
        if (!classify(s.quotient).is_so) return "quotient leg is not so";
        if (!(compose(s.quotient.upper(), s.quotient.lower()) == in.R)) return "kernel of the quotient leg is not R";
        // the comma of the quotient leg with itself tabulates R
        ExRegLimit k = limit_comma(s.quotient, s.quotient);
        if (!(compose(graph_of(k.legs[1]), opposite(graph_of(k.legs[0]))) == in.R))
          return "comma of the quotient leg does not present R";
        const FinPoset& X = in.A.carrier();
        MonotoneMap q = poset_reflection(X, in.R.matrix());
        if (!isomorphic(quotient_realize(s.middle).poset, q.cod())) return "quotient differs from the FinPos reflection";
        return unless(compose(hypograph(q), hypergraph(q)) == in.R, "FinPos kernel of the reflection is not R");
      },
      [](Artifacts& d, const ExactInstance& in) {
        d.object("A", in.A);
        d.rel("R", in.R, "A.poset", "A.poset");
      });
}

inline Suite presentation() {
  return property<ExRegObject>(
      "presentation", "presentation", "ΓE ⇉ ΓX ↠ (X,E) is a comma square and a coinserter",
      [](Generator& g) { return g.exreg_object(g.bounds().limit); },
      [](const ExRegObject& A) -> Msg {
        Presentation p = canonical_presentation(A);
        if (p.pairs.size() != A.congruence().size()) return "comma carrier has the wrong size";
        if (auto c = verify_presentation(p); !c) return c.detail;
        return {};
      },
      [](Artifacts& d, const ExRegObject& A) { d.object("A", A); }, object_candidates);
}

struct LiftInstance {
  BaseFunctor base;
  ExRegMorphism R, R2;  // parallel A -> B
  ExRegMorphism S;      // B -> C
};

inline ExRegObject gen_base_object(Generator& g, BaseFunctor base, std::size_t cap, bool nonempty) {
  std::size_t n = g.uniform(nonempty ? 1 : 0, std::max<std::size_t>(cap, 1));
  FinPoset X = base == BaseFunctor::DiscreteInclusion ? discrete(n) : g.poset(n);
  return ExRegObject(X, g.congruence(X, 0.3));
}

inline Suite universal_property() {
  return property<LiftInstance>(
      "universal-property", "universal-property", "the extension of F along Γ is a regular functor extending F",
      [](Generator& g) {
        std::size_t cap = g.bounds().exreg;
        BaseFunctor base = g.coin(0.5) ? BaseFunctor::DiscreteInclusion : BaseFunctor::Identity;
        ExRegObject A = gen_base_object(g, base, cap, false);
        ExRegObject B = gen_base_object(g, base, cap, A.size() > 0);
        ExRegObject C = gen_base_object(g, base, cap, B.size() > 0);
        ExRegMorphism R = *g.exreg_morphism(A, B);
        return LiftInstance{base, R, *g.exreg_morphism(A, B), *g.exreg_morphism(B, C)};
      },
      [](const LiftInstance& in) -> Msg {
        const BaseFunctor F = in.base;
        const ExRegObject &A = in.R.src(), &B = in.R.tgt(), &C = in.S.tgt();
        MonotoneMap p = lift_object(F, A), q = lift_object(F, B), r = lift_object(F, C);
        MonotoneMap lr = lift_morphism(F, in.R, p, q);
        MonotoneMap lr2 = lift_morphism(F, in.R2, p, q);
        MonotoneMap ls = lift_morphism(F, in.S, q, r);
        if (!(lift_morphism(F, compose(in.S, in.R), p, r) == compose(ls, lr))) return "lift does not preserve composition";
        if (!(lift_morphism(F, identity(A), p, p) == identity_map(p.cod()))) return "lift does not preserve identities";
        if (hom_leq(in.R, in.R2) && !pointwise_leq(lr, lr2)) return "lift does not preserve the order";
        if (hom_leq(in.R, in.R2) != pointwise_leq(lr, lr2)) return "lift does not reflect the order";
        if (classify(in.R).is_so && !classify_map(lr).is_so) return "lift does not preserve so";
        // F̄ Γ ≅ F
        MonotoneMap pg = lift_object(F, gamma(A.carrier()));
        if (!classify_map(pg).is_iso) return "F̄ Γ X is not F X";
        // agrees with the quotient realization
        if (!(pg.cod() == A.carrier()) || !(p.cod() == quotient_realize(A).poset))
          return "lifted objects differ from quotient realizations";
        if (!(lr == realize_morphism(in.R))) return "lifted morphism differs from the realized map";
        // preserves products, and Γ of maps goes to the map
        ExRegLimit prod = limit_product(A, B);
        if (!isomorphic(lift_object(F, prod.apex).cod(), product(p.cod(), q.cod()).apex))
          return "lift does not preserve products";
        ExRegLimit pb = limit_pullback(in.R, in.R2);
        Span pbl = pullback(lr, lr2);
        if (!isomorphic(lift_object(F, pb.apex).cod(), pbl.apex)) return "lift does not preserve pullbacks";
        for (const auto& f : monotone_maps(A.carrier(), B.carrier()))
          if (!(lift_morphism(F, gamma(f)) == f)) return "F̄ Γ f != f";
        return {};
      },
      [](Artifacts& d, const LiftInstance& in) {
        d.note("base.txt", std::string(base_functor_name(in.base)) + "\n");
        std::string a = d.object("A", in.R.src()), b = d.object("B", in.R.tgt()), c = d.object("C", in.S.tgt());
        d.morphism("R", in.R, a, b);
        d.morphism("R2", in.R2, a, b);
        d.morphism("S", in.S, b, c);
      });
}

// Rel and Rel_w composites by the categorical recipe against direct
// composition: Φ: A ⇸ B and Ψ: B ⇸ C.
struct RelPairInstance {
  ExRegObject A, B, C;
  Relation phi, psi;
};

inline Suite rel_equivalence() {
  return property<RelPairInstance>(
      "rel-equivalence", "rel-equivalence", "relations of the completion compose like their Q(E) images",
      [](Generator& g) {
        std::size_t cap = std::min<std::size_t>(g.bounds().exreg, 3);
        ExRegObject A = g.exreg_object(cap), B = g.exreg_object(cap), C = g.exreg_object(cap);
        const bool weak = g.coin(0.5);
        auto rel = [&](const ExRegObject& X, const ExRegObject& Y) {
          Relation r = g.relation(X.carrier(), Y.carrier(), 0.3);
          return weak ? compose(Y.congruence(), compose(r, X.congruence())) : q_closure(r, X, Y);
        };
        Relation phi = rel(A, B);
        return RelPairInstance{A, B, C, phi, rel(B, C)};
      },
      [](const RelPairInstance& in) -> Msg {
        Tabulation t = tabulate(in.phi, in.A, in.B);
        Tabulation u = tabulate(in.psi, in.B, in.C);
        // Rel: pullback the inner legs, compose, take the represented relation
        ExRegLimit pb = limit_pullback(t.leg1, u.leg0);
        Relation rel = compose(graph_of(compose(u.leg1, pb.legs[1])), opposite(graph_of(compose(t.leg0, pb.legs[0]))));
        if (!(rel == compose(in.psi, in.phi))) return "Rel composite differs from ΨΦ";
        // Rel_w: comma of the inner legs, represented by S1_* P1_* P0^* R0^*
        bool weak = compose(in.B.congruence(), compose(in.phi, in.A.congruence())) == in.phi &&
                    compose(in.C.congruence(), compose(in.psi, in.B.congruence())) == in.psi;
        if (weak) {
          ExRegLimit cm = limit_comma(t.leg1, u.leg0);
          ExRegMorphism left = compose(t.leg0, cm.legs[0]), right = compose(u.leg1, cm.legs[1]);
          if (!(compose(right.lower(), left.upper()) == compose(in.psi, in.phi))) return "Rel_w composite differs from ΨΦ";
          if (!(compose(t.leg1.lower(), t.leg0.upper()) == in.phi)) return "span does not represent Φ in Rel_w";
        }
        return {};
      },
      [](Artifacts& d, const RelPairInstance& in) {
        d.object("A", in.A);
        d.object("B", in.B);
        d.object("C", in.C);
        d.rel("phi", in.phi, "A.poset", "B.poset");
        d.rel("psi", in.psi, "B.poset", "C.poset");
      });
}

// Hom-posets of discrete-carrier objects against FinPos homs of quotients.
struct ObjectPair {
  ExRegObject A, B;
};

inline Suite set_pos() {
  return property<ObjectPair>(
      "set-pos", "characterization", "FinSet_ex/reg homs agree with FinPos homs of the quotients",
      [](Generator& g) {
        std::size_t cap = std::min<std::size_t>(g.bounds().exreg, 4);
        ExRegObject A = gen_base_object(g, BaseFunctor::DiscreteInclusion, cap, false);
        return ObjectPair{A, gen_base_object(g, BaseFunctor::DiscreteInclusion, cap, false)};
      },
      [](const ObjectPair& o) -> Msg {
        MonotoneMap p = lift_object(BaseFunctor::DiscreteInclusion, o.A);
        MonotoneMap q = lift_object(BaseFunctor::DiscreteInclusion, o.B);
        std::string problem = detail::compare_hom(
            enumerate_morphisms(o.A, o.B),
            [&](const ExRegMorphism& R) { return lift_morphism(BaseFunctor::DiscreteInclusion, R, p, q); },
            hom_poset(p.cod(), q.cod()));
        if (!problem.empty()) return problem;
        return unless(enumerate_morphisms(o.A, o.B).size() == hom_morphisms(o.A, o.B).size(),
                      "direct enumeration and realization disagree on the hom size");
      },
      [](Artifacts& d, const ObjectPair& o) {
        d.object("A", o.A);
        d.object("B", o.B);
      });
}

struct OrdInstance {
  FinPoset X, Y;
  MonotoneMap f, g;  // X -> Y
};

inline Suite ord_commutation() {
  return property<OrdInstance>(
      "ord-commutation", "ord-commutation", "Ord(FinSet) constructions agree with FinPos",
      [](Generator& g) {
        std::size_t cap = std::min<std::size_t>(g.bounds().poset, 4);
        FinPoset X = g.poset_upto(cap);
        FinPoset Y = X.empty() ? g.poset_upto(cap) : g.nonempty_poset_upto(cap);
        MonotoneMap f = *g.map(X, Y);
        return OrdInstance{X, Y, f, *g.map(X, Y)};
      },
      [](const OrdInstance& in) -> Msg {
        OrdObject X = to_ord(in.X), Y = to_ord(in.Y);
        if (!(to_finpos(X) == in.X)) return "round trip through Ord changes the order";
        OrdHom oh = ord_hom(X, Y);
        HomPoset hp = hom_poset(in.X, in.Y);
        if (oh.maps.size() != hp.maps.size() || !(oh.leq == hp.poset.order())) return "hom-posets differ";
        OrdSpan op = ord_product(X, Y);
        if (!(to_finpos(op.apex) == product(in.X, in.Y).apex)) return "products differ";
        OrdMap of{X, Y, in.f.assign()}, og{X, Y, in.g.assign()};
        OrdMap oi = ord_inserter(of, og);
        MonotoneMap pi = inserter(in.f, in.g);
        if (!(oi.f == pi.assign()) || !(to_finpos(oi.dom) == pi.dom())) return "inserters differ";
        OrdSpan oc = ord_comma(of, og);
        if (!(to_finpos(oc.apex) == comma(in.f, in.g).apex)) return "commas differ";
        auto [oe, om] = ord_image_factorize(of);
        auto [pe, pm] = image_factorize(in.f);
        if (!(oe.f == pe.assign()) || !(om.f == pm.assign()) || !(to_finpos(om.dom) == pm.dom()))
          return "image factorizations differ";
        return {};
      },
      [](Artifacts& d, const OrdInstance& in) {
        std::string x = d.poset("X", in.X), y = d.poset("Y", in.Y);
        d.map("f", in.f, x, y);
        d.map("g", in.g, x, y);
      });
}

}  // namespace exreg::suites
