#pragma once

// Tabulations, classification, factorization, finite limits, exactness and
// the canonical presentation in the exact completion.

#include <exreg/completion.hpp>

#include <stdexcept>

namespace exreg {

// Internal consistency check for statements that hold by theorem.
inline void ensure(bool cond, const std::string& what) {
  if (!cond) throw std::logic_error("internal law violated: " + what);
}

struct Tabulation {
  Relation phi;
  ExRegObject src;
  ExRegObject tgt;
  ExRegObject apex;
  ExRegMorphism leg0;  // to src
  ExRegMorphism leg1;  // to tgt
  MonotoneMap r0;      // carrier projections of the apex
  MonotoneMap r1;
};

// Apex carrier = pairs of Φ in lexicographic order with the product order,
// T((x,y),(x',y')) iff E(x,x') and F(y,y'), R0_* = E r0, R1_* = F r1.
inline Tabulation tabulate(const Relation& phi, const ExRegObject& src, const ExRegObject& tgt) {
  if (!(phi.dom() == src.carrier()) || !(phi.cod() == tgt.carrier()))
    fail(ErrorCode::DomainMismatch, "relation does not match the objects");
  if (!is_q_morphism(phi, src, tgt))
    fail(ErrorCode::NotQMorphism, "(F∩F°)Φ(E∩E°) != Φ");
  const Relation& E = src.congruence();
  const Relation& F = tgt.congruence();
  Span z = pair_subposet(src.carrier(), tgt.carrier(),
                         [&](std::size_t x, std::size_t y) { return phi(x, y); });
  const std::size_t n = z.apex.size();
  BoolMatrix t(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (E(z.p0(i), z.p0(j)) && F(z.p1(i), z.p1(j))) t.set(i, j);
  Tabulation tab;
  tab.phi = phi;
  tab.src = src;
  tab.tgt = tgt;
  tab.apex = ExRegObject(z.apex, Relation(z.apex, z.apex, std::move(t)));
  tab.r0 = z.p0;
  tab.r1 = z.p1;
  Relation g0 = graph(z.p0);
  Relation g1 = graph(z.p1);
  tab.leg0 = validate_morphism(tab.apex, src, compose(E, g0), compose(opposite(g0), E));
  tab.leg1 = validate_morphism(tab.apex, tgt, compose(F, g1), compose(opposite(g1), F));
  return tab;
}

// Φ = R1 R0° and R0^*R0_* ∩ R1^*R1_* = T
inline bool tabulation_laws_hold(const Tabulation& tab) {
  Relation span = compose(graph_of(tab.leg1), opposite(graph_of(tab.leg0)));
  Relation kernel = meet(compose(tab.leg0.upper(), tab.leg0.lower()),
                         compose(tab.leg1.upper(), tab.leg1.lower()));
  return span == tab.phi && kernel == tab.apex.congruence();
}

// Meet of the kernels R^*R_* of a family with common source.
inline Relation joint_kernel(const std::vector<ExRegMorphism>& legs) {
  ensure(!legs.empty(), "joint kernel of an empty family");
  Relation k = compose(legs[0].upper(), legs[0].lower());
  for (std::size_t i = 1; i < legs.size(); ++i) {
    if (!(legs[i].src() == legs[0].src()))
      fail(ErrorCode::DomainMismatch, "family does not share a source");
    k = meet(k, compose(legs[i].upper(), legs[i].lower()));
  }
  return k;
}

inline bool jointly_order_mono(const ExRegMorphism& R, const ExRegMorphism& S) {
  return joint_kernel({R, S}) == R.src().congruence();
}

// The unique H with leg0 H = S0 and leg1 H = S1:
// H_* = R0^*S0_* ∩ R1^*S1_*, H^* = S0^*R0_* ∩ S1^*R1_*.
inline ExRegMorphism tabulation_factor(const Tabulation& tab, const ExRegMorphism& S0,
                                       const ExRegMorphism& S1) {
  if (!(S0.src() == S1.src())) fail(ErrorCode::DomainMismatch, "cone legs do not share a source");
  if (!(S0.tgt() == tab.src) || !(S1.tgt() == tab.tgt))
    fail(ErrorCode::DomainMismatch, "cone legs do not land in the tabulated objects");
  Relation span = compose(graph_of(S1), opposite(graph_of(S0)));
  if (auto r = check_inclusion(span, tab.phi); !r)
    fail(ErrorCode::ConeNotIncluded, "gr(S1) gr(S0)° contains " + std::to_string(r.witness->first) +
                                         " ~ " + std::to_string(r.witness->second) + " outside Φ");
  Relation lower = meet(compose(tab.leg0.upper(), S0.lower()), compose(tab.leg1.upper(), S1.lower()));
  Relation upper = meet(compose(S0.upper(), tab.leg0.lower()), compose(S1.upper(), tab.leg1.lower()));
  ExRegMorphism H = validate_morphism(S0.src(), tab.apex, lower, upper);
  ensure(compose(tab.leg0, H) == S0 && compose(tab.leg1, H) == S1, "tabulation factor commutes");
  return H;
}

// ff iff R^*R_* = E; so iff R_*R^* = F (equivalently RR° = F ∩ F°).
inline MapClass classify(const ExRegMorphism& R) {
  MapClass c;
  c.is_ff = compose(R.upper(), R.lower()) == R.src().congruence();
  c.is_so = compose(R.lower(), R.upper()) == R.tgt().congruence();
  Relation g = graph_of(R);
  bool graph_so = compose(g, opposite(g)) == symmetric_part(R.tgt().congruence());
  ensure(graph_so == c.is_so, "so criteria agree");
  c.is_iso = c.is_ff && c.is_so;
  return c;
}

struct Factorization {
  ExRegMorphism so;  // Q
  ExRegMorphism ff;  // M
  Tabulation tab;    // of RR°
};

// R = M Q through the tabulation of RR°, whose two legs coincide.
inline Factorization factorize(const ExRegMorphism& R) {
  Relation g = graph_of(R);
  Tabulation tab = tabulate(compose(g, opposite(g)), R.tgt(), R.tgt());
  ensure(tab.leg0 == tab.leg1, "legs of the tabulation of RR° coincide");
  ExRegMorphism Q = tabulation_factor(tab, R, R);
  ensure(compose(tab.leg0, Q) == R, "factorization composes back");
  return {Q, tab.leg0, tab};
}

struct ExRegLimit {
  ExRegObject apex;
  std::vector<ExRegMorphism> legs;
};

inline ExRegObject terminal_object() { return gamma(terminal_poset()); }

inline ExRegMorphism to_terminal(const ExRegObject& A) {
  const FinPoset one = terminal_object().carrier();
  return validate_morphism(A, terminal_object(), full_relation(A.carrier(), one),
                           full_relation(one, A.carrier()));
}

inline ExRegLimit limit_terminal() { return {terminal_object(), {}}; }

inline ExRegLimit limit_product(const ExRegObject& A, const ExRegObject& B) {
  Tabulation t = tabulate(full_relation(A.carrier(), B.carrier()), A, B);
  return {t.apex, {t.leg0, t.leg1}};
}

// Tabulation of S^*R_* ∩ (E ∩ E°); both legs coincide.
inline ExRegLimit limit_inserter(const ExRegMorphism& R, const ExRegMorphism& S) {
  if (!(R.src() == S.src()) || !(R.tgt() == S.tgt()))
    fail(ErrorCode::ShapeMismatch, "inserter needs a parallel pair");
  const ExRegObject& A = R.src();
  Relation phi = meet(compose(S.upper(), R.lower()), symmetric_part(A.congruence()));
  Tabulation t = tabulate(phi, A, A);
  ensure(t.leg0 == t.leg1, "inserter legs coincide");
  return {t.apex, {t.leg0}};
}

// R: A -> C, S: B -> C; tabulation of S^*R_*.
inline ExRegLimit limit_comma(const ExRegMorphism& R, const ExRegMorphism& S) {
  if (!(R.tgt() == S.tgt())) fail(ErrorCode::ShapeMismatch, "comma needs a common codomain");
  Tabulation t = tabulate(compose(S.upper(), R.lower()), R.src(), S.src());
  return {t.apex, {t.leg0, t.leg1}};
}

// Tabulation of S°R on graphs.
inline ExRegLimit limit_pullback(const ExRegMorphism& R, const ExRegMorphism& S) {
  if (!(R.tgt() == S.tgt())) fail(ErrorCode::ShapeMismatch, "pullback needs a common codomain");
  Tabulation t = tabulate(compose(opposite(graph_of(S)), graph_of(R)), R.src(), S.src());
  return {t.apex, {t.leg0, t.leg1}};
}

// A morphism of the weakening-relation category: Φ = F Φ E.
struct QwMorphism {
  ExRegObject src;
  ExRegObject tgt;
  Relation rel;
};

inline QwMorphism make_qw_morphism(const ExRegObject& src, const ExRegObject& tgt, const Relation& phi) {
  if (!(phi.dom() == src.carrier()) || !(phi.cod() == tgt.carrier()))
    fail(ErrorCode::DomainMismatch, "relation does not match the objects");
  if (!(compose(tgt.congruence(), compose(phi, src.congruence())) == phi))
    fail(ErrorCode::BimoduleLawFailed, "F Φ E != Φ");
  return {src, tgt, phi};
}

struct Splitting {
  ExRegObject middle;       // (X, R)
  ExRegMorphism quotient;   // (X,E) -> (X,R), lower and upper R
  QwMorphism section;       // (X,R) -> (X,E), the relation R
};

// Splits the idempotent R ⊇ E on (X,E) through (X,R).
inline Splitting split_congruence(const ExRegObject& A, const Relation& R) {
  if (!(R.dom() == A.carrier()) || !(R.cod() == A.carrier()))
    fail(ErrorCode::DomainMismatch, "relation is not on the carrier");
  if (auto r = check_inclusion(A.congruence(), R); !r)
    fail(ErrorCode::NotCongruenceOver, "R misses " + std::to_string(r.witness->first) + " ~ " +
                                           std::to_string(r.witness->second) + " of E");
  ExRegObject B(A.carrier(), R);
  Splitting s{B, validate_morphism(A, B, R, R), make_qw_morphism(B, A, R)};
  ensure(compose(s.section.rel, s.quotient.lower()) == R, "splitting composes to R");
  ensure(classify(s.quotient).is_so, "quotient leg is so");
  ensure(compose(s.quotient.upper(), s.quotient.lower()) == R, "kernel of the quotient leg is R");
  return s;
}

struct Presentation {
  FinPoset pairs;          // carrier of E as a subposet of X×X
  MonotoneMap e0, e1;      // its projections
  ExRegObject comma_obj;   // Γ(pairs)
  ExRegMorphism leg0, leg1;  // Γe0, Γe1
  ExRegMorphism cover;     // E_*: ΓX -> (X,E)
};

// ΓE ⇉ ΓX ↠ (X,E)
inline Presentation canonical_presentation(const ExRegObject& A) {
  const FinPoset& X = A.carrier();
  const Relation& E = A.congruence();
  Span e = pair_subposet(X, X, [&](std::size_t a, std::size_t b) { return E(a, b); });
  Presentation p{e.apex, e.p0, e.p1, gamma(e.apex), gamma(e.p0), gamma(e.p1),
                 validate_morphism(gamma(X), A, E, E)};
  ensure(joint_kernel({p.leg0, p.leg1}) == identity_I(e.apex), "presentation legs jointly order-mono");
  ensure(compose(graph_of(p.leg1), opposite(graph_of(p.leg0))) == compose(E, E),
         "presentation legs tabulate E");
  ensure(hom_leq(compose(p.cover, p.leg0), compose(p.cover, p.leg1)), "presentation square commutes");
  ensure(classify(p.cover).is_so, "cover is so");
  return p;
}

}  // namespace exreg
