#pragma once

#include <exreg/relation.hpp>

namespace exreg {

struct ModularLawReport {
  InclusionReport ml;       // QP ∩ S ⊆ Q(P ∩ Q°S)
  InclusionReport ml_star;  // QP ∩ S ⊆ (Q ∩ SP°)P
  bool holds() const noexcept { return ml.holds && ml_star.holds; }
};

// P: X⇸Y, Q: Y⇸Z, S: X⇸Z.
inline ModularLawReport check_modular_law(const Relation& P, const Relation& Q, const Relation& S) {
  if (!(P.cod() == Q.dom()) || !(S.dom() == P.dom()) || !(S.cod() == Q.cod()))
    fail(ErrorCode::ShapeMismatch, "modular law needs P: X->Y, Q: Y->Z, S: X->Z");
  Relation lhs = meet(compose(Q, P), S);
  ModularLawReport r;
  r.ml = check_inclusion(lhs, compose(Q, meet(P, compose(opposite(Q), S))));
  r.ml_star = check_inclusion(lhs, compose(meet(Q, compose(S, opposite(P))), P));
  return r;
}

struct DistributivityReport {
  bool md = true;       // (R∩S)f = Rf ∩ Sf
  bool md_star = true;  // g°(R∩S) = g°R ∩ g°S
  bool holds() const noexcept { return md && md_star; }
};

// R, S: Y⇸Z, f: X -> Y, g: X -> Z, composed as graphs.
inline DistributivityReport check_map_distributivity(const Relation& R, const Relation& S,
                                                     const MonotoneMap& f, const MonotoneMap& g) {
  require_same_shape(R, S);
  if (!(f.cod() == R.dom()) || !(g.cod() == R.cod()) || !(f.dom() == g.dom()))
    fail(ErrorCode::ShapeMismatch, "distributivity needs f: X->Y and g: X->Z");
  Relation rs = meet(R, S);
  Relation gf = graph(f);
  Relation go = opposite(graph(g));
  DistributivityReport r;
  r.md = compose(rs, gf) == meet(compose(R, gf), compose(S, gf));
  r.md_star = compose(go, rs) == meet(compose(go, R), compose(go, S));
  return r;
}

// φ ⊣ ψ in Rel_w: I_X ⊆ ψφ and φψ ⊆ I_Y.
inline bool is_adjoint_pair(const Relation& phi, const Relation& psi) {
  if (!(phi.dom() == psi.cod()) || !(phi.cod() == psi.dom()))
    fail(ErrorCode::DomainMismatch, "adjoint candidates must point in opposite directions");
  require_weakening(phi, "left adjoint");
  require_weakening(psi, "right adjoint");
  return includes(compose(psi, phi), identity_I(phi.dom())) &&
         includes(identity_I(phi.cod()), compose(phi, psi));
}

// Largest ψ with φψ ⊆ I_Y, i.e. ψ(y,x) iff y is below everything φ sends x
// to. Adjoints are unique, so φ has a right adjoint iff this one works.
inline std::optional<Relation> right_adjoint(const Relation& phi) {
  require_weakening(phi, "left adjoint");
  const FinPoset& X = phi.dom();
  const FinPoset& Y = phi.cod();
  BoolMatrix m(Y.size(), X.size());
  for (std::size_t y = 0; y < Y.size(); ++y)
    for (std::size_t x = 0; x < X.size(); ++x) {
      bool below = true;
      phi.matrix().for_each_in_row(x, [&](std::size_t z) { below = below && Y.leq(y, z); });
      if (below) m.set(y, x);
    }
  Relation psi(Y, X, std::move(m));
  if (!is_adjoint_pair(phi, psi)) return std::nullopt;
  return psi;
}

// The map whose graph is φ ∩ ψ°, checked to have hypergraph φ and hypograph ψ.
inline MonotoneMap extract_map(const Relation& phi, const Relation& psi) {
  if (!(phi.dom() == psi.cod()) || !(phi.cod() == psi.dom()))
    fail(ErrorCode::DomainMismatch, "adjoint candidates must point in opposite directions");
  Relation G = meet(phi, opposite(psi));
  const FinPoset& X = phi.dom();
  std::vector<std::size_t> a(X.size());
  for (std::size_t x = 0; x < X.size(); ++x) {
    if (G.matrix().row_count(x) != 1)
      fail(ErrorCode::NotAMap, "graph candidate is not functional at " + std::to_string(x));
    G.matrix().for_each_in_row(x, [&](std::size_t y) { a[x] = y; });
  }
  MonotoneMap f;
  try {
    f = MonotoneMap(X, phi.cod(), std::move(a));
  } catch (const Error&) {
    fail(ErrorCode::NotAMap, "graph candidate is not monotone");
  }
  if (!(hypergraph(f) == phi) || !(hypograph(f) == psi))
    fail(ErrorCode::NotAMap, "recovered map does not reproduce the adjoint pair");
  return f;
}

// f^* f_* = f/f as subsets of X×X.
inline bool kernel_identity_check(const MonotoneMap& f) {
  Relation lhs = compose(hypograph(f), hypergraph(f));
  Span k = kernel_congruence(f);
  BoolMatrix m(f.dom().size(), f.dom().size());
  for (std::size_t i = 0; i < k.apex.size(); ++i) m.set(k.p0(i), k.p1(i));
  return lhs == Relation(f.dom(), f.dom(), std::move(m));
}

struct ForkReport {
  bool pE = false;       // pE = p_*
  bool Ep = false;       // Ep° = p^*
  bool pEp = false;      // p_* E p^* = I_P
  bool counit = false;   // p_* p^* = I_P
  bool symmetric = false;  // p°p = E ∩ E°
  bool holds() const noexcept { return pE && Ep && pEp && counit && symmetric; }
};

inline ForkReport exact_fork_identities(const MonotoneMap& p, const Relation& E) {
  if (!(E.dom() == p.dom()) || !(E.cod() == p.dom()))
    fail(ErrorCode::NotExactFork, "congruence does not live on the domain of p");
  if (!classify_map(p).is_so) fail(ErrorCode::NotExactFork, "p is not surjective");
  Relation up = hypergraph(p);
  Relation down = hypograph(p);
  if (!(compose(down, up) == E)) fail(ErrorCode::NotExactFork, "E is not the kernel congruence of p");
  Relation g = graph(p);
  Relation go = opposite(g);
  const FinPoset& P = p.cod();
  ForkReport r;
  r.pE = compose(g, E) == up;
  r.Ep = compose(E, go) == down;
  r.pEp = compose(up, compose(E, down)) == identity_I(P);
  r.counit = compose(up, down) == identity_I(P);
  r.symmetric = compose(go, g) == meet(E, opposite(E));
  return r;
}

}  // namespace exreg
