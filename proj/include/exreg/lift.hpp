#pragma once

// Extension of a regular functor F into FinPos along Γ: objects go to the
// coinserter of F applied to the congruence, morphisms to the map whose
// hypergraph is p_* F(R_*) p^*.

#include <exreg/quotient.hpp>

namespace exreg {

enum class BaseFunctor {
  DiscreteInclusion,  // finite sets as discrete posets
  Identity,           // identity on FinPos
};

inline const char* base_functor_name(BaseFunctor F) {
  return F == BaseFunctor::DiscreteInclusion ? "discrete-inclusion" : "identity";
}

inline void require_in_base(BaseFunctor F, const ExRegObject& A) {
  if (F == BaseFunctor::DiscreteInclusion && !is_discrete(A.carrier()))
    fail(ErrorCode::DomainMismatch, "object carrier is not a discrete set");
}

// The quotient map F X -> F̄(X,E).
inline MonotoneMap lift_object(BaseFunctor F, const ExRegObject& A) {
  require_in_base(F, A);
  const Relation& E = A.congruence();
  Span e = pair_subposet(A.carrier(), A.carrier(), [&](std::size_t a, std::size_t b) { return E(a, b); });
  return coinserter(e.p0, e.p1);
}

inline MonotoneMap lift_morphism(BaseFunctor F, const ExRegMorphism& R, const MonotoneMap& p,
                                 const MonotoneMap& q) {
  require_in_base(F, R.src());
  require_in_base(F, R.tgt());
  Relation phi = compose(hypergraph(q), compose(R.lower(), hypograph(p)));
  Relation psi = compose(hypergraph(p), compose(R.upper(), hypograph(q)));
  return extract_map(phi, psi);
}

inline MonotoneMap lift_morphism(BaseFunctor F, const ExRegMorphism& R) {
  return lift_morphism(F, R, lift_object(F, R.src()), lift_object(F, R.tgt()));
}

}  // namespace exreg
