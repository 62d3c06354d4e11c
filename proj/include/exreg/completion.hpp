#pragma once

// Objects (X,E) and maps (R_*, R^*) of the exact completion of FinPos.

#include <exreg/rel_laws.hpp>

namespace exreg {

// E ∩ E°
inline Relation symmetric_part(const Relation& E) { return meet(E, opposite(E)); }

// Throws NotCongruence naming the violated law.
inline void check_congruence(const Relation& E) {
  if (!(E.dom() == E.cod())) fail(ErrorCode::NotCongruence, "relation is not an endorelation");
  if (auto w = E.dom().order().first_outside(E.matrix()))
    fail(ErrorCode::NotCongruence, "does not contain the order: missing " +
                                       std::to_string(w->first) + " ~ " + std::to_string(w->second));
  if (auto w = compose(E, E).matrix().first_outside(E.matrix()))
    fail(ErrorCode::NotCongruence, "not transitive: missing " + std::to_string(w->first) + " ~ " +
                                       std::to_string(w->second));
}

class ExRegObject {
 public:
  ExRegObject() = default;
  ExRegObject(FinPoset X, Relation E) : X_(std::move(X)), E_(std::move(E)) {
    if (!(E_.dom() == X_)) fail(ErrorCode::DomainMismatch, "congruence is not on the carrier");
    check_congruence(E_);
  }

  const FinPoset& carrier() const noexcept { return X_; }
  const Relation& congruence() const noexcept { return E_; }
  std::size_t size() const noexcept { return X_.size(); }

  friend bool operator==(const ExRegObject& a, const ExRegObject& b) {
    return a.X_ == b.X_ && a.E_ == b.E_;
  }

 private:
  FinPoset X_;
  Relation E_;
};

inline ExRegObject make_object(const FinPoset& X, const Relation& E) { return ExRegObject(X, E); }

// Congruence generated by the order of X and the given pairs.
inline ExRegObject make_object_closure(const FinPoset& X, const std::vector<Pair>& pairs) {
  BoolMatrix m = X.order();
  for (auto [a, b] : pairs) {
    if (a >= X.size() || b >= X.size()) fail(ErrorCode::ShapeMismatch, "pair index out of range");
    m.set(a, b);
  }
  m.transitive_close();
  return ExRegObject(X, Relation(X, X, std::move(m)));
}

// Γ X = (X, I_X)
inline ExRegObject gamma(const FinPoset& X) { return ExRegObject(X, identity_I(X)); }

class ExRegMorphism {
 public:
  ExRegMorphism() = default;

  const ExRegObject& src() const noexcept { return src_; }
  const ExRegObject& tgt() const noexcept { return tgt_; }
  const Relation& lower() const noexcept { return lower_; }
  const Relation& upper() const noexcept { return upper_; }

  friend bool operator==(const ExRegMorphism& a, const ExRegMorphism& b) {
    return a.lower_ == b.lower_ && a.upper_ == b.upper_ && a.src_ == b.src_ && a.tgt_ == b.tgt_;
  }

  // Caller guarantees the four laws.
  static ExRegMorphism unchecked(ExRegObject src, ExRegObject tgt, Relation lower, Relation upper) {
    ExRegMorphism m;
    m.src_ = std::move(src);
    m.tgt_ = std::move(tgt);
    m.lower_ = std::move(lower);
    m.upper_ = std::move(upper);
    return m;
  }

 private:
  ExRegObject src_;
  ExRegObject tgt_;
  Relation lower_;
  Relation upper_;
};

// Checks F R_* E = R_*, E R^* F = R^*, R^* R_* ⊇ E, R_* R^* ⊆ F.
inline ExRegMorphism validate_morphism(const ExRegObject& src, const ExRegObject& tgt,
                                       const Relation& lower, const Relation& upper) {
  const FinPoset& X = src.carrier();
  const FinPoset& Y = tgt.carrier();
  if (!(lower.dom() == X) || !(lower.cod() == Y))
    fail(ErrorCode::DomainMismatch, "lower relation must go from source to target carrier");
  if (!(upper.dom() == Y) || !(upper.cod() == X))
    fail(ErrorCode::DomainMismatch, "upper relation must go from target to source carrier");
  const Relation& E = src.congruence();
  const Relation& F = tgt.congruence();
  if (!(compose(F, compose(lower, E)) == lower))
    fail(ErrorCode::BimoduleLawFailed, "F R_* E != R_*");
  if (!(compose(E, compose(upper, F)) == upper))
    fail(ErrorCode::BimoduleLawFailed, "E R^* F != R^*");
  if (!includes(compose(upper, lower), E))
    fail(ErrorCode::AdjunctionFailed, "R^* R_* does not contain E");
  if (!includes(F, compose(lower, upper)))
    fail(ErrorCode::AdjunctionFailed, "R_* R^* is not contained in F");
  return ExRegMorphism::unchecked(src, tgt, lower, upper);
}

inline bool is_valid_morphism(const ExRegObject& src, const ExRegObject& tgt,
                              const Relation& lower, const Relation& upper) {
  try {
    validate_morphism(src, tgt, lower, upper);
    return true;
  } catch (const Error&) {
    return false;
  }
}

// Γ f = (f_*, f^*)
inline ExRegMorphism gamma(const MonotoneMap& f) {
  return validate_morphism(gamma(f.dom()), gamma(f.cod()), hypergraph(f), hypograph(f));
}

inline ExRegMorphism identity(const ExRegObject& A) {
  return ExRegMorphism::unchecked(A, A, A.congruence(), A.congruence());
}

// S ∘ R
inline ExRegMorphism compose(const ExRegMorphism& S, const ExRegMorphism& R) {
  if (!(R.tgt() == S.src())) fail(ErrorCode::DomainMismatch, "morphisms are not composable");
  return ExRegMorphism::unchecked(R.src(), S.tgt(), compose(S.lower(), R.lower()),
                                  compose(R.upper(), S.upper()));
}

inline void require_parallel(const ExRegMorphism& R, const ExRegMorphism& S) {
  if (!(R.src() == S.src()) || !(R.tgt() == S.tgt()))
    fail(ErrorCode::DomainMismatch, "morphisms are not parallel");
}

// R <= S iff R_* ⊇ S_*; the uppers must agree (R^* ⊆ S^*).
inline bool hom_leq(const ExRegMorphism& R, const ExRegMorphism& S) {
  require_parallel(R, S);
  bool by_lower = includes(R.lower(), S.lower());
  bool by_upper = includes(S.upper(), R.upper());
  if (by_lower != by_upper)
    fail(ErrorCode::AdjunctionFailed, "lower and upper relations disagree on the hom order");
  return by_lower;
}

// The unique R^* making (R_*, R^*) a map. Each row of R_* must be the F-up-set
// of some y0 and then R^*(y,x) iff F(y, y0).
inline Relation derive_right_adjoint(const ExRegObject& src, const ExRegObject& tgt,
                                     const Relation& lower) {
  const FinPoset& X = src.carrier();
  const FinPoset& Y = tgt.carrier();
  if (!(lower.dom() == X) || !(lower.cod() == Y))
    fail(ErrorCode::DomainMismatch, "lower relation must go from source to target carrier");
  const Relation& E = src.congruence();
  const Relation& F = tgt.congruence();
  if (!(compose(F, compose(lower, E)) == lower))
    fail(ErrorCode::BimoduleLawFailed, "F R_* E != R_*");
  BoolMatrix up(Y.size(), X.size());
  for (std::size_t x = 0; x < X.size(); ++x) {
    std::optional<std::size_t> gen;
    lower.matrix().for_each_in_row(x, [&](std::size_t y) {
      if (!gen && F.matrix().row_equal(y, lower.matrix(), x)) gen = y;
    });
    if (!gen)
      fail(ErrorCode::NotAMap, "row " + std::to_string(x) + " has no least class");
    for (std::size_t y = 0; y < Y.size(); ++y)
      if (F(y, *gen)) up.set(y, x);
  }
  Relation upper(Y, X, std::move(up));
  try {
    validate_morphism(src, tgt, lower, upper);
  } catch (const Error& e) {
    fail(ErrorCode::NotAMap, e.what());
  }
  return upper;
}

inline ExRegMorphism make_morphism(const ExRegObject& src, const ExRegObject& tgt,
                                   const Relation& lower) {
  return ExRegMorphism::unchecked(src, tgt, lower, derive_right_adjoint(src, tgt, lower));
}

// gr(R_*) = R_* ∩ (R^*)°
inline Relation graph_of(const ExRegMorphism& R) { return meet(R.lower(), opposite(R.upper())); }

// (F ∩ F°) Φ (E ∩ E°) = Φ
inline bool is_q_morphism(const Relation& phi, const ExRegObject& src, const ExRegObject& tgt) {
  if (!(phi.dom() == src.carrier()) || !(phi.cod() == tgt.carrier())) return false;
  return compose(symmetric_part(tgt.congruence()),
                 compose(phi, symmetric_part(src.congruence()))) == phi;
}

// Closes an arbitrary relation into a Q(E)-morphism.
inline Relation q_closure(const Relation& R, const ExRegObject& src, const ExRegObject& tgt) {
  return compose(symmetric_part(tgt.congruence()), compose(R, symmetric_part(src.congruence())));
}

}  // namespace exreg
