#pragma once

// Quotient realization of the exact completion in FinPos, hom enumeration
// and isomorphism of objects.

#include <exreg/tabulation.hpp>

#include <functional>

namespace exreg {

struct Realization {
  FinPoset poset;          // X/(E∩E°), [x] <= [y] iff E(x,y)
  MonotoneMap projection;  // X -> poset
};

inline Realization quotient_realize(const ExRegObject& A) {
  MonotoneMap p = poset_reflection(A.carrier(), A.congruence().matrix());
  FinPoset::check_antisymmetric(p.cod().order());
  return {p.cod(), p};
}

// r([x]) = [y] for any (x,y) in gr(R_*).
inline MonotoneMap realize_morphism(const ExRegMorphism& R, const Realization& P,
                                    const Realization& Q) {
  Relation g = graph_of(R);
  const std::size_t none = Q.poset.size();
  std::vector<std::size_t> a(P.poset.size(), none);
  for (std::size_t x = 0; x < R.src().size(); ++x) {
    std::size_t cx = P.projection(x);
    g.matrix().for_each_in_row(x, [&](std::size_t y) {
      std::size_t cy = Q.projection(y);
      ensure(a[cx] == none || a[cx] == cy, "graph is well defined on classes");
      a[cx] = cy;
    });
    ensure(a[cx] != none, "graph is total");
  }
  return MonotoneMap(P.poset, Q.poset, std::move(a));
}

inline MonotoneMap realize_morphism(const ExRegMorphism& R) {
  return realize_morphism(R, quotient_realize(R.src()), quotient_realize(R.tgt()));
}

// R_* = q^* r_* p_*, R^* = p^* r^* q_*.
inline ExRegMorphism morphism_from_map(const ExRegObject& src, const ExRegObject& tgt,
                                       const Realization& P, const Realization& Q,
                                       const MonotoneMap& r) {
  Relation lower = compose(hypograph(Q.projection), compose(hypergraph(r), hypergraph(P.projection)));
  Relation upper = compose(hypograph(P.projection), compose(hypograph(r), hypergraph(Q.projection)));
  return validate_morphism(src, tgt, lower, upper);
}

inline ExRegMorphism morphism_from_map(const ExRegObject& src, const ExRegObject& tgt,
                                       const MonotoneMap& r) {
  return morphism_from_map(src, tgt, quotient_realize(src), quotient_realize(tgt), r);
}

// Realized lower relation r_* = q_* R_* p^*.
inline Relation realized_hypergraph(const ExRegMorphism& R, const Realization& P,
                                    const Realization& Q) {
  return compose(hypergraph(Q.projection), compose(R.lower(), hypograph(P.projection)));
}

// All morphisms src -> tgt through monotone maps of the realizations.
inline std::vector<ExRegMorphism> hom_morphisms(const ExRegObject& src, const ExRegObject& tgt) {
  Realization P = quotient_realize(src);
  Realization Q = quotient_realize(tgt);
  std::vector<ExRegMorphism> out;
  for (const auto& r : monotone_maps(P.poset, Q.poset))
    out.push_back(morphism_from_map(src, tgt, P, Q, r));
  return out;
}

// All morphisms src -> tgt by direct search over lower relations: each row
// is an F-up-set, rows are antitone along E, and derive_right_adjoint
// decides which candidates are maps. Ordered by the row choices.
inline std::vector<ExRegMorphism> enumerate_morphisms(const ExRegObject& src, const ExRegObject& tgt) {
  const FinPoset& X = src.carrier();
  const FinPoset& Y = tgt.carrier();
  const Relation& E = src.congruence();
  const Relation& F = tgt.congruence();
  // A map's row at x is the F-up-set of a single y, so those are the only
  // candidates worth trying.
  std::vector<std::vector<bool>> rows;
  for (std::size_t y = 0; y < Y.size(); ++y) {
    std::vector<bool> row(Y.size());
    for (std::size_t w = 0; w < Y.size(); ++w) row[w] = F(y, w);
    if (std::find(rows.begin(), rows.end(), row) == rows.end()) rows.push_back(row);
  }
  std::vector<ExRegMorphism> out;
  std::vector<std::size_t> choice(X.size(), 0);
  std::function<void(std::size_t)> go = [&](std::size_t x) {
    if (x == X.size()) {
      BoolMatrix m(X.size(), Y.size());
      for (std::size_t i = 0; i < X.size(); ++i)
        for (std::size_t w = 0; w < Y.size(); ++w)
          if (rows[choice[i]][w]) m.set(i, w);
      Relation lower(X, Y, std::move(m));
      try {
        out.push_back(make_morphism(src, tgt, lower));
      } catch (const Error&) {
      }
      return;
    }
    for (std::size_t c = 0; c < rows.size(); ++c) {
      bool ok = true;
      // E(x', x) needs row(x) ⊆ row(x'), and E(x, x') needs row(x') ⊆ row(x).
      for (std::size_t i = 0; i < x && ok; ++i)
        for (std::size_t w = 0; w < Y.size() && ok; ++w) {
          if (E(i, x) && rows[c][w] && !rows[choice[i]][w]) ok = false;
          if (E(x, i) && rows[choice[i]][w] && !rows[c][w]) ok = false;
        }
      if (!ok) continue;
      choice[x] = c;
      go(x + 1);
    }
  };
  go(0);
  return out;
}

// Poset of a list of parallel morphisms under hom_leq.
inline FinPoset morphism_poset(const std::vector<ExRegMorphism>& ms) {
  BoolMatrix leq(ms.size(), ms.size());
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j)
      if (hom_leq(ms[i], ms[j])) leq.set(i, j);
  return FinPoset::from_order(std::move(leq));
}

// An isomorphism A -> B found through the quotient realizations.
inline std::optional<ExRegMorphism> find_object_iso(const ExRegObject& A, const ExRegObject& B) {
  Realization P = quotient_realize(A);
  Realization Q = quotient_realize(B);
  auto iso = find_iso(P.poset, Q.poset);
  if (!iso) return std::nullopt;
  return morphism_from_map(A, B, P, Q, *iso);
}

inline bool objects_isomorphic(const ExRegObject& A, const ExRegObject& B) {
  return find_object_iso(A, B).has_value();
}

}  // namespace exreg
