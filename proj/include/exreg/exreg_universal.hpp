#pragma once

// Universal properties in the exact completion, checked by enumerating all
// cones from (or cocones into) Γ P for every poset P up to a size bound.

#include <exreg/catalogue.hpp>
#include <exreg/quotient.hpp>
#include <exreg/universal.hpp>

#include <map>

namespace exreg {

inline constexpr std::size_t default_cone_bound = 3;

inline std::vector<ExRegObject> test_objects(std::size_t bound) {
  std::vector<ExRegObject> out;
  for (const auto& P : posets_up_to(bound)) out.push_back(gamma(P));
  return out;
}

using ConePredicate = std::function<bool(const std::vector<ExRegMorphism>&)>;

namespace detail {

inline std::vector<BoolMatrix> lower_key(const std::vector<ExRegMorphism>& ms) {
  std::vector<BoolMatrix> k;
  k.reserve(ms.size());
  for (const auto& m : ms) k.push_back(m.lower().matrix());
  return k;
}

}  // namespace detail

// `targets` are the codomains of the legs, `cone` decides which tuples of
// morphisms from a test object count as cones.
inline UniversalCheck verify_exreg_limit(const ExRegLimit& L, const std::vector<ExRegObject>& targets,
                                         const ConePredicate& cone,
                                         std::size_t bound = default_cone_bound) {
  if (targets.size() != L.legs.size())
    fail(ErrorCode::ShapeMismatch, "one target per leg is required");
  for (const auto& T : test_objects(bound)) {
    const std::string where = " from a test object of size " + std::to_string(T.size());
    std::vector<ExRegMorphism> into_apex = hom_morphisms(T, L.apex);
    std::map<std::vector<BoolMatrix>, std::size_t> images;
    std::vector<std::vector<ExRegMorphism>> image_of(into_apex.size());
    for (std::size_t h = 0; h < into_apex.size(); ++h) {
      for (const auto& leg : L.legs) image_of[h].push_back(compose(leg, into_apex[h]));
      if (!cone(image_of[h])) return {false, "apex morphism is not a cone" + where};
      ++images[detail::lower_key(image_of[h])];
    }
    // Every cone factors exactly once.
    std::vector<std::vector<ExRegMorphism>> homs;
    for (const auto& tgt : targets) homs.push_back(hom_morphisms(T, tgt));
    std::vector<ExRegMorphism> tuple(targets.size());
    std::string failure;
    std::function<bool(std::size_t)> go = [&](std::size_t i) {
      if (i == targets.size()) {
        if (!cone(tuple)) return true;
        auto it = images.find(detail::lower_key(tuple));
        std::size_t count = it == images.end() ? 0 : it->second;
        if (count != 1) {
          failure = "a cone has " + std::to_string(count) + " factorizations" + where;
          return false;
        }
        return true;
      }
      for (const auto& m : homs[i]) {
        tuple[i] = m;
        if (!go(i + 1)) return false;
      }
      return true;
    };
    if (!go(0)) return {false, failure};
    // The legs reflect the order of morphisms into the apex.
    for (std::size_t h = 0; h < into_apex.size(); ++h)
      for (std::size_t k = 0; k < into_apex.size(); ++k) {
        bool legs = true;
        for (std::size_t i = 0; i < L.legs.size() && legs; ++i)
          legs = hom_leq(image_of[h][i], image_of[k][i]);
        if (legs != hom_leq(into_apex[h], into_apex[k]))
          return {false, "legs do not reflect the order" + where};
      }
  }
  return {};
}

inline UniversalCheck verify_product(const ExRegLimit& L, const ExRegObject& A, const ExRegObject& B,
                                     std::size_t bound = default_cone_bound) {
  return verify_exreg_limit(L, {A, B}, [](const auto&) { return true; }, bound);
}

inline UniversalCheck verify_terminal(const ExRegLimit& L, std::size_t bound = default_cone_bound) {
  return verify_exreg_limit(L, {}, [](const auto&) { return true; }, bound);
}

inline UniversalCheck verify_inserter(const ExRegLimit& L, const ExRegMorphism& R, const ExRegMorphism& S,
                                      std::size_t bound = default_cone_bound) {
  return verify_exreg_limit(
      L, {R.src()},
      [&](const std::vector<ExRegMorphism>& u) { return hom_leq(compose(R, u[0]), compose(S, u[0])); },
      bound);
}

inline UniversalCheck verify_comma(const ExRegLimit& L, const ExRegMorphism& R, const ExRegMorphism& S,
                                   std::size_t bound = default_cone_bound) {
  return verify_exreg_limit(
      L, {R.src(), S.src()},
      [&](const std::vector<ExRegMorphism>& u) { return hom_leq(compose(R, u[0]), compose(S, u[1])); },
      bound);
}

inline UniversalCheck verify_pullback(const ExRegLimit& L, const ExRegMorphism& R, const ExRegMorphism& S,
                                      std::size_t bound = default_cone_bound) {
  return verify_exreg_limit(
      L, {R.src(), S.src()},
      [&](const std::vector<ExRegMorphism>& u) { return compose(R, u[0]) == compose(S, u[1]); }, bound);
}

// Q is the coinserter of (G0,G1): every test morphism K out of cod(G0) with
// K G0 <= K G1 factors through Q exactly once, and Q reflects the order.
inline UniversalCheck verify_exreg_coinserter(const ExRegMorphism& Q, const ExRegMorphism& G0,
                                              const ExRegMorphism& G1,
                                              std::size_t bound = default_cone_bound) {
  for (const auto& B : test_objects(bound)) {
    const std::string where = " into a test object of size " + std::to_string(B.size());
    std::vector<ExRegMorphism> from_quotient = hom_morphisms(Q.tgt(), B);
    std::map<BoolMatrix, std::size_t> images;
    std::vector<ExRegMorphism> image_of;
    for (const auto& K : from_quotient) {
      image_of.push_back(compose(K, Q));
      ++images[image_of.back().lower().matrix()];
    }
    for (const auto& G : hom_morphisms(Q.src(), B)) {
      bool cocone = hom_leq(compose(G, G0), compose(G, G1));
      auto it = images.find(G.lower().matrix());
      std::size_t count = it == images.end() ? 0 : it->second;
      if (count != (cocone ? 1U : 0U))
        return {false, "a test morphism has " + std::to_string(count) + " factorizations" + where};
    }
    for (std::size_t h = 0; h < from_quotient.size(); ++h)
      for (std::size_t k = 0; k < from_quotient.size(); ++k)
        if (hom_leq(image_of[h], image_of[k]) != hom_leq(from_quotient[h], from_quotient[k]))
          return {false, "quotient does not reflect the order" + where};
  }
  return {};
}

// The presentation square is a comma square and its cover the coinserter.
inline UniversalCheck verify_presentation(const Presentation& p, std::size_t bound = default_cone_bound) {
  ExRegLimit L{p.comma_obj, {p.leg0, p.leg1}};
  if (auto c = verify_comma(L, p.cover, p.cover, bound); !c) return {false, "comma: " + c.detail};
  if (auto c = verify_exreg_coinserter(p.cover, p.leg0, p.leg1, bound); !c)
    return {false, "coinserter: " + c.detail};
  return {};
}

}  // namespace exreg
