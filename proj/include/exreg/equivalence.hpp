#pragma once

// Equivalence checks at desk scale: fully order-faithful and covering
// functors, the characterization of when the lifted functor is an
// equivalence, discrete covers, and the Ord(FinSet) commutation.

#include <exreg/catalogue.hpp>
#include <exreg/generators.hpp>
#include <exreg/io.hpp>
#include <exreg/lift.hpp>
#include <exreg/ord.hpp>

#include <map>
#include <set>
#include <sstream>

namespace exreg {

// Line-oriented pass/fail report. Failure lines may carry a dump.
struct Report {
  std::string title;
  std::vector<std::string> header;
  struct Line {
    bool ok;
    std::string check;
    std::string detail;
    std::string dump;
  };
  std::vector<Line> lines;

  void add(bool ok, std::string check, std::string detail = {}, std::string dump = {}) {
    lines.push_back({ok, std::move(check), std::move(detail), std::move(dump)});
  }
  void merge(const Report& other) {
    for (const auto& l : other.lines) lines.push_back(l);
  }
  std::size_t failures() const {
    std::size_t f = 0;
    for (const auto& l : lines) f += l.ok ? 0 : 1;
    return f;
  }
  bool ok() const { return failures() == 0; }

  std::string str() const {
    std::ostringstream os;
    os << "# " << title << "\n";
    for (const auto& h : header) os << "# " << h << "\n";
    for (const auto& l : lines) {
      os << (l.ok ? "PASS " : "FAIL ") << l.check;
      if (!l.detail.empty()) os << " : " << l.detail;
      os << "\n";
      if (!l.ok && !l.dump.empty()) {
        std::istringstream in(l.dump);
        for (std::string s; std::getline(in, s);) os << "  | " << s << "\n";
      }
    }
    os << "summary: " << lines.size() << " checks, " << failures() << " failures\n";
    return os.str();
  }
};

// A functor into FinPos, given by its action on concrete data. Domain
// objects are represented as posets (discrete ones for FinSet).
struct ConcreteFunctor {
  std::string name;
  std::function<std::vector<FinPoset>(std::size_t)> objects;
  std::function<std::vector<MonotoneMap>(const FinPoset&, const FinPoset&)> homs;
  std::function<FinPoset(const FinPoset&)> on_objects;
  std::function<MonotoneMap(const MonotoneMap&)> on_morphisms;
  // A domain object X and an so-morphism F X -> Y, when one is known.
  std::function<std::optional<std::pair<FinPoset, MonotoneMap>>(const FinPoset&)> cover;
  bool preserves_finite_limits = true;
  bool preserves_so = true;
};

inline ConcreteFunctor identity_functor() {
  ConcreteFunctor F;
  F.name = "identity on FinPos";
  F.objects = [](std::size_t b) { return posets_up_to(b); };
  F.homs = [](const FinPoset& A, const FinPoset& B) { return monotone_maps(A, B); };
  F.on_objects = [](const FinPoset& A) { return A; };
  F.on_morphisms = [](const MonotoneMap& f) { return f; };
  F.cover = [](const FinPoset& Y) { return std::make_optional(std::make_pair(Y, identity_map(Y))); };
  return F;
}

inline ConcreteFunctor discrete_inclusion() {
  ConcreteFunctor F;
  F.name = "discrete inclusion FinSet -> FinPos";
  F.objects = [](std::size_t b) {
    std::vector<FinPoset> out;
    for (std::size_t n = 0; n <= b; ++n) out.push_back(discrete(n));
    return out;
  };
  F.homs = [](const FinPoset& A, const FinPoset& B) { return monotone_maps(A, B); };
  F.on_objects = [](const FinPoset& A) { return A; };
  F.on_morphisms = [](const MonotoneMap& f) { return f; };
  F.cover = [](const FinPoset& Y) {
    FinPoset D = discrete(Y.size());
    std::vector<std::size_t> a(Y.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = i;
    return std::make_optional(std::make_pair(D, MonotoneMap(D, Y, std::move(a))));
  };
  return F;
}

// Inclusion of the subcategory of FinPos whose maps are identities and
// constants. It is faithful but not full.
inline ConcreteFunctor constants_inclusion() {
  ConcreteFunctor F = identity_functor();
  F.name = "inclusion of identities and constants";
  F.homs = [](const FinPoset& A, const FinPoset& B) {
    std::vector<MonotoneMap> out;
    for (const auto& f : monotone_maps(A, B)) {
      bool constant = std::adjacent_find(f.assign().begin(), f.assign().end(),
                                         std::not_equal_to<>()) == f.assign().end();
      bool ident = A == B && f == identity_map(A);
      if (constant || ident) out.push_back(f);
    }
    return out;
  };
  return F;
}

// Hom-posets of the domain (pointwise order) map bijectively and
// order-isomorphically onto the FinPos hom-posets.
inline Report check_fully_order_faithful(const ConcreteFunctor& F, std::size_t bound) {
  Report rep;
  rep.title = "fully order-faithful: " + F.name + ", bound " + std::to_string(bound);
  auto objs = F.objects(bound);
  std::size_t pairs = 0;
  for (const auto& A : objs)
    for (const auto& B : objs) {
      ++pairs;
      auto dom_homs = F.homs(A, B);
      HomPoset target = hom_poset(F.on_objects(A), F.on_objects(B));
      std::map<std::vector<std::size_t>, std::size_t> index;
      for (std::size_t i = 0; i < target.maps.size(); ++i) index[target.maps[i].assign()] = i;
      std::vector<std::size_t> img;
      std::set<std::size_t> seen;
      std::string problem;
      for (const auto& f : dom_homs) {
        auto it = index.find(F.on_morphisms(f).assign());
        if (it == index.end()) {
          problem = "image of a map is not a monotone map";
          break;
        }
        if (!seen.insert(it->second).second) {
          problem = "not faithful";
          break;
        }
        img.push_back(it->second);
      }
      if (problem.empty() && seen.size() != target.maps.size()) problem = "not full";
      for (std::size_t i = 0; i < img.size() && problem.empty(); ++i)
        for (std::size_t j = 0; j < img.size() && problem.empty(); ++j)
          if (pointwise_leq(dom_homs[i], dom_homs[j]) != target.poset.leq(img[i], img[j]))
            problem = "order not preserved and reflected";
      if (!problem.empty()) {
        rep.add(false, "hom-poset", problem + " for objects of sizes " + std::to_string(A.size()) + ", " +
                                        std::to_string(B.size()),
                poset_text(A) + poset_text(B));
        return rep;
      }
    }
  rep.add(true, "hom-poset", std::to_string(pairs) + " object pairs");
  return rep;
}

inline Report check_covering(const ConcreteFunctor& F, std::size_t bound) {
  Report rep;
  rep.title = "covering: " + F.name + ", bound " + std::to_string(bound);
  std::size_t n = 0;
  for (const auto& Y : posets_up_to(bound)) {
    ++n;
    auto c = F.cover(Y);
    if (!c || !(c->second.dom() == F.on_objects(c->first)) || !(c->second.cod() == Y) ||
        !classify_map(c->second).is_so) {
      rep.add(false, "cover", "no effective cover of a target object", poset_text(Y));
      return rep;
    }
  }
  rep.add(true, "cover", std::to_string(n) + " target objects");
  return rep;
}

namespace detail {

// All congruences on a poset X with at most 5 elements, by brute force over
// the pairs outside the order.
inline std::vector<BoolMatrix> all_congruences(const FinPoset& X) {
  const std::size_t n = X.size();
  std::vector<std::uint8_t> base(n, 0);
  std::vector<std::pair<std::size_t, std::size_t>> free;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (X.leq(i, j))
        base[i] |= static_cast<std::uint8_t>(1U << j);
      else
        free.emplace_back(i, j);
    }
  std::vector<BoolMatrix> out;
  std::vector<std::uint8_t> rows(n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << free.size()); ++mask) {
    rows = base;
    for (std::size_t s = 0; s < free.size(); ++s)
      if ((mask >> s) & 1U) rows[free[s].first] |= static_cast<std::uint8_t>(1U << free[s].second);
    bool transitive = true;
    for (std::size_t i = 0; i < n && transitive; ++i)
      for (std::size_t j = 0; j < n && transitive; ++j)
        if ((rows[i] >> j) & 1U) transitive = (rows[j] & ~rows[i]) == 0;
    if (!transitive) continue;
    BoolMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((rows[i] >> j) & 1U) m.set(i, j);
    out.push_back(std::move(m));
  }
  return out;
}

// The morphisms ms map bijectively onto target.maps under `realize`, with
// hom_leq matching the pointwise order.
inline std::string compare_hom(const std::vector<ExRegMorphism>& ms,
                               const std::function<MonotoneMap(const ExRegMorphism&)>& realize,
                               const HomPoset& target) {
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < target.maps.size(); ++i) index[target.maps[i].assign()] = i;
  if (ms.size() != target.maps.size())
    return std::to_string(ms.size()) + " morphisms against " + std::to_string(target.maps.size()) +
           " monotone maps";
  std::vector<std::size_t> img;
  std::set<std::size_t> seen;
  for (const auto& m : ms) {
    auto it = index.find(realize(m).assign());
    if (it == index.end()) return "realized map not found";
    if (!seen.insert(it->second).second) return "two morphisms realize to the same map";
    img.push_back(it->second);
  }
  for (std::size_t i = 0; i < ms.size(); ++i)
    for (std::size_t j = 0; j < ms.size(); ++j)
      if (hom_leq(ms[i], ms[j]) != target.poset.leq(img[i], img[j])) return "order mismatch";
  return {};
}

inline std::string object_dump(const ExRegObject& A) {
  return poset_text(A.carrier()) + to_text([&](std::ostream& os) { write_object(os, A, "carrier.poset"); });
}

}  // namespace detail

inline constexpr std::size_t equivalence_hom_cap = 4;

// Builds F̄ by lift_functor and checks essential surjectivity against the
// catalogue and hom-poset isomorphisms on sampled object pairs.
// The catalogue comparison runs up to `catalogue_bound` (default `bound`).
inline Report verify_characterization(BaseFunctor base, std::size_t bound, std::size_t samples = 100,
                                      std::uint64_t seed = 1, std::size_t catalogue_bound = 0) {
  ConcreteFunctor F = base == BaseFunctor::DiscreteInclusion ? discrete_inclusion() : identity_functor();
  Report rep;
  rep.title = "characterization: " + F.name + ", bound " + std::to_string(bound);
  std::size_t hb = std::min(bound, equivalence_hom_cap);
  rep.header.push_back("hom checks capped at carriers of size " + std::to_string(hb));
  rep.merge(check_fully_order_faithful(F, hb));
  rep.merge(check_covering(F, bound));

  // Essential surjectivity: realized iso classes equal the catalogue.
  if (catalogue_bound == 0) catalogue_bound = bound;
  std::size_t eb = std::min(catalogue_bound, base == BaseFunctor::DiscreteInclusion ? std::size_t{5} : std::size_t{4});
  std::set<std::pair<std::size_t, std::uint64_t>> realized, expected;
  std::size_t objects = 0;
  for (const auto& X : F.objects(eb))
    for (const auto& E : detail::all_congruences(X)) {
      ++objects;
      ExRegObject A(X, Relation(X, X, E));
      FinPoset Q = lift_object(base, A).cod();
      realized.emplace(Q.size(), canonical_key(Q));
    }
  for (std::size_t n = 0; n <= eb; ++n)
    for (const auto& P : poset_catalogue(n)) expected.emplace(n, canonical_key(P));
  rep.add(realized == expected, "essential-surjectivity",
          std::to_string(objects) + " objects realize " + std::to_string(realized.size()) + " of " +
              std::to_string(expected.size()) + " iso classes up to size " + std::to_string(eb));

  // Hom-posets on sampled pairs.
  Generator gen(seed);
  auto objs = F.objects(hb);
  for (std::size_t s = 0; s < samples; ++s) {
    const FinPoset& X = objs[gen.uniform(0, objs.size() - 1)];
    const FinPoset& Y = objs[gen.uniform(0, objs.size() - 1)];
    ExRegObject A(X, gen.congruence(X, 0.3));
    ExRegObject B(Y, gen.congruence(Y, 0.3));
    MonotoneMap p = lift_object(base, A);
    MonotoneMap q = lift_object(base, B);
    std::string problem =
        detail::compare_hom(enumerate_morphisms(A, B),
                            [&](const ExRegMorphism& R) { return lift_morphism(base, R, p, q); },
                            hom_poset(p.cod(), q.cod()));
    if (!problem.empty()) {
      rep.add(false, "hom-iso", problem, detail::object_dump(A) + detail::object_dump(B));
      return rep;
    }
  }
  rep.add(true, "hom-iso", std::to_string(samples) + " sampled object pairs");
  return rep;
}

// Discrete objects are the discrete posets and every poset is covered by one.
inline Report discrete_check(std::size_t bound) {
  Report rep;
  rep.title = "enough discrete objects in FinPos, bound " + std::to_string(bound);
  auto tests = posets_up_to(std::min<std::size_t>(bound, 2));
  std::size_t n = 0;
  for (const auto& P : posets_up_to(bound)) {
    ++n;
    // P is discrete as an object iff every hom-poset into it is discrete.
    bool homs_discrete = true;
    for (const auto& T : tests) homs_discrete = homs_discrete && is_discrete(hom_poset(T, P).poset);
    if (homs_discrete != is_discrete(P)) {
      rep.add(false, "discrete-objects", "hom test disagrees with the order", poset_text(P));
      return rep;
    }
    FinPoset D = discrete(P.size());
    std::vector<std::size_t> a(P.size());
    for (std::size_t i = 0; i < a.size(); ++i) a[i] = i;
    MonotoneMap cover(D, P, std::move(a));
    MapClass c = classify_map(cover);
    if (!c.is_so || (is_discrete(P) && !c.is_iso)) {
      rep.add(false, "discrete-cover", "identity-carrier map is not a cover", poset_text(P));
      return rep;
    }
  }
  rep.add(true, "discrete-objects", std::to_string(n) + " posets");
  rep.add(true, "discrete-cover", std::to_string(n) + " posets");
  return rep;
}

// Ord(FinSet) against FinPos: hom-posets, products, inserters, factorizations.
inline Report ord_agreement(std::size_t bound) {
  Report rep;
  rep.title = "Ord(FinSet) against FinPos, bound " + std::to_string(bound);
  auto objs = posets_up_to(bound);
  std::size_t homs = 0, prods = 0, ins = 0, facts = 0;
  const std::size_t small = std::min<std::size_t>(bound, 3);
  for (const auto& P : objs)
    for (const auto& Q : objs) {
      OrdObject X = to_ord(P), Y = to_ord(Q);
      OrdHom oh = ord_hom(X, Y);
      HomPoset fh = hom_poset(P, Q);
      bool same = oh.maps.size() == fh.maps.size() && oh.leq == fh.poset.order();
      for (std::size_t i = 0; same && i < oh.maps.size(); ++i) same = oh.maps[i].f == fh.maps[i].assign();
      ++homs;
      if (!same) {
        rep.add(false, "hom-poset", "Ord hom differs from FinPos hom", poset_text(P) + poset_text(Q));
        return rep;
      }
      OrdSpan op = ord_product(X, Y);
      Span fp = product(P, Q);
      ++prods;
      if (!(to_finpos(op.apex) == fp.apex) || op.p0.f != fp.p0.assign() || op.p1.f != fp.p1.assign()) {
        rep.add(false, "product", "Ord product differs", poset_text(P) + poset_text(Q));
        return rep;
      }
      if (P.size() > small || Q.size() > small) continue;
      for (const auto& f : oh.maps) {
        auto [oe, om] = ord_image_factorize(f);
        auto [fe, fm] = image_factorize(to_finpos(f));
        ++facts;
        if (!(to_finpos(oe.cod) == fe.cod()) || oe.f != fe.assign() || om.f != fm.assign()) {
          rep.add(false, "factorization", "Ord factorization differs", poset_text(P) + poset_text(Q));
          return rep;
        }
        for (const auto& g : oh.maps) {
          OrdMap oi = ord_inserter(f, g);
          MonotoneMap fi = inserter(to_finpos(f), to_finpos(g));
          ++ins;
          if (!(to_finpos(oi.dom) == fi.dom()) || oi.f != fi.assign()) {
            rep.add(false, "inserter", "Ord inserter differs", poset_text(P) + poset_text(Q));
            return rep;
          }
        }
      }
    }
  rep.add(true, "hom-poset", std::to_string(homs) + " object pairs");
  rep.add(true, "product", std::to_string(prods) + " object pairs");
  rep.add(true, "inserter", std::to_string(ins) + " parallel pairs");
  rep.add(true, "factorization", std::to_string(facts) + " maps");
  return rep;
}

// Ord(FinSet) ≃ FinPos, FinSet_ex/reg ≃ FinPos, Ord(FinSet)_ex/reg ≃ FinPos:
// the three hom-poset families agree with hom_poset(P,Q) for all catalogue
// posets P, Q up to the bound.
inline Report commutation_check(std::size_t bound) {
  Report rep;
  rep.title = "commutation of completions, bound " + std::to_string(bound);
  rep.header.push_back("base category C = FinSet; C_oex/reg is taken to be FinSet itself");
  rep.merge(ord_agreement(bound));
  auto objs = posets_up_to(bound);
  // Presentations: FinSet_ex/reg uses the order as a preorder on the
  // discrete carrier; Ord(FinSet)_ex/reg uses P×C2 with the congruence of
  // the projection to P.
  auto set_object = [](const FinPoset& P) {
    FinPoset D = discrete(P.size());
    return ExRegObject(D, Relation(D, D, P.order()));
  };
  auto ord_object = [](const FinPoset& P) {
    FinPoset X = to_finpos(ord_product(to_ord(P), to_ord(chain(2))).apex);
    BoolMatrix e(X.size(), X.size());
    for (std::size_t i = 0; i < X.size(); ++i)
      for (std::size_t j = 0; j < X.size(); ++j)
        if (P.leq(i / 2, j / 2)) e.set(i, j);
    return ExRegObject(X, Relation(X, X, std::move(e)));
  };
  std::size_t n = 0;
  for (const auto& P : objs)
    for (const auto& Q : objs) {
      HomPoset target = hom_poset(P, Q);
      ++n;
      for (int family = 0; family < 2; ++family) {
        ExRegObject A = family == 0 ? set_object(P) : ord_object(P);
        ExRegObject B = family == 0 ? set_object(Q) : ord_object(Q);
        Realization RA = quotient_realize(A), RB = quotient_realize(B);
        // Identify the realizations with P and Q themselves.
        auto ia = find_iso(RA.poset, P), ib = find_iso(RB.poset, Q);
        if (!ia || !ib) {
          rep.add(false, "realization", "presentation does not realize the poset", poset_text(P));
          return rep;
        }
        std::string problem = detail::compare_hom(
            enumerate_morphisms(A, B),
            [&](const ExRegMorphism& R) {
              MonotoneMap r = realize_morphism(R, RA, RB);
              std::vector<std::size_t> a(P.size());
              // transport along the identifications: ib ∘ r ∘ ia⁻¹
              for (std::size_t x = 0; x < RA.poset.size(); ++x) a[(*ia)(x)] = (*ib)(r(x));
              return MonotoneMap(P, Q, std::move(a));
            },
            target);
        if (!problem.empty()) {
          rep.add(false, family == 0 ? "set-exreg-hom" : "ord-exreg-hom", problem,
                  detail::object_dump(A) + detail::object_dump(B));
          return rep;
        }
      }
    }
  rep.add(true, "set-exreg-hom", std::to_string(n) + " object pairs");
  rep.add(true, "ord-exreg-hom", std::to_string(n) + " object pairs");
  return rep;
}

}  // namespace exreg
