#pragma once

#include <exreg/poset.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <vector>

namespace exreg {

struct Span {
  FinPoset apex;
  MonotoneMap p0;
  MonotoneMap p1;
};

struct Cone {
  FinPoset apex;
  std::vector<MonotoneMap> legs;
};

// Induced subposet on `elems` (kept in the given order) with its inclusion.
inline MonotoneMap subposet_inclusion(const FinPoset& X, std::vector<std::size_t> elems) {
  FinPoset S = FinPoset::unchecked(X.order().restrict(elems, elems));
  return MonotoneMap::unchecked(std::move(S), X, std::move(elems));
}

inline MonotoneMap to_terminal(const FinPoset& X) {
  return MonotoneMap::unchecked(X, terminal_poset(), std::vector<std::size_t>(X.size(), 0));
}

// Carrier X×Y indexed x*|Y|+y, componentwise order.
inline Span product(const FinPoset& X, const FinPoset& Y) {
  const std::size_t nx = X.size(), ny = Y.size();
  BoolMatrix leq(nx * ny, nx * ny);
  std::vector<std::size_t> a0(nx * ny), a1(nx * ny);
  for (std::size_t i = 0; i < nx * ny; ++i) {
    a0[i] = i / ny;
    a1[i] = i % ny;
  }
  for (std::size_t i = 0; i < nx * ny; ++i)
    for (std::size_t j = 0; j < nx * ny; ++j)
      if (X.leq(a0[i], a0[j]) && Y.leq(a1[i], a1[j])) leq.set(i, j);
  FinPoset P = FinPoset::unchecked(std::move(leq));
  return {P, MonotoneMap::unchecked(P, X, std::move(a0)), MonotoneMap::unchecked(P, Y, std::move(a1))};
}

// n-ary product; tuples in lexicographic order (first factor most significant).
inline Cone product(const std::vector<FinPoset>& factors) {
  std::size_t total = 1;
  for (const auto& F : factors) total *= F.size();
  std::vector<std::vector<std::size_t>> coords(factors.size(), std::vector<std::size_t>(total));
  for (std::size_t t = 0; t < total; ++t) {
    std::size_t rest = t;
    for (std::size_t k = factors.size(); k-- > 0;) {
      coords[k][t] = rest % factors[k].size();
      rest /= factors[k].size();
    }
  }
  BoolMatrix leq(total, total);
  for (std::size_t s = 0; s < total; ++s)
    for (std::size_t t = 0; t < total; ++t) {
      bool ok = true;
      for (std::size_t k = 0; k < factors.size() && ok; ++k)
        ok = factors[k].leq(coords[k][s], coords[k][t]);
      if (ok) leq.set(s, t);
    }
  Cone c{FinPoset::unchecked(std::move(leq)), {}};
  for (std::size_t k = 0; k < factors.size(); ++k)
    c.legs.push_back(MonotoneMap::unchecked(c.apex, factors[k], std::move(coords[k])));
  return c;
}

inline void require_parallel(const MonotoneMap& f, const MonotoneMap& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    fail(ErrorCode::DomainMismatch, "maps are not parallel");
}

inline void require_cospan(const MonotoneMap& f, const MonotoneMap& g) {
  if (!(f.cod() == g.cod())) fail(ErrorCode::DomainMismatch, "maps do not share a codomain");
}

// {x : f(x) <= g(x)} with the induced order.
inline MonotoneMap inserter(const MonotoneMap& f, const MonotoneMap& g) {
  require_parallel(f, g);
  std::vector<std::size_t> keep;
  for (std::size_t x = 0; x < f.dom().size(); ++x)
    if (f.cod().leq(f(x), g(x))) keep.push_back(x);
  return subposet_inclusion(f.dom(), std::move(keep));
}

inline MonotoneMap equalizer(const MonotoneMap& f, const MonotoneMap& g) {
  require_parallel(f, g);
  std::vector<std::size_t> keep;
  for (std::size_t x = 0; x < f.dom().size(); ++x)
    if (f(x) == g(x)) keep.push_back(x);
  return subposet_inclusion(f.dom(), std::move(keep));
}

// Inserter of (f,g), then the inserter of (g m, f m) inside it.
inline MonotoneMap equalizer_via_inserters(const MonotoneMap& f, const MonotoneMap& g) {
  MonotoneMap m = inserter(f, g);
  MonotoneMap n = inserter(compose(g, m), compose(f, m));
  return compose(m, n);
}

// Pairs (x,y) in lexicographic order satisfying `keep`, with the product order.
inline Span pair_subposet(const FinPoset& X, const FinPoset& Y,
                          const std::function<bool(std::size_t, std::size_t)>& keep) {
  std::vector<std::size_t> a0, a1;
  for (std::size_t x = 0; x < X.size(); ++x)
    for (std::size_t y = 0; y < Y.size(); ++y)
      if (keep(x, y)) {
        a0.push_back(x);
        a1.push_back(y);
      }
  const std::size_t n = a0.size();
  BoolMatrix leq(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (X.leq(a0[i], a0[j]) && Y.leq(a1[i], a1[j])) leq.set(i, j);
  FinPoset P = FinPoset::unchecked(std::move(leq));
  return {P, MonotoneMap::unchecked(P, X, std::move(a0)), MonotoneMap::unchecked(P, Y, std::move(a1))};
}

// f/g = {(x,y) : f(x) <= g(y)}
inline Span comma(const MonotoneMap& f, const MonotoneMap& g) {
  require_cospan(f, g);
  return pair_subposet(f.dom(), g.dom(),
                       [&](std::size_t x, std::size_t y) { return f.cod().leq(f(x), g(y)); });
}

inline Span kernel_congruence(const MonotoneMap& f) { return comma(f, f); }

inline Span pullback(const MonotoneMap& f, const MonotoneMap& g) {
  require_cospan(f, g);
  return pair_subposet(f.dom(), g.dom(), [&](std::size_t x, std::size_t y) { return f(x) == g(y); });
}

// e onto the set-image with the codomain-induced order, then the inclusion m.
inline std::pair<MonotoneMap, MonotoneMap> image_factorize(const MonotoneMap& f) {
  std::vector<bool> hit(f.cod().size(), false);
  for (std::size_t v : f.assign()) hit[v] = true;
  std::vector<std::size_t> image;
  std::vector<std::size_t> pos(f.cod().size(), 0);
  for (std::size_t y = 0; y < hit.size(); ++y)
    if (hit[y]) {
      pos[y] = image.size();
      image.push_back(y);
    }
  MonotoneMap m = subposet_inclusion(f.cod(), std::move(image));
  std::vector<std::size_t> a(f.dom().size());
  for (std::size_t x = 0; x < a.size(); ++x) a[x] = pos[f(x)];
  return {MonotoneMap::unchecked(f.dom(), m.dom(), std::move(a)), m};
}

// Quotient of X by a preorder containing its order. Classes are indexed by
// their smallest member, in increasing order.
inline MonotoneMap poset_reflection(const FinPoset& X, const BoolMatrix& preorder) {
  const std::size_t n = X.size();
  std::vector<std::size_t> cls(n, n);
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < n; ++x) {
    if (cls[x] != n) continue;
    cls[x] = reps.size();
    for (std::size_t y = x + 1; y < n; ++y)
      if (cls[y] == n && preorder.test(x, y) && preorder.test(y, x)) cls[y] = reps.size();
    reps.push_back(x);
  }
  FinPoset Q = FinPoset::unchecked(preorder.restrict(reps, reps));
  return MonotoneMap::unchecked(X, std::move(Q), std::move(cls));
}

inline MonotoneMap coinserter(const MonotoneMap& f0, const MonotoneMap& f1) {
  require_parallel(f0, f1);
  const FinPoset& X = f0.cod();
  BoolMatrix pre = X.order();
  for (std::size_t a = 0; a < f0.dom().size(); ++a) pre.set(f0(a), f1(a));
  pre.transitive_close();
  return poset_reflection(X, pre);
}

// All monotone maps X -> Y, in lexicographic order of assignment vectors.
inline std::vector<MonotoneMap> monotone_maps(const FinPoset& X, const FinPoset& Y) {
  std::vector<MonotoneMap> out;
  const std::size_t n = X.size();
  std::vector<std::size_t> a(n, 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == n) {
      out.push_back(MonotoneMap::unchecked(X, Y, a));
      return;
    }
    for (std::size_t y = 0; y < Y.size(); ++y) {
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j) {
        if (X.leq(j, i) && !Y.leq(a[j], y)) ok = false;
        if (X.leq(i, j) && !Y.leq(y, a[j])) ok = false;
      }
      if (!ok) continue;
      a[i] = y;
      go(i + 1);
    }
  };
  go(0);
  return out;
}

struct HomPoset {
  FinPoset poset;
  std::vector<MonotoneMap> maps;  // element i of poset is maps[i]
};

inline HomPoset hom_poset(const FinPoset& X, const FinPoset& Y) {
  HomPoset h;
  h.maps = monotone_maps(X, Y);
  const std::size_t n = h.maps.size();
  BoolMatrix leq(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      bool ok = true;
      for (std::size_t x = 0; x < X.size() && ok; ++x) ok = Y.leq(h.maps[i](x), h.maps[j](x));
      if (ok) leq.set(i, j);
    }
  h.poset = FinPoset::unchecked(std::move(leq));
  return h;
}

// X^P as the poset of monotone maps P -> X.
inline FinPoset power(const FinPoset& X, const FinPoset& P) { return hom_poset(P, X).poset; }

// X^P carved out of the |P|-fold product of X by one inserter per strict
// relation a < b of P. Returns the inclusion into the product; the apex is
// its domain.
inline MonotoneMap power_via_inserters(const FinPoset& X, const FinPoset& P) {
  Cone prod = product(std::vector<FinPoset>(P.size(), X));
  MonotoneMap m = identity_map(prod.apex);
  for (std::size_t a = 0; a < P.size(); ++a)
    for (std::size_t b = 0; b < P.size(); ++b)
      if (a != b && P.leq(a, b)) {
        MonotoneMap j = inserter(compose(prod.legs[a], m), compose(prod.legs[b], m));
        m = compose(m, j);
      }
  return m;
}

namespace detail {

struct Signature {
  std::size_t up = 0, down = 0;
  auto operator<=>(const Signature&) const = default;
};

inline std::vector<Signature> signatures(const FinPoset& P) {
  std::vector<Signature> s(P.size());
  for (std::size_t i = 0; i < P.size(); ++i)
    for (std::size_t j = 0; j < P.size(); ++j) {
      if (P.leq(i, j)) ++s[i].up;
      if (P.leq(j, i)) ++s[i].down;
    }
  return s;
}

}  // namespace detail

// Backtracking search for an order isomorphism P -> Q.
inline std::optional<MonotoneMap> find_iso(const FinPoset& P, const FinPoset& Q) {
  const std::size_t n = P.size();
  if (n != Q.size() || P.order().count() != Q.order().count()) return std::nullopt;
  auto sp = detail::signatures(P);
  auto sq = detail::signatures(Q);
  {
    auto a = sp, b = sq;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<std::size_t> a(n, 0);
  std::vector<bool> used(n, false);
  std::function<bool(std::size_t)> go = [&](std::size_t i) {
    if (i == n) return true;
    for (std::size_t y = 0; y < n; ++y) {
      if (used[y] || !(sp[i] == sq[y])) continue;
      bool ok = true;
      for (std::size_t j = 0; j < i && ok; ++j)
        ok = P.leq(j, i) == Q.leq(a[j], y) && P.leq(i, j) == Q.leq(y, a[j]);
      if (!ok) continue;
      a[i] = y;
      used[y] = true;
      if (go(i + 1)) return true;
      used[y] = false;
    }
    return false;
  };
  if (!go(0)) return std::nullopt;
  return MonotoneMap::unchecked(P, Q, std::move(a));
}

inline bool isomorphic(const FinPoset& P, const FinPoset& Q) { return find_iso(P, Q).has_value(); }

}  // namespace exreg
