#pragma once

// Internal partial orders in FinSet. Constructions are done with set-level
// pullbacks and images so that they can be compared with the FinPos ones.

#include <exreg/limits.hpp>

#include <algorithm>
#include <set>

namespace exreg {

// A finite set with an internal order ≤ ↣ X×X, stored as its sorted pair list.
class OrdObject {
 public:
  OrdObject() = default;
  OrdObject(std::size_t n, std::vector<std::pair<std::size_t, std::size_t>> order)
      : n_(n), order_(std::move(order)) {
    std::sort(order_.begin(), order_.end());
    order_.erase(std::unique(order_.begin(), order_.end()), order_.end());
    for (auto [a, b] : order_)
      if (a >= n_ || b >= n_) fail(ErrorCode::ShapeMismatch, "order pair out of range");
    for (std::size_t i = 0; i < n_; ++i)
      if (!leq(i, i)) fail(ErrorCode::NotAnOrder, "diagonal does not factor through the order");
    for (auto [a, b] : order_) {
      if (a != b && leq(b, a)) fail(ErrorCode::AntisymmetryViolation, "order meets its opposite off the diagonal");
      // transitivity: the composite ≤∘≤ computed by the pullback over X
      for (auto it = std::lower_bound(order_.begin(), order_.end(), std::make_pair(b, std::size_t{0}));
           it != order_.end() && it->first == b; ++it)
        if (!leq(a, it->second)) fail(ErrorCode::NotAnOrder, "order is not transitive");
    }
  }

  std::size_t size() const noexcept { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& order() const noexcept { return order_; }
  bool leq(std::size_t a, std::size_t b) const {
    return std::binary_search(order_.begin(), order_.end(), std::make_pair(a, b));
  }

  friend bool operator==(const OrdObject&, const OrdObject&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::pair<std::size_t, std::size_t>> order_;
};

// A function of carriers preserving the internal order.
struct OrdMap {
  OrdObject dom;
  OrdObject cod;
  std::vector<std::size_t> f;
  std::size_t operator()(std::size_t x) const { return f[x]; }
};

inline bool preserves_order(const OrdObject& X, const OrdObject& Y, const std::vector<std::size_t>& f) {
  for (auto [a, b] : X.order())
    if (!Y.leq(f[a], f[b])) return false;
  return true;
}

inline OrdObject to_ord(const FinPoset& P) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t i = 0; i < P.size(); ++i)
    P.order().for_each_in_row(i, [&](std::size_t j) { pairs.emplace_back(i, j); });
  return OrdObject(P.size(), std::move(pairs));
}

inline FinPoset to_finpos(const OrdObject& X) {
  BoolMatrix m(X.size(), X.size());
  for (auto [a, b] : X.order()) m.set(a, b);
  return FinPoset::from_order(std::move(m));
}

inline MonotoneMap to_finpos(const OrdMap& f) { return MonotoneMap(to_finpos(f.dom), to_finpos(f.cod), f.f); }

struct OrdHom {
  std::vector<OrdMap> maps;  // lexicographic in the assignment vector
  BoolMatrix leq;            // f <= g iff <f,g> factors through ≤_Y
};

// Odometer over all functions X -> Y, keeping the order-preserving ones.
inline OrdHom ord_hom(const OrdObject& X, const OrdObject& Y) {
  OrdHom h;
  const std::size_t n = X.size(), m = Y.size();
  if (n > 0 && m == 0) {
    h.leq = BoolMatrix(0, 0);
    return h;
  }
  std::vector<std::size_t> f(n, 0);
  while (true) {
    if (preserves_order(X, Y, f)) h.maps.push_back({X, Y, f});
    std::size_t i = n;
    while (i > 0 && f[i - 1] + 1 == m) f[--i] = 0;
    if (i == 0) break;
    ++f[i - 1];
  }
  h.leq = BoolMatrix(h.maps.size(), h.maps.size());
  for (std::size_t a = 0; a < h.maps.size(); ++a)
    for (std::size_t b = 0; b < h.maps.size(); ++b) {
      bool factors = true;
      for (std::size_t x = 0; x < n && factors; ++x) factors = Y.leq(h.maps[a](x), h.maps[b](x));
      if (factors) h.leq.set(a, b);
    }
  return h;
}

struct OrdSpan {
  OrdObject apex;
  OrdMap p0;
  OrdMap p1;
};

// Carrier X×Y (index x*|Y|+y); order ≤_X × ≤_Y reindexed along the shuffle.
inline OrdSpan ord_product(const OrdObject& X, const OrdObject& Y) {
  const std::size_t ny = Y.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [a, b] : X.order())
    for (auto [c, d] : Y.order()) pairs.emplace_back(a * ny + c, b * ny + d);
  OrdObject P(X.size() * ny, std::move(pairs));
  std::vector<std::size_t> f0(P.size()), f1(P.size());
  for (std::size_t i = 0; i < P.size(); ++i) {
    f0[i] = i / ny;
    f1[i] = i % ny;
  }
  return {P, {P, X, std::move(f0)}, {P, Y, std::move(f1)}};
}

// Subobject S ⊆ X (sorted) with the pullback of ≤_X along S×S ↣ X×X.
inline OrdMap ord_restrict(const OrdObject& X, const std::vector<std::size_t>& S) {
  std::vector<std::size_t> pos(X.size(), X.size());
  for (std::size_t i = 0; i < S.size(); ++i) pos[S[i]] = i;
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (auto [a, b] : X.order())
    if (pos[a] != X.size() && pos[b] != X.size()) pairs.emplace_back(pos[a], pos[b]);
  OrdObject sub(S.size(), std::move(pairs));
  return {sub, X, S};
}

// Pullback of <f,g>: X -> Y×Y along ≤_Y ↣ Y×Y.
inline OrdMap ord_inserter(const OrdMap& f, const OrdMap& g) {
  std::vector<std::size_t> S;
  for (std::size_t x = 0; x < f.dom.size(); ++x)
    if (f.cod.leq(f(x), g(x))) S.push_back(x);
  return ord_restrict(f.dom, S);
}

// Pullback of f×g: X×Y -> Z×Z along ≤_Z, with the restricted product order.
inline OrdSpan ord_comma(const OrdMap& f, const OrdMap& g) {
  OrdSpan prod = ord_product(f.dom, g.dom);
  std::vector<std::size_t> S;
  for (std::size_t i = 0; i < prod.apex.size(); ++i)
    if (f.cod.leq(f(prod.p0(i)), g(prod.p1(i)))) S.push_back(i);
  OrdMap m = ord_restrict(prod.apex, S);
  std::vector<std::size_t> a0, a1;
  for (std::size_t s : S) {
    a0.push_back(prod.p0(s));
    a1.push_back(prod.p1(s));
  }
  return {m.dom, {m.dom, f.dom, std::move(a0)}, {m.dom, g.dom, std::move(a1)}};
}

// Set-image M of f; ≤_M is the pullback of ≤_Y along M×M ↣ Y×Y.
inline std::pair<OrdMap, OrdMap> ord_image_factorize(const OrdMap& f) {
  std::set<std::size_t> img(f.f.begin(), f.f.end());
  std::vector<std::size_t> M(img.begin(), img.end());
  OrdMap m = ord_restrict(f.cod, M);
  std::vector<std::size_t> e(f.dom.size());
  for (std::size_t x = 0; x < e.size(); ++x)
    e[x] = static_cast<std::size_t>(std::lower_bound(M.begin(), M.end(), f(x)) - M.begin());
  return {{f.dom, m.dom, std::move(e)}, m};
}

}  // namespace exreg
