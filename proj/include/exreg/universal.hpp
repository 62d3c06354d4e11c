#pragma once

// Universal-property checks in FinPos by enumerating cones and cocones.
// Cones are taken from the test stages 1 and the 2-chain; cocones go into
// the 2- and 3-chains. Up-sets separate points, so these stages suffice.

#include <exreg/limits.hpp>

#include <map>
#include <string>

namespace exreg {

struct UniversalCheck {
  bool ok = true;
  std::string detail;
  explicit operator bool() const noexcept { return ok; }
};

// Checks that (apex, p0, p1) is the limit whose cones over points are the
// pairs (a,b) satisfying `cone`. Every point cone must factor uniquely, and a
// 2-chain cone (a,b) <= (a',b') must factor, which together say that the
// legs are jointly order-mono and jointly surjective onto the cones.
inline UniversalCheck verify_pair_limit(
    const Span& s, const std::function<bool(std::size_t, std::size_t)>& cone) {
  const FinPoset& A = s.p0.cod();
  const FinPoset& B = s.p1.cod();
  std::map<std::pair<std::size_t, std::size_t>, std::vector<std::size_t>> fibre;
  for (std::size_t p = 0; p < s.apex.size(); ++p) {
    auto key = std::make_pair(s.p0(p), s.p1(p));
    if (!cone(key.first, key.second))
      return {false, "apex point " + std::to_string(p) + " is not a cone"};
    fibre[key].push_back(p);
  }
  for (std::size_t a = 0; a < A.size(); ++a)
    for (std::size_t b = 0; b < B.size(); ++b) {
      if (!cone(a, b)) continue;
      auto it = fibre.find({a, b});
      std::size_t count = it == fibre.end() ? 0 : it->second.size();
      if (count != 1)
        return {false, "point cone (" + std::to_string(a) + "," + std::to_string(b) + ") has " +
                           std::to_string(count) + " factorizations"};
    }
  for (std::size_t p = 0; p < s.apex.size(); ++p)
    for (std::size_t q = 0; q < s.apex.size(); ++q) {
      bool legs = A.leq(s.p0(p), s.p0(q)) && B.leq(s.p1(p), s.p1(q));
      if (legs != s.apex.leq(p, q))
        return {false, "arrow cone " + std::to_string(p) + " -> " + std::to_string(q) +
                           (legs ? " does not factor" : " is not a cone image")};
    }
  return {};
}

// Single-leg variant for inserters and equalizers.
inline UniversalCheck verify_sub_limit(const MonotoneMap& m,
                                       const std::function<bool(std::size_t)>& cone) {
  Span s{m.dom(), m, to_terminal(m.dom())};
  return verify_pair_limit(s, [&](std::size_t x, std::size_t) { return cone(x); });
}

// Checks that q is the coinserter of (f0,f1): every test map g out of
// cod(f0) with g f0 <= g f1 factors through q exactly once, and maps that
// do not satisfy it do not factor at all.
inline UniversalCheck verify_coinserter(const MonotoneMap& q, const MonotoneMap& f0,
                                        const MonotoneMap& f1) {
  const FinPoset& X = f0.cod();
  for (std::size_t len : {2U, 3U}) {
    FinPoset Z = chain(len);
    std::map<std::vector<std::size_t>, std::size_t> factors;
    for (const auto& h : monotone_maps(q.cod(), Z)) ++factors[compose(h, q).assign()];
    for (const auto& g : monotone_maps(X, Z)) {
      bool cocone = true;
      for (std::size_t a = 0; a < f0.dom().size() && cocone; ++a) cocone = Z.leq(g(f0(a)), g(f1(a)));
      auto it = factors.find(g.assign());
      std::size_t count = it == factors.end() ? 0 : it->second;
      if (count != (cocone ? 1U : 0U))
        return {false, "test map into chain " + std::to_string(len) + " has " +
                           std::to_string(count) + " factorizations"};
    }
  }
  return {};
}

}  // namespace exreg
