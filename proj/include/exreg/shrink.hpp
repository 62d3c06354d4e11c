#pragma once

// Greedy counterexample shrinking with element and pair removal candidates.

#include <exreg/completion.hpp>
#include <exreg/io.hpp>

#include <functional>

namespace exreg {

template <class T>
using Candidates = std::function<std::vector<T>(const T&)>;

// Moves to the first smaller candidate that still fails until none does.
// No backtracking, so the result is locally minimal only.
template <class T, class Fails>
T shrink(T value, const Fails& fails, const Candidates<T>& candidates) {
  if (!fails(value)) fail(ErrorCode::NotFailing, "shrink needs a failing instance");
  for (bool progress = true; progress;) {
    progress = false;
    for (auto& c : candidates(value))
      if (fails(c)) {
        value = std::move(c);
        progress = true;
        break;
      }
  }
  return value;
}

namespace detail {

inline std::vector<std::size_t> all_but(std::size_t n, std::size_t skip) {
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < n; ++i)
    if (i != skip) keep.push_back(i);
  return keep;
}

inline FinPoset restrict_poset(const FinPoset& P, const std::vector<std::size_t>& keep) {
  return FinPoset::unchecked(P.order().restrict(keep, keep));
}

}  // namespace detail

// Delete one element, or drop one cover pair and re-close.
inline std::vector<FinPoset> poset_candidates(const FinPoset& P) {
  std::vector<FinPoset> out;
  for (std::size_t x = 0; x < P.size(); ++x) out.push_back(detail::restrict_poset(P, detail::all_but(P.size(), x)));
  auto covers = cover_pairs(P);
  for (std::size_t c = 0; c < covers.size(); ++c) {
    std::vector<Pair> rest;
    for (std::size_t d = 0; d < covers.size(); ++d)
      if (d != c) rest.push_back(covers[d]);
    out.push_back(make_poset(P.size(), rest));
  }
  return out;
}

// Delete a domain element, or an unused codomain element.
inline std::vector<MonotoneMap> map_candidates(const MonotoneMap& f) {
  std::vector<MonotoneMap> out;
  const FinPoset& X = f.dom();
  const FinPoset& Y = f.cod();
  for (std::size_t x = 0; x < X.size(); ++x) {
    auto keep = detail::all_but(X.size(), x);
    std::vector<std::size_t> a;
    for (std::size_t k : keep) a.push_back(f(k));
    out.push_back(MonotoneMap::unchecked(detail::restrict_poset(X, keep), Y, std::move(a)));
  }
  std::vector<bool> used(Y.size(), false);
  for (std::size_t x = 0; x < X.size(); ++x) used[f(x)] = true;
  for (std::size_t y = 0; y < Y.size(); ++y) {
    if (used[y]) continue;
    std::vector<std::size_t> a;
    for (std::size_t x = 0; x < X.size(); ++x) a.push_back(f(x) - (f(x) > y ? 1 : 0));
    out.push_back(MonotoneMap::unchecked(X, detail::restrict_poset(Y, detail::all_but(Y.size(), y)), std::move(a)));
  }
  return out;
}

// Delete a domain or codomain element, or a single pair.
inline std::vector<Relation> relation_candidates(const Relation& R) {
  std::vector<Relation> out;
  const std::size_t n = R.dom().size(), m = R.cod().size();
  std::vector<std::size_t> all_dom = detail::all_but(n, n), all_cod = detail::all_but(m, m);
  for (std::size_t x = 0; x < n; ++x) {
    auto keep = detail::all_but(n, x);
    out.emplace_back(detail::restrict_poset(R.dom(), keep), R.cod(), R.matrix().restrict(keep, all_cod));
  }
  for (std::size_t y = 0; y < m; ++y) {
    auto keep = detail::all_but(m, y);
    out.emplace_back(R.dom(), detail::restrict_poset(R.cod(), keep), R.matrix().restrict(all_dom, keep));
  }
  for (auto [x, y] : R.pairs()) {
    BoolMatrix b = R.matrix();
    b.set(x, y, false);
    out.emplace_back(R.dom(), R.cod(), std::move(b));
  }
  return out;
}

// Delete an element, or drop one pair outside the order and re-close.
inline std::vector<ExRegObject> object_candidates(const ExRegObject& A) {
  std::vector<ExRegObject> out;
  const FinPoset& X = A.carrier();
  const BoolMatrix& E = A.congruence().matrix();
  for (std::size_t x = 0; x < X.size(); ++x) {
    auto keep = detail::all_but(X.size(), x);
    FinPoset Y = detail::restrict_poset(X, keep);
    out.emplace_back(Y, Relation(Y, Y, E.restrict(keep, keep)));
  }
  for (std::size_t a = 0; a < X.size(); ++a)
    for (std::size_t b = 0; b < X.size(); ++b) {
      if (!E.test(a, b) || X.leq(a, b)) continue;
      BoolMatrix m = E;
      m.set(a, b, false);
      m.transitive_close();
      if (!(m == E)) out.emplace_back(X, Relation(X, X, std::move(m)));
    }
  return out;
}

}  // namespace exreg
