#pragma once

#include <exreg/limits.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace exreg {

using Pair = std::pair<std::size_t, std::size_t>;

// A relation X ⇸ Y: an arbitrary subset of X×Y.
class Relation {
 public:
  Relation() = default;
  Relation(FinPoset dom, FinPoset cod, BoolMatrix pairs)
      : dom_(std::move(dom)), cod_(std::move(cod)), m_(std::move(pairs)) {
    if (m_.rows() != dom_.size() || m_.cols() != cod_.size())
      fail(ErrorCode::ShapeMismatch, "relation matrix does not match its carriers");
  }

  static Relation from_pairs(FinPoset dom, FinPoset cod, const std::vector<Pair>& pairs) {
    BoolMatrix m(dom.size(), cod.size());
    for (auto [x, y] : pairs) {
      if (x >= dom.size() || y >= cod.size())
        fail(ErrorCode::ShapeMismatch, "pair index out of range");
      m.set(x, y);
    }
    return Relation(std::move(dom), std::move(cod), std::move(m));
  }

  const FinPoset& dom() const noexcept { return dom_; }
  const FinPoset& cod() const noexcept { return cod_; }
  const BoolMatrix& matrix() const noexcept { return m_; }
  bool test(std::size_t x, std::size_t y) const noexcept { return m_.test(x, y); }
  bool operator()(std::size_t x, std::size_t y) const noexcept { return m_.test(x, y); }
  std::size_t size() const noexcept { return m_.count(); }
  bool is_empty() const noexcept { return !m_.any(); }

  // Pairs in lexicographic order.
  std::vector<Pair> pairs() const {
    std::vector<Pair> out;
    for (std::size_t x = 0; x < dom_.size(); ++x)
      m_.for_each_in_row(x, [&](std::size_t y) { out.emplace_back(x, y); });
    return out;
  }

  // x' <= x, R(x,y), y <= y'  implies  R(x',y').
  bool is_weakening_closed() const {
    return dom_.order().product(m_).product(cod_.order()) == m_;
  }

  friend bool operator==(const Relation& a, const Relation& b) {
    return a.m_ == b.m_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
  }

 private:
  FinPoset dom_;
  FinPoset cod_;
  BoolMatrix m_;
};

inline void require_same_shape(const Relation& R, const Relation& S) {
  if (!(R.dom() == S.dom()) || !(R.cod() == S.cod()))
    fail(ErrorCode::DomainMismatch, "relations do not share domain and codomain");
}

// S ∘ R: first R, then S.
inline Relation compose(const Relation& S, const Relation& R) {
  if (!(R.cod() == S.dom())) fail(ErrorCode::DomainMismatch, "relations are not composable");
  return Relation(R.dom(), S.cod(), R.matrix().product(S.matrix()));
}

inline Relation opposite(const Relation& R) {
  return Relation(R.cod(), R.dom(), R.matrix().transpose());
}

inline Relation meet(const Relation& R, const Relation& S) {
  require_same_shape(R, S);
  return Relation(R.dom(), R.cod(), R.matrix() & S.matrix());
}

inline Relation join(const Relation& R, const Relation& S) {
  require_same_shape(R, S);
  return Relation(R.dom(), R.cod(), R.matrix() | S.matrix());
}

// R ⊆ S
inline bool includes(const Relation& S, const Relation& R) {
  require_same_shape(R, S);
  return R.matrix().subset_of(S.matrix());
}

inline Relation delta(const FinPoset& X) { return Relation(X, X, BoolMatrix::identity(X.size())); }
inline Relation identity_I(const FinPoset& X) { return Relation(X, X, X.order()); }
inline Relation full_relation(const FinPoset& X, const FinPoset& Y) {
  return Relation(X, Y, BoolMatrix::full(X.size(), Y.size()));
}
inline Relation empty_relation(const FinPoset& X, const FinPoset& Y) {
  return Relation(X, Y, BoolMatrix(X.size(), Y.size()));
}

inline Relation graph(const MonotoneMap& f) {
  BoolMatrix m(f.dom().size(), f.cod().size());
  for (std::size_t x = 0; x < f.dom().size(); ++x) m.set(x, f(x));
  return Relation(f.dom(), f.cod(), std::move(m));
}

// f_* = {(x,y) : f(x) <= y}
inline Relation hypergraph(const MonotoneMap& f) {
  BoolMatrix m(f.dom().size(), f.cod().size());
  for (std::size_t x = 0; x < f.dom().size(); ++x)
    for (std::size_t y = 0; y < f.cod().size(); ++y)
      if (f.cod().leq(f(x), y)) m.set(x, y);
  return Relation(f.dom(), f.cod(), std::move(m));
}

// f^* = {(y,x) : y <= f(x)}
inline Relation hypograph(const MonotoneMap& f) {
  BoolMatrix m(f.cod().size(), f.dom().size());
  for (std::size_t x = 0; x < f.dom().size(); ++x)
    for (std::size_t y = 0; y < f.cod().size(); ++y)
      if (f.cod().leq(y, f(x))) m.set(y, x);
  return Relation(f.cod(), f.dom(), std::move(m));
}

// I_Y R I_X
inline Relation weakening_closure(const Relation& R) {
  return Relation(R.dom(), R.cod(), R.dom().order().product(R.matrix()).product(R.cod().order()));
}

inline void require_weakening(const Relation& R, const char* what) {
  if (!R.is_weakening_closed())
    fail(ErrorCode::NotWeakening, std::string(what) + " is not weakening-closed");
}

struct InclusionReport {
  bool holds = true;
  std::optional<Pair> witness;  // smallest pair in the left side but not the right
  explicit operator bool() const noexcept { return holds; }
};

// Reports whether lhs ⊆ rhs.
inline InclusionReport check_inclusion(const Relation& lhs, const Relation& rhs) {
  require_same_shape(lhs, rhs);
  InclusionReport r;
  r.witness = lhs.matrix().first_outside(rhs.matrix());
  r.holds = !r.witness.has_value();
  return r;
}

// Composite computed through the category: tabulate R and S as subposets of
// the products, pull back along the middle, then take the image in X×Z.
inline Relation compose_via_pullback(const Relation& S, const Relation& R) {
  if (!(R.cod() == S.dom())) fail(ErrorCode::DomainMismatch, "relations are not composable");
  Span r = pair_subposet(R.dom(), R.cod(), [&](std::size_t x, std::size_t y) { return R(x, y); });
  Span s = pair_subposet(S.dom(), S.cod(), [&](std::size_t y, std::size_t z) { return S(y, z); });
  Span t = pullback(r.p1, s.p0);
  Span xz = product(R.dom(), S.cod());
  std::vector<std::size_t> a(t.apex.size());
  for (std::size_t w = 0; w < a.size(); ++w)
    a[w] = r.p0(t.p0(w)) * S.cod().size() + s.p1(t.p1(w));
  MonotoneMap pairing(t.apex, xz.apex, std::move(a));
  auto [e, m] = image_factorize(pairing);
  BoolMatrix out(R.dom().size(), S.cod().size());
  for (std::size_t i = 0; i < m.dom().size(); ++i) out.set(xz.p0(m(i)), xz.p1(m(i)));
  return Relation(R.dom(), S.cod(), std::move(out));
}

}  // namespace exreg
