#pragma once

#include <exreg/bool_matrix.hpp>
#include <exreg/error.hpp>

#include <algorithm>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace exreg {

// Immutable finite poset on 0..n-1. Copies share storage.
class FinPoset {
 public:
  FinPoset() : d_(std::make_shared<const Data>()) {}

  // Validates reflexivity, antisymmetry and transitivity.
  static FinPoset from_order(BoolMatrix leq, std::vector<std::string> labels = {}) {
    const std::size_t n = leq.rows();
    if (leq.cols() != n) fail(ErrorCode::ShapeMismatch, "order matrix is not square");
    if (!labels.empty() && labels.size() != n)
      fail(ErrorCode::ShapeMismatch, "label count differs from element count");
    for (std::size_t i = 0; i < n; ++i)
      if (!leq.test(i, i))
        fail(ErrorCode::NotAnOrder, "not reflexive at " + std::to_string(i));
    check_antisymmetric(leq);
    if (!leq.product(leq).subset_of(leq)) fail(ErrorCode::NotAnOrder, "not transitive");
    return unchecked(std::move(leq), std::move(labels));
  }

  // Caller guarantees the order axioms.
  static FinPoset unchecked(BoolMatrix leq, std::vector<std::string> labels = {}) {
    FinPoset p;
    auto d = std::make_shared<Data>();
    d->n = leq.rows();
    d->leq = std::move(leq);
    d->labels = std::move(labels);
    p.d_ = std::move(d);
    return p;
  }

  static void check_antisymmetric(const BoolMatrix& leq) {
    for (std::size_t i = 0; i < leq.rows(); ++i)
      for (std::size_t j = i + 1; j < leq.rows(); ++j)
        if (leq.test(i, j) && leq.test(j, i))
          fail(ErrorCode::AntisymmetryViolation,
               "elements " + std::to_string(i) + " and " + std::to_string(j) +
                   " lie on a cycle");
  }

  std::size_t size() const noexcept { return d_->n; }
  bool empty() const noexcept { return d_->n == 0; }
  bool leq(std::size_t i, std::size_t j) const noexcept { return d_->leq.test(i, j); }
  const BoolMatrix& order() const noexcept { return d_->leq; }

  bool has_labels() const noexcept { return !d_->labels.empty(); }
  const std::vector<std::string>& labels() const noexcept { return d_->labels; }
  std::string label(std::size_t i) const {
    return has_labels() ? d_->labels[i] : std::to_string(i);
  }

  FinPoset with_labels(std::vector<std::string> labels) const {
    return from_order(d_->leq, std::move(labels));
  }

  bool same_storage(const FinPoset& other) const noexcept { return d_ == other.d_; }

  // Labels are presentational and do not take part in equality.
  friend bool operator==(const FinPoset& a, const FinPoset& b) {
    return a.d_ == b.d_ || a.d_->leq == b.d_->leq;
  }

 private:
  struct Data {
    std::size_t n = 0;
    std::vector<std::string> labels;
    BoolMatrix leq;
  };
  std::shared_ptr<const Data> d_;
};

inline FinPoset make_poset(std::vector<std::string> labels,
                           const std::vector<std::pair<std::size_t, std::size_t>>& cover_pairs) {
  const std::size_t n = labels.size();
  BoolMatrix leq(n, n);
  for (auto [i, j] : cover_pairs) {
    if (i >= n || j >= n) fail(ErrorCode::ShapeMismatch, "pair index out of range");
    leq.set(i, j);
  }
  leq.reflexive_close();
  leq.transitive_close();
  FinPoset::check_antisymmetric(leq);
  return FinPoset::unchecked(std::move(leq), std::move(labels));
}

inline FinPoset make_poset(std::size_t n,
                           const std::vector<std::pair<std::size_t, std::size_t>>& cover_pairs) {
  BoolMatrix leq(n, n);
  for (auto [i, j] : cover_pairs) {
    if (i >= n || j >= n) fail(ErrorCode::ShapeMismatch, "pair index out of range");
    leq.set(i, j);
  }
  leq.reflexive_close();
  leq.transitive_close();
  FinPoset::check_antisymmetric(leq);
  return FinPoset::unchecked(std::move(leq));
}

inline FinPoset discrete(std::size_t n) { return FinPoset::unchecked(BoolMatrix::identity(n)); }

inline FinPoset chain(std::size_t n) {
  BoolMatrix leq(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) leq.set(i, j);
  return FinPoset::unchecked(std::move(leq));
}

inline FinPoset terminal_poset() { return discrete(1); }

inline bool is_discrete(const FinPoset& p) { return p.order() == BoolMatrix::identity(p.size()); }

// A monotone map, validated on construction.
class MonotoneMap {
 public:
  MonotoneMap() = default;
  MonotoneMap(FinPoset dom, FinPoset cod, std::vector<std::size_t> assign)
      : dom_(std::move(dom)), cod_(std::move(cod)), assign_(std::move(assign)) {
    if (assign_.size() != dom_.size())
      fail(ErrorCode::ShapeMismatch, "assignment length differs from domain size");
    for (std::size_t v : assign_)
      if (v >= cod_.size()) fail(ErrorCode::ShapeMismatch, "assignment value out of range");
    for (std::size_t i = 0; i < dom_.size(); ++i)
      for (std::size_t j = 0; j < dom_.size(); ++j)
        if (dom_.leq(i, j) && !cod_.leq(assign_[i], assign_[j]))
          fail(ErrorCode::NotMonotone, "order " + std::to_string(i) + " <= " +
                                           std::to_string(j) + " not preserved");
  }

  // Caller guarantees shape and monotonicity.
  static MonotoneMap unchecked(FinPoset dom, FinPoset cod, std::vector<std::size_t> assign) {
    MonotoneMap m;
    m.dom_ = std::move(dom);
    m.cod_ = std::move(cod);
    m.assign_ = std::move(assign);
    return m;
  }

  const FinPoset& dom() const noexcept { return dom_; }
  const FinPoset& cod() const noexcept { return cod_; }
  const std::vector<std::size_t>& assign() const noexcept { return assign_; }
  std::size_t operator()(std::size_t x) const noexcept { return assign_[x]; }

  friend bool operator==(const MonotoneMap& a, const MonotoneMap& b) {
    return a.assign_ == b.assign_ && a.dom_ == b.dom_ && a.cod_ == b.cod_;
  }

 private:
  FinPoset dom_;
  FinPoset cod_;
  std::vector<std::size_t> assign_;
};

struct MapClass {
  bool is_ff = false;
  bool is_so = false;
  bool is_iso = false;
  friend bool operator==(const MapClass&, const MapClass&) = default;
};

inline MapClass classify_map(const MonotoneMap& f) {
  const auto& X = f.dom();
  const auto& Y = f.cod();
  MapClass c;
  c.is_ff = true;
  for (std::size_t i = 0; i < X.size() && c.is_ff; ++i)
    for (std::size_t j = 0; j < X.size(); ++j)
      if (Y.leq(f(i), f(j)) && !X.leq(i, j)) {
        c.is_ff = false;
        break;
      }
  std::vector<bool> hit(Y.size(), false);
  for (std::size_t v : f.assign()) hit[v] = true;
  c.is_so = std::find(hit.begin(), hit.end(), false) == hit.end();
  c.is_iso = c.is_ff && c.is_so;
  return c;
}

inline MonotoneMap identity_map(const FinPoset& X) {
  std::vector<std::size_t> a(X.size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = i;
  return MonotoneMap::unchecked(X, X, std::move(a));
}

inline MonotoneMap constant_map(const FinPoset& X, const FinPoset& Y, std::size_t y) {
  return MonotoneMap(X, Y, std::vector<std::size_t>(X.size(), y));
}

// g ∘ f
inline MonotoneMap compose(const MonotoneMap& g, const MonotoneMap& f) {
  if (!(f.cod() == g.dom())) fail(ErrorCode::DomainMismatch, "maps are not composable");
  std::vector<std::size_t> a(f.dom().size());
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = g(f(i));
  return MonotoneMap::unchecked(f.dom(), g.cod(), std::move(a));
}

// Pointwise order on parallel maps.
inline bool pointwise_leq(const MonotoneMap& f, const MonotoneMap& g) {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod()))
    fail(ErrorCode::DomainMismatch, "maps are not parallel");
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    if (!f.cod().leq(f(i), g(i))) return false;
  return true;
}

}  // namespace exreg
