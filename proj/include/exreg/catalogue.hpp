#pragma once

// Posets up to isomorphism for small n, by canonical-form enumeration.

#include <exreg/poset.hpp>

#include <algorithm>
#include <array>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <set>
#include <vector>

namespace exreg {

inline constexpr std::size_t catalogue_max = 6;

namespace detail {

inline std::uint64_t order_bits(const FinPoset& P, const std::vector<std::size_t>& perm) {
  const std::size_t n = P.size();
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (P.leq(i, j)) key |= std::uint64_t{1} << (perm[i] * n + perm[j]);
  return key;
}

}  // namespace detail

// Smallest order bitmask over all relabellings; equal keys iff isomorphic.
inline std::uint64_t canonical_key(const FinPoset& P) {
  if (P.size() > catalogue_max) fail(ErrorCode::ShapeMismatch, "canonical form limited to 6 elements");
  std::vector<std::size_t> perm(P.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::uint64_t best = ~std::uint64_t{0};
  do best = std::min(best, detail::order_bits(P, perm));
  while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

inline FinPoset poset_from_key(std::size_t n, std::uint64_t key) {
  BoolMatrix leq(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if ((key >> (i * n + j)) & 1U) leq.set(i, j);
  return FinPoset::unchecked(std::move(leq));
}

namespace detail {

// Every poset has a linear extension, so it suffices to try strict orders
// contained in i < j.
inline std::vector<FinPoset> build_catalogue(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  std::set<std::uint64_t> keys;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    BoolMatrix leq = BoolMatrix::identity(n);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if ((mask >> s) & 1U) leq.set(slots[s].first, slots[s].second);
    if (!leq.product(leq).subset_of(leq)) continue;
    keys.insert(canonical_key(FinPoset::unchecked(std::move(leq))));
  }
  std::vector<FinPoset> out;
  for (std::uint64_t k : keys) out.push_back(poset_from_key(n, k));
  return out;
}

}  // namespace detail

// One representative per isomorphism class of n-element posets, computed
// once per n and then shared.
inline const std::vector<FinPoset>& poset_catalogue(std::size_t n) {
  if (n > catalogue_max) fail(ErrorCode::ShapeMismatch, "catalogue limited to 6 elements");
  static std::array<std::once_flag, catalogue_max + 1> flags;
  static std::array<std::vector<FinPoset>, catalogue_max + 1> cache;
  std::call_once(flags[n], [n] { cache[n] = detail::build_catalogue(n); });
  return cache[n];
}

inline std::vector<FinPoset> posets_up_to(std::size_t bound) {
  std::vector<FinPoset> out;
  for (std::size_t n = 0; n <= bound; ++n) {
    const auto& c = poset_catalogue(n);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

}  // namespace exreg
