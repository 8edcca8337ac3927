#pragma once

#include <bit>
#include <cstdint>

// Bitmask subset encoding: element i of the ground set is bit i of a mask_t.

namespace widthlab {

using mask_t = std::uint64_t;

inline constexpr mask_t bit(int i) { return mask_t{1} << i; }

inline constexpr int popcount(mask_t s) { return std::popcount(s); }

inline constexpr bool contains(mask_t s, int i) { return (s >> i) & 1; }

inline constexpr bool subset_of(mask_t a, mask_t b) { return (a & b) == a; }

inline constexpr mask_t full_mask(int m) {
  return m >= 64 ? ~mask_t{0} : (mask_t{1} << m) - 1;
}

// Next submask of `universe` in increasing numeric order; wraps to 0 after
// `universe` itself.
inline constexpr mask_t next_submask(mask_t s, mask_t universe) {
  return (s - universe) & universe;
}

// Gosper's hack: next mask with the same popcount. Caller stops once the
// result exceeds its upper bound.
inline constexpr mask_t next_same_popcount(mask_t s) {
  mask_t c = s & (~s + 1);
  mask_t r = s + c;
  return r | (((s ^ r) >> 2) / c);
}

// Visit all submasks of `universe` (including 0 and universe) ascending.
template <typename F>
void for_each_submask(mask_t universe, F&& fn) {
  mask_t s = 0;
  while (true) {
    fn(s);
    if (s == universe) break;
    s = next_submask(s, universe);
  }
}

// Visit all proper submasks of `t` (excluding t itself, including 0).
template <typename F>
void for_each_proper_submask(mask_t t, F&& fn) {
  mask_t s = 0;
  while (true) {
    if (s == t) break;
    fn(s);
    s = next_submask(s, t);
  }
}

// Visit all size-k subsets of the elements of `universe`, ascending by the
// packed combination pattern (deterministic, not globally mask-ascending).
template <typename F>
void for_each_subset_of_size(mask_t universe, int k, F&& fn) {
  int n = popcount(universe);
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(mask_t{0});
    return;
  }
  int elems[64];
  int idx = 0;
  for (mask_t u = universe; u; u &= u - 1) elems[idx++] = std::countr_zero(u);
  mask_t pattern = full_mask(k);
  mask_t limit = mask_t{1} << n;
  while (pattern < limit) {
    mask_t s = 0;
    for (mask_t p = pattern; p; p &= p - 1) s |= bit(elems[std::countr_zero(p)]);
    fn(s);
    if (pattern == (full_mask(k) << (n - k))) break;
    pattern = next_same_popcount(pattern);
  }
}

// Visit all subsets of `universe` of size 1..max_size, by ascending size.
template <typename F>
void for_each_subset_up_to_size(mask_t universe, int max_size, F&& fn) {
  int n = popcount(universe);
  if (max_size > n) max_size = n;
  for (int k = 1; k <= max_size; ++k) for_each_subset_of_size(universe, k, fn);
}

}  // namespace widthlab
