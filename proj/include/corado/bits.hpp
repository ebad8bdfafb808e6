#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace corado {

/// Subsets of a ground set are bitmasks; bit i corresponds to the i-th label.
using mask_t = std::uint32_t;

inline int popcount(mask_t m) { return std::popcount(m); }

inline bool subset_of(mask_t a, mask_t b) { return (a & ~b) == 0; }

inline mask_t lowest_bit(mask_t m) { return m & (~m + 1); }

/// Canonical subset order: first by cardinality, then the set owning the
/// lowest element in the symmetric difference comes first.  With bit i
/// standing for the i-th label in ground-set order this sorts {0} before
/// {1}, {0,1} before {0,2} before {1,2}, matching a cardinality-then-lex
/// reading of the label sequences.
inline bool subset_less(mask_t a, mask_t b) {
  int pa = popcount(a), pb = popcount(b);
  if (pa != pb) return pa < pb;
  if (a == b) return false;
  mask_t d = lowest_bit(a ^ b);
  return (a & d) != 0;
}

struct subset_order {
  bool operator()(mask_t a, mask_t b) const { return subset_less(a, b); }
};

/// Visits every subset of `mask`, including 0 and mask itself.
template <typename F>
void for_each_subset(mask_t mask, F&& visit) {
  mask_t s = mask;
  while (true) {
    visit(s);
    if (s == 0) break;
    s = (s - 1) & mask;
  }
}

/// All k-element subsets of {0,..,n-1} as masks, ascending numerically
/// (Gosper's hack).
inline std::vector<mask_t> k_subsets(int n, int k) {
  std::vector<mask_t> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  mask_t s = (mask_t(1) << k) - 1;
  mask_t limit = (n >= 32) ? ~mask_t(0) : ((mask_t(1) << n) - 1);
  while (s <= limit) {
    out.push_back(s);
    mask_t c = s & (~s + 1);
    mask_t r = s + c;
    if (r > limit || r < s) break;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

/// Elements of a mask as bit indices, ascending.
inline std::vector<int> bits_of(mask_t m) {
  std::vector<int> out;
  while (m) {
    int b = std::countr_zero(m);
    out.push_back(b);
    m &= m - 1;
  }
  return out;
}

}  // namespace corado
