#pragma once

#include <string>
#include <vector>

#include "corado/bits.hpp"
#include "corado/error.hpp"
#include "corado/matroid.hpp"

namespace corado {

inline void require_same_ground(const matroid& a, const matroid& b, const char* what) {
  if (a.ground() != b.ground())
    fail(errc::ground_set_mismatch, std::string(what) + " needs both matroids on the same ground set");
}

/// M ∨ N: independent sets are unions I ∪ J of independent sets of the two
/// sides.  Computed through the union rank formula
///   rk(S) = min over T ⊆ S of  rk_M(T) + rk_N(T) + |S − T|
/// rather than by enumerating pairs; the enumeration is kept in the test
/// suite as the oracle for this formula.
inline matroid matroid_union(const matroid& a, const matroid& b) {
  require_same_ground(a, b, "union");
  int n = a.size();
  mask_t count = mask_t(1) << n;
  std::vector<std::uint8_t> rk(count, 0);
  for (mask_t s = 0; s < count; ++s) {
    int best = popcount(s);  // T = ∅ term
    mask_t t = s;
    while (t) {  // remaining nonempty T ⊆ S
      int v = a.rank_of(t) + b.rank_of(t) + popcount(s & ~t);
      if (v < best) best = v;
      t = (t - 1) & s;
    }
    rk[s] = static_cast<std::uint8_t>(best);
  }
  int r = rk[count - 1];
  std::vector<mask_t> bases;
  for (mask_t s = 0; s < count; ++s)
    if (popcount(s) == r && rk[s] == r) bases.push_back(s);
  return matroid::from_bases_unchecked(a.ground(), std::move(bases));
}

/// M ∧ N = (M* ∨ N*)*.  Equivalently the matroid whose spanning sets are the
/// pairwise intersections of spanning sets of M and N; that reading is
/// verified in the tests, the dual-union identity is the production path.
inline matroid matroid_intersection(const matroid& a, const matroid& b) {
  require_same_ground(a, b, "intersection");
  return matroid_union(a.dual(), b.dual()).dual();
}

/// Principal truncation at F: bases are B − f over bases B meeting F and
/// f ∈ B ∩ F.  The family only depends on the closure of F, so any F with a
/// non-loop in it is accepted.  Rank drops by exactly one; every element of a
/// rank-1 F becomes a loop of the result.
inline matroid principal_truncation(const matroid& m, mask_t f) {
  if (f == 0) fail(errc::empty_flat, "cannot truncate at the empty set");
  if (m.rank_of(f) == 0)
    fail(errc::rank_zero_flat, "truncation set " + m.ground().set_string(f) + " contains only loops");
  std::vector<mask_t> bases;
  for (mask_t b : m.bases())
    for (int e : bits_of(b & f)) bases.push_back(b ^ (mask_t(1) << e));
  return matroid::from_bases_unchecked(m.ground(), std::move(bases));
}

}  // namespace corado
