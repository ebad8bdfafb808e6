#pragma once

#include <algorithm>
#include <random>
#include <vector>

#include "corado/bits.hpp"
#include "corado/ground.hpp"
#include "corado/matroid.hpp"

namespace corado {

/// Exchange-axiom check on a family of equal-cardinality subsets, used by
/// the exhaustive enumerators before any matroid value is built.  The family
/// must be sorted in canonical order.
inline bool is_basis_family(const std::vector<mask_t>& fam) {
  for (std::size_t i = 0; i < fam.size(); ++i) {
    for (std::size_t j = 0; j < fam.size(); ++j) {
      if (i == j) continue;
      mask_t b1 = fam[i], b2 = fam[j];
      for (int e : bits_of(b1 & ~b2)) {
        mask_t base = b1 ^ (mask_t(1) << e);
        bool found = false;
        for (int f : bits_of(b2 & ~b1)) {
          if (std::binary_search(fam.begin(), fam.end(), base | (mask_t(1) << f),
                                 subset_order{})) {
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

/// Visits every matroid on ground {1..n} (every basis family passing the
/// exchange axiom), rank by rank.  Exponential in C(n, rank); intended for
/// n ≤ 6.
template <typename F>
void for_each_matroid(int n, F&& visit) {
  ground_set g = ground_set::numbered(n);
  for (int r = 0; r <= n; ++r) {
    std::vector<mask_t> ksets = k_subsets(n, r);
    std::sort(ksets.begin(), ksets.end(), subset_order{});
    int m = static_cast<int>(ksets.size());
    for (mask_t pick = 1; pick < (mask_t(1) << m); ++pick) {
      std::vector<mask_t> fam;
      for (int i = 0; i < m; ++i)
        if (pick & (mask_t(1) << i)) fam.push_back(ksets[i]);
      if (!is_basis_family(fam)) continue;
      visit(matroid::from_bases_unchecked(g, fam));
    }
  }
}

template <typename F>
void for_each_loopless_matroid(int n, F&& visit) {
  for_each_matroid(n, [&](const matroid& m) {
    if (m.is_loopless()) visit(m);
  });
}

/// Lexicographic order on sorted families, element order canonical.
inline bool family_less(const std::vector<mask_t>& a, const std::vector<mask_t>& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), subset_order{});
}

/// Relabeling-invariant key: the least basis family over all permutations of
/// the bit positions.  Two matroids are isomorphic iff their keys coincide.
inline std::vector<mask_t> iso_canonical_form(const matroid& m) {
  int n = m.ground().size();
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<mask_t> best;
  do {
    std::vector<mask_t> fam;
    fam.reserve(m.bases().size());
    for (mask_t b : m.bases()) {
      mask_t img = 0;
      for (int e : bits_of(b)) img |= mask_t(1) << perm[e];
      fam.push_back(img);
    }
    std::sort(fam.begin(), fam.end(), subset_order{});
    if (best.empty() || family_less(fam, best)) best = std::move(fam);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

/// Draws random basis families on {1..n} until one passes the exchange
/// axiom.  Rank and family size are sampled; the result is validated, so the
/// caller may trust it.
inline matroid random_matroid(int n, std::mt19937& rng) {
  ground_set g = ground_set::numbered(n);
  for (;;) {
    int r = std::uniform_int_distribution<int>(0, n)(rng);
    std::vector<mask_t> ksets = k_subsets(n, r);
    std::shuffle(ksets.begin(), ksets.end(), rng);
    int take = std::uniform_int_distribution<int>(1, static_cast<int>(ksets.size()))(rng);
    std::vector<mask_t> fam(ksets.begin(), ksets.begin() + take);
    std::sort(fam.begin(), fam.end(), subset_order{});
    if (is_basis_family(fam)) return matroid::from_bases_unchecked(g, fam);
  }
}

/// All multisets of `size` many entries drawn from `items` (non-decreasing
/// index sequences).
template <typename F>
void for_each_multiset(const std::vector<mask_t>& items, int size, F&& visit) {
  std::vector<mask_t> chosen;
  auto rec = [&](auto&& self, std::size_t from) -> void {
    if (static_cast<int>(chosen.size()) == size) {
      visit(chosen);
      return;
    }
    for (std::size_t i = from; i < items.size(); ++i) {
      chosen.push_back(items[i]);
      self(self, i);
      chosen.pop_back();
    }
  };
  rec(rec, 0);
}

/// All ordered tuples of `size` many entries from `items`.
template <typename F>
void for_each_tuple(const std::vector<mask_t>& items, int size, F&& visit) {
  std::vector<mask_t> chosen;
  auto rec = [&](auto&& self) -> void {
    if (static_cast<int>(chosen.size()) == size) {
      visit(chosen);
      return;
    }
    for (mask_t it : items) {
      chosen.push_back(it);
      self(self);
      chosen.pop_back();
    }
  };
  rec(rec);
}

/// The nonempty subsets of {0..n-1} in canonical order.
inline std::vector<mask_t> nonempty_subsets(int n) {
  std::vector<mask_t> out;
  for (mask_t s = 1; s < (mask_t(1) << n); ++s) out.push_back(s);
  std::sort(out.begin(), out.end(), subset_order{});
  return out;
}

}  // namespace corado
