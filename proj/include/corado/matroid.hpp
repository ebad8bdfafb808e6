#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "corado/bits.hpp"
#include "corado/error.hpp"
#include "corado/ground.hpp"

namespace corado {

/// A matroid stored as its canonical basis family, with precomputed
/// independence and rank tables over all 2^|E| subsets.  Values are immutable;
/// structural equality (same ground labels, same basis family) is matroid
/// equality because the family is always sorted and deduplicated.
class matroid {
 public:
  /// Validated constructor: checks nonemptiness, equal cardinalities, and the
  /// basis exchange axiom (reporting a witness pair on failure).
  static matroid from_bases(ground_set g, std::vector<mask_t> bases) {
    return matroid(std::move(g), std::move(bases), /*validate=*/true);
  }

  /// Unchecked constructor for results that are matroids by construction
  /// (duals, uniforms, rank-formula unions, ...).  Callers must guarantee the
  /// exchange axiom; nothing else in the library re-checks it.
  static matroid from_bases_unchecked(ground_set g, std::vector<mask_t> bases) {
    return matroid(std::move(g), std::move(bases), /*validate=*/false);
  }

  /// U_{k,E}: every k-subset is a basis.
  static matroid uniform(int k, ground_set g) {
    if (k < 0 || k > g.size())
      fail(errc::rank_out_of_range,
           "uniform rank " + std::to_string(k) + " outside 0.." + std::to_string(g.size()));
    auto bs = k_subsets(g.size(), k);
    return from_bases_unchecked(std::move(g), std::move(bs));
  }

  /// Free matroid: everything independent.
  static matroid free_on(ground_set g) {
    int n = g.size();
    return uniform(n, std::move(g));
  }

  /// Graphic matroid: ground set = edge labels, independence = acyclicity,
  /// bases = maximum spanning forests.  Parallel edges and graph loops are
  /// allowed; a graph loop becomes a matroid loop.
  static matroid graphic(const std::vector<std::string>& vertices,
                         const std::vector<std::tuple<std::string, std::string, std::string>>& edges) {
    std::map<std::string, int> vid;
    for (const auto& v : vertices) {
      if (!vid.emplace(v, static_cast<int>(vid.size())).second)
        fail(errc::duplicate_edge_label, "vertex '" + v + "' repeats");
    }
    std::vector<std::string> labels;
    std::vector<std::pair<int, int>> ends;
    for (const auto& [u, v, name] : edges) {
      auto iu = vid.find(u), iv = vid.find(v);
      if (iu == vid.end()) fail(errc::unknown_label, "edge endpoint '" + u + "' is not a vertex");
      if (iv == vid.end()) fail(errc::unknown_label, "edge endpoint '" + v + "' is not a vertex");
      labels.push_back(name);
      ends.emplace_back(iu->second, iv->second);
    }
    ground_set g(labels);  // rejects duplicate edge labels
    int n = g.size();
    int nv = static_cast<int>(vid.size());

    // acyclic[s] via union-find, pruned: s can only be a forest if s minus
    // its lowest edge is one.
    std::vector<char> acyclic(std::size_t(1) << n, 0);
    acyclic[0] = 1;
    std::vector<int> parent(nv);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    int best = 0;
    for (mask_t s = 1; s < (mask_t(1) << n); ++s) {
      if (!acyclic[s & (s - 1)]) continue;
      std::iota(parent.begin(), parent.end(), 0);
      bool ok = true;
      for (int b : bits_of(s)) {
        int ru = find(ends[b].first), rv = find(ends[b].second);
        if (ru == rv) {
          ok = false;
          break;
        }
        parent[ru] = rv;
      }
      acyclic[s] = ok;
      if (ok) best = std::max(best, popcount(s));
    }
    std::vector<mask_t> bs;
    for (mask_t s = 0; s < (mask_t(1) << n); ++s)
      if (acyclic[s] && popcount(s) == best) bs.push_back(s);
    return from_bases_unchecked(std::move(g), std::move(bs));
  }

  /// Corank-1 matroid H_S with bases { E−s : s ∈ S }.
  static matroid hyperplane(ground_set g, mask_t support) {
    if (support == 0) fail(errc::empty_support, "support of a corank-1 matroid must be nonempty");
    mask_t full = g.full_mask();
    if ((support & ~full) != 0)
      fail(errc::ground_set_mismatch, "support is not a subset of the ground set");
    std::vector<mask_t> bs;
    for (int b : bits_of(support)) bs.push_back(full ^ (mask_t(1) << b));
    return from_bases_unchecked(std::move(g), std::move(bs));
  }

  const ground_set& ground() const { return ground_; }
  int size() const { return ground_.size(); }
  int rank() const { return rank_; }
  const std::vector<mask_t>& bases() const { return bases_; }

  bool is_independent(mask_t s) const { return indep_[check_mask(s)] != 0; }
  int rank_of(mask_t s) const { return rk_[check_mask(s)]; }

  std::vector<mask_t> independent_sets() const {
    std::vector<mask_t> out;
    for (mask_t s = 0; s < subset_count(); ++s)
      if (indep_[s]) out.push_back(s);
    canonicalize(out);
    return out;
  }

  /// Minimal dependent sets.
  std::vector<mask_t> circuits() const {
    std::vector<mask_t> out;
    for (mask_t s = 1; s < subset_count(); ++s) {
      if (indep_[s]) continue;
      bool minimal = true;
      for (int b : bits_of(s)) {
        if (!indep_[s ^ (mask_t(1) << b)]) {
          minimal = false;
          break;
        }
      }
      if (minimal) out.push_back(s);
    }
    canonicalize(out);
    return out;
  }

  /// Sets of full rank (i.e. containing a basis).
  std::vector<mask_t> spanning_sets() const {
    std::vector<mask_t> out;
    for (mask_t s = 0; s < subset_count(); ++s)
      if (rk_[s] == rank_) out.push_back(s);
    canonicalize(out);
    return out;
  }

  mask_t closure(mask_t s) const {
    check_mask(s);
    mask_t cl = s;
    int r = rk_[s];
    for (int b = 0; b < ground_.size(); ++b) {
      mask_t e = mask_t(1) << b;
      if ((s & e) == 0 && rk_[s | e] == r) cl |= e;
    }
    return cl;
  }

  bool is_flat(mask_t s) const { return closure(s) == s; }

  /// All flats in canonical order (cardinality first); always contains E.
  std::vector<mask_t> flats() const {
    std::vector<mask_t> out;
    for (mask_t s = 0; s < subset_count(); ++s)
      if (is_flat(s)) out.push_back(s);
    canonicalize(out);
    return out;
  }

  mask_t loops() const { return loops_; }

  mask_t coloops() const {
    mask_t m = ground_.full_mask();
    for (mask_t b : bases_) m &= b;
    return m;
  }

  bool is_loopless() const { return loops_ == 0; }

  /// Bases of the dual are the complements of the bases.
  matroid dual() const {
    mask_t full = ground_.full_mask();
    std::vector<mask_t> bs;
    bs.reserve(bases_.size());
    for (mask_t b : bases_) bs.push_back(full ^ b);
    return from_bases_unchecked(ground_, std::move(bs));
  }

  /// Disjoint union of ground sets; bases are pairwise unions.
  static matroid direct_sum(const matroid& a, const matroid& b) {
    ground_set g = ground_set::concat(a.ground_, b.ground_);
    int shift = a.ground_.size();
    std::vector<mask_t> bs;
    bs.reserve(a.bases_.size() * b.bases_.size());
    for (mask_t ba : a.bases_)
      for (mask_t bb : b.bases_) bs.push_back(ba | (bb << shift));
    return from_bases_unchecked(std::move(g), std::move(bs));
  }

  /// Isomorphic copy along a total injective relabeling of the ground set.
  matroid relabel(const std::map<std::string, std::string>& f) const {
    if (f.size() != static_cast<std::size_t>(ground_.size()))
      fail(errc::not_a_bijection, "relabeling must mention every element exactly once");
    std::vector<std::string> images;
    std::map<std::string, int> seen;
    for (const auto& l : ground_.labels()) {
      auto it = f.find(l);
      if (it == f.end())
        fail(errc::not_a_bijection, "relabeling is missing element '" + l + "'");
      if (!seen.emplace(it->second, 0).second)
        fail(errc::not_a_bijection, "relabeling repeats image '" + it->second + "'");
      images.push_back(it->second);
    }
    return from_bases_unchecked(ground_set(std::move(images)), bases_);
  }

  bool operator==(const matroid& o) const {
    return ground_ == o.ground_ && bases_ == o.bases_;
  }
  bool operator!=(const matroid& o) const { return !(*this == o); }

 private:
  matroid(ground_set g, std::vector<mask_t> bases, bool validate)
      : ground_(std::move(g)), bases_(std::move(bases)) {
    if (bases_.empty()) fail(errc::empty_family, "a matroid needs at least one basis");
    mask_t full = ground_.full_mask();
    for (mask_t b : bases_)
      if ((b & ~full) != 0)
        fail(errc::ground_set_mismatch, "basis uses bits outside the ground set");
    canonicalize(bases_);
    rank_ = popcount(bases_[0]);
    for (mask_t b : bases_)
      if (popcount(b) != rank_)
        fail(errc::unequal_cardinalities,
             "bases " + ground_.set_string(bases_[0]) + " and " + ground_.set_string(b) +
                 " differ in size");
    if (validate) check_exchange();
    build_tables();
  }

  void check_exchange() const {
    for (std::size_t i = 0; i < bases_.size(); ++i) {
      for (std::size_t j = 0; j < bases_.size(); ++j) {
        if (i == j) continue;
        mask_t b1 = bases_[i], b2 = bases_[j];
        mask_t only1 = b1 & ~b2, only2 = b2 & ~b1;
        for (int e : bits_of(only1)) {
          mask_t base = b1 ^ (mask_t(1) << e);
          bool found = false;
          for (int f : bits_of(only2)) {
            if (std::binary_search(bases_.begin(), bases_.end(), base | (mask_t(1) << f),
                                   subset_order{})) {
              found = true;
              break;
            }
          }
          if (!found)
            fail(errc::exchange_axiom_violation,
                 "no exchange for " + ground_.label(e) + " between " + ground_.set_string(b1) +
                     " and " + ground_.set_string(b2));
        }
      }
    }
  }

  void build_tables() {
    int n = ground_.size();
    std::size_t count = std::size_t(1) << n;
    indep_.assign(count, 0);
    for (mask_t b : bases_) indep_[b] = 1;
    // Downward closure: s is independent iff some superset of s is a basis.
    for (int b = 0; b < n; ++b) {
      mask_t bit = mask_t(1) << b;
      for (mask_t s = 0; s < count; ++s)
        if (!(s & bit)) indep_[s] = indep_[s] | indep_[s | bit];
    }
    rk_.assign(count, 0);
    for (mask_t s = 1; s < count; ++s) {
      if (indep_[s]) {
        rk_[s] = static_cast<std::uint8_t>(popcount(s));
      } else {
        std::uint8_t best = 0;
        for (int b : bits_of(s)) best = std::max(best, rk_[s ^ (mask_t(1) << b)]);
        rk_[s] = best;
      }
    }
    loops_ = 0;
    for (int b = 0; b < n; ++b)
      if (!indep_[mask_t(1) << b]) loops_ |= mask_t(1) << b;
  }

  static void canonicalize(std::vector<mask_t>& family) {
    std::sort(family.begin(), family.end(), subset_order{});
    family.erase(std::unique(family.begin(), family.end()), family.end());
  }

  mask_t check_mask(mask_t s) const {
    if ((s & ~ground_.full_mask()) != 0)
      fail(errc::ground_set_mismatch, "subset uses bits outside the ground set");
    return s;
  }

  mask_t subset_count() const { return mask_t(1) << ground_.size(); }

  ground_set ground_;
  std::vector<mask_t> bases_;
  int rank_ = 0;
  mask_t loops_ = 0;
  std::vector<char> indep_;
  std::vector<std::uint8_t> rk_;
};

}  // namespace corado
