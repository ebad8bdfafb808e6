#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corado/bits.hpp"
#include "corado/error.hpp"
#include "corado/ground.hpp"
#include "corado/matroid.hpp"

namespace corado {

/// An ordered multiset of nonempty subsets of a ground set.  Positions are
/// the identity: the i-th member carries the synthetic label "A{i+1}" so a
/// repeated set still contributes two elements downstream (e.g. to U_{m,𝒜}).
class set_system {
 public:
  set_system(ground_set ground, std::vector<mask_t> members)
      : ground_(std::move(ground)), members_(std::move(members)) {
    mask_t full = ground_.full_mask();
    for (std::size_t i = 0; i < members_.size(); ++i) {
      if (members_[i] == 0)
        fail(errc::empty_member, "member A" + std::to_string(i + 1) + " is empty");
      if ((members_[i] & ~full) != 0)
        fail(errc::ground_set_mismatch,
             "member A" + std::to_string(i + 1) + " is not a subset of the ground set");
      labels_.push_back("A" + std::to_string(i + 1));
    }
  }

  const ground_set& ground() const { return ground_; }
  int count() const { return static_cast<int>(members_.size()); }
  mask_t member(int i) const { return members_.at(i); }
  const std::vector<mask_t>& members() const { return members_; }
  const std::string& label(int i) const { return labels_.at(i); }

  /// The synthetic labels A₁…Aₘ as a ground set of their own.
  ground_set label_ground() const { return ground_set(labels_); }

 private:
  ground_set ground_;
  std::vector<mask_t> members_;
  std::vector<std::string> labels_;
};

/// Bipartite graph with label-disjoint parts; adjacency is stored per left
/// vertex as a mask over the right part.
class bipartite_graph {
 public:
  bipartite_graph(ground_set left, ground_set right,
                  const std::vector<std::pair<std::string, std::string>>& edges)
      : left_(std::move(left)), right_(std::move(right)), adj_(left_.size(), 0) {
    check_disjoint();
    for (const auto& [l, r] : edges) adj_[left_.index(l)] |= mask_t(1) << right_.index(r);
  }

  static bipartite_graph from_adjacency(ground_set left, ground_set right,
                                        std::vector<mask_t> adj) {
    return bipartite_graph(std::move(left), std::move(right), std::move(adj), 0);
  }

  const ground_set& left() const { return left_; }
  const ground_set& right() const { return right_; }
  mask_t adjacency(int left_index) const { return adj_.at(left_index); }

  /// Neighborhood of a left subset.
  mask_t neighborhood(mask_t left_subset) const {
    mask_t m = 0;
    for (int b : bits_of(left_subset)) m |= adj_[b];
    return m;
  }

  std::vector<std::pair<std::string, std::string>> edges() const {
    std::vector<std::pair<std::string, std::string>> out;
    for (int i = 0; i < left_.size(); ++i)
      for (int b : bits_of(adj_[i])) out.emplace_back(left_.label(i), right_.label(b));
    return out;
  }

 private:
  bipartite_graph(ground_set left, ground_set right, std::vector<mask_t> adj, int)
      : left_(std::move(left)), right_(std::move(right)), adj_(std::move(adj)) {
    check_disjoint();
    mask_t full = right_.full_mask();
    for (mask_t a : adj_)
      if ((a & ~full) != 0) fail(errc::ground_set_mismatch, "adjacency exceeds the right part");
  }

  void check_disjoint() const {
    for (const auto& l : right_.labels())
      if (left_.contains(l))
        fail(errc::ground_sets_overlap, "'" + l + "' appears on both sides of the bipartition");
  }

  ground_set left_;
  ground_set right_;
  std::vector<mask_t> adj_;
};

/// The auxiliary graph of a set system: left part E, right part Ê ∪ 𝒜, with
/// edges e–ê for every e and e–A for every e ∈ A.
inline bipartite_graph build_G(const ground_set& ground, const set_system& a) {
  if (a.ground() != ground)
    fail(errc::ground_set_mismatch, "set system lives on a different ground set");
  ground_set right = ground_set::concat(ground_set::hat_copy(ground), a.label_ground());
  int n = ground.size();
  std::vector<mask_t> adj(n, 0);
  for (int e = 0; e < n; ++e) {
    adj[e] = mask_t(1) << e;  // ê sits at the same position inside Ê
    for (int j = 0; j < a.count(); ++j)
      if (a.member(j) & (mask_t(1) << e)) adj[e] |= mask_t(1) << (n + j);
  }
  return bipartite_graph::from_adjacency(ground, std::move(right), std::move(adj));
}

/// Searches for an injective choice e_i ∈ member(i) whose image — together
/// with any seed elements — is independent in m, by backtracking over
/// positions.  Returns ground indices per position.
inline std::optional<std::vector<int>> find_transversal_witness(
    const std::vector<mask_t>& members, const matroid& m, mask_t seed = 0) {
  int k = static_cast<int>(members.size());
  std::vector<int> choice(k, -1);
  std::vector<int> order(k);
  for (int i = 0; i < k; ++i) order[i] = i;
  // Scarcer members first shrinks the search tree.
  std::sort(order.begin(), order.end(),
            [&](int x, int y) { return popcount(members[x]) < popcount(members[y]); });
  mask_t used = seed;

  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == k) return true;
    int i = order[depth];
    for (int e : bits_of(members[i] & ~used)) {
      mask_t bit = mask_t(1) << e;
      if (!m.is_independent(used | bit)) continue;
      used |= bit;
      choice[i] = e;
      if (self(self, depth + 1)) return true;
      used &= ~bit;
      choice[i] = -1;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return choice;
}

/// Decides whether the system has a transversal independent in m: true iff
/// rk(∪_{j∈J} X_j) ≥ |J| for every subfamily J (the rank criterion); a
/// witness is then produced by search.  The two must agree — a criterion
/// "yes" without a witness is reported as an internal inconsistency.
inline std::pair<bool, std::optional<std::vector<int>>> has_independent_transversal(
    const set_system& x, const matroid& m) {
  if (x.ground() != m.ground())
    fail(errc::ground_set_mismatch, "system and matroid live on different ground sets");
  int k = x.count();
  std::vector<mask_t> uni(std::size_t(1) << k, 0);
  for (mask_t j = 1; j < (mask_t(1) << k); ++j) {
    uni[j] = uni[j & (j - 1)] | x.member(std::countr_zero(j));
    if (m.rank_of(uni[j]) < popcount(j)) return {false, std::nullopt};
  }
  auto witness = find_transversal_witness(x.members(), m);
  if (!witness)
    fail(errc::internal_inconsistency, "rank criterion admits a transversal but search found none");
  return {true, std::move(witness)};
}

/// A matching of a left subset onto a set independent in m, reported as
/// (left index, right index) pairs in left order, or nullopt if none exists.
inline std::optional<std::vector<std::pair<int, int>>> find_left_matching(
    const bipartite_graph& h, const matroid& m, mask_t left_subset) {
  if (m.ground() != h.right())
    fail(errc::ground_set_mismatch, "matroid must live on the right part of the graph");
  std::vector<int> lefts = bits_of(left_subset);
  std::vector<mask_t> members;
  members.reserve(lefts.size());
  for (int l : lefts) members.push_back(h.adjacency(l));
  auto choice = find_transversal_witness(members, m);
  if (!choice) return std::nullopt;
  std::vector<std::pair<int, int>> out;
  for (std::size_t i = 0; i < lefts.size(); ++i) out.emplace_back(lefts[i], (*choice)[i]);
  return out;
}

/// Independence table of the Rado family over left subsets: I qualifies iff
/// every subfamily of its neighborhoods satisfies the rank criterion in m.
/// Shared by the production constructor and by search loops that only need
/// the table.
inline std::vector<char> rado_independence_table(const bipartite_graph& h, const matroid& m) {
  int n = h.left().size();
  std::size_t count = std::size_t(1) << n;
  std::vector<char> ok(count, 0);
  std::vector<mask_t> nbr(count, 0);
  ok[0] = 1;
  for (mask_t s = 1; s < count; ++s) {
    mask_t low = lowest_bit(s);
    nbr[s] = nbr[s ^ low] | h.adjacency(std::countr_zero(low));
    // All proper subsets appear among the s−e, so checking those plus s
    // itself covers every subfamily.
    bool good = true;
    for (int b : bits_of(s)) {
      if (!ok[s ^ (mask_t(1) << b)]) {
        good = false;
        break;
      }
    }
    ok[s] = good && m.rank_of(nbr[s]) >= popcount(s);
  }
  return ok;
}

/// The Rado matroid R_{H,M} on the left part: independent sets are the left
/// subsets matchable onto a set independent in M.  Decided by the rank
/// criterion; the family is then pushed through the validating constructor
/// and compared back, so an axiom violation or closure mismatch fails loudly
/// instead of producing a silent non-matroid.
inline matroid rado_matroid(const bipartite_graph& h, const matroid& m) {
  if (m.ground() != h.right())
    fail(errc::ground_set_mismatch, "matroid must live on the right part of the graph");
  std::vector<char> ok = rado_independence_table(h, m);
  int best = 0;
  for (mask_t s = 0; s < mask_t(ok.size()); ++s)
    if (ok[s]) best = std::max(best, popcount(s));
  std::vector<mask_t> bases;
  for (mask_t s = 0; s < mask_t(ok.size()); ++s)
    if (ok[s] && popcount(s) == best) bases.push_back(s);
  matroid r = matroid::from_bases(h.left(), std::move(bases));
  for (mask_t s = 0; s < mask_t(ok.size()); ++s)
    if (static_cast<bool>(ok[s]) != r.is_independent(s))
      fail(errc::internal_inconsistency,
           "Rado family is not the independence system of its own maximal members");
  return r;
}

/// The intersection M ∧ H_{A₁} ∧ ⋯ ∧ H_{Aₘ} computed without intersecting:
/// dualize the Rado matroid of the auxiliary graph G(𝒜) over
/// N = M̂* ⊕ U_{m,𝒜}.  With m = 0 this returns M itself.
inline matroid corado(const matroid& m, const set_system& a) {
  if (a.ground() != m.ground())
    fail(errc::ground_set_mismatch, "set system must live on the matroid's ground set");
  ground_set hats = ground_set::hat_copy(m.ground());
  std::map<std::string, std::string> to_hat;
  for (int i = 0; i < m.ground().size(); ++i)
    to_hat[m.ground().label(i)] = hats.label(i);
  matroid n = matroid::direct_sum(m.dual().relabel(to_hat),
                                  matroid::uniform(a.count(), a.label_ground()));
  bipartite_graph g = build_G(m.ground(), a);
  return rado_matroid(g, n).dual();
}

/// Transversal matroid of the system, on the position labels A₁…Aₘ: the Rado
/// matroid of the presentation graph with the free matroid on the right.
inline matroid transversal_matroid(const set_system& x) {
  ground_set left = x.label_ground();
  std::vector<mask_t> adj(x.members().begin(), x.members().end());
  bipartite_graph h = bipartite_graph::from_adjacency(std::move(left), x.ground(), std::move(adj));
  return rado_matroid(h, matroid::free_on(x.ground()));
}

}  // namespace corado
