#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "corado/bits.hpp"
#include "corado/error.hpp"
#include "corado/matroid.hpp"
#include "corado/ops.hpp"
#include "corado/rado.hpp"

namespace corado {

/// A monomial h_{F₁}^{a₁} ⋯ h_{F_k}^{a_k} in the simplicial generators of a
/// matroid's Chow ring: a strictly increasing chain of nonempty flats with
/// exponents confined to the rank gaps, 1 ≤ aᵢ < rk(Fᵢ) − rk(Fᵢ₋₁).  The top
/// flat may be E — the defining formula excludes only ∅.
class simplicial_monomial {
 public:
  simplicial_monomial(const matroid& m, std::vector<mask_t> flats, std::vector<int> exponents)
      : flats_(std::move(flats)), exponents_(std::move(exponents)) {
    if (flats_.size() != exponents_.size())
      fail(errc::validation_failed, "one exponent per flat required");
    int prev_rank = 0;
    mask_t prev = 0;
    for (std::size_t i = 0; i < flats_.size(); ++i) {
      mask_t f = flats_[i];
      if (f == 0) fail(errc::empty_flat, "monomial flats must be nonempty");
      if (!m.is_flat(f))
        fail(errc::validation_failed, m.ground().set_string(f) + " is not a flat");
      if (i > 0 && !(subset_of(prev, f) && prev != f))
        fail(errc::validation_failed, "flats must form a strictly increasing chain");
      int gap = m.rank_of(f) - prev_rank;
      if (exponents_[i] < 1 || exponents_[i] >= gap)
        fail(errc::validation_failed,
             "exponent " + std::to_string(exponents_[i]) + " outside 1.." +
                 std::to_string(gap - 1) + " for flat " + m.ground().set_string(f));
      prev = f;
      prev_rank = m.rank_of(f);
    }
  }

  const std::vector<mask_t>& flats() const { return flats_; }
  const std::vector<int>& exponents() const { return exponents_; }

  int degree() const {
    int d = 0;
    for (int a : exponents_) d += a;
    return d;
  }

  /// The multiset with aᵢ copies of Fᵢ, as a set system on m's ground set.
  set_system expand(const matroid& m) const {
    std::vector<mask_t> members;
    for (std::size_t i = 0; i < flats_.size(); ++i)
      for (int c = 0; c < exponents_[i]; ++c) members.push_back(flats_[i]);
    return set_system(m.ground(), std::move(members));
  }

  bool operator==(const simplicial_monomial& o) const {
    return flats_ == o.flats_ && exponents_ == o.exponents_;
  }

 private:
  std::vector<mask_t> flats_;
  std::vector<int> exponents_;
};

/// A Bergman class is either Zero or (the class of) a loopless matroid.
class bergman_class {
 public:
  static bergman_class zero() { return bergman_class(); }

  static bergman_class of(matroid m) {
    if (!m.is_loopless())
      fail(errc::loopy_matroid, "only loopless matroids carry a Bergman class");
    bergman_class c;
    c.value_ = std::move(m);
    return c;
  }

  bool is_zero() const { return !value_.has_value(); }

  const matroid& value() const {
    if (!value_) fail(errc::internal_inconsistency, "the zero class has no matroid");
    return *value_;
  }

  bool operator==(const bergman_class& o) const {
    if (is_zero() || o.is_zero()) return is_zero() == o.is_zero();
    return *value_ == *o.value_;
  }

 private:
  bergman_class() = default;
  std::optional<matroid> value_;
};

/// The product h_{A₁}⋯h_{Aₘ} as a Bergman class: the coRado matroid when it
/// is loopless of the expected rank rank(M) − m, and Zero otherwise (the
/// standard vanishing convention; an over-intersected product collapses).
inline bergman_class product_class(const matroid& m, const set_system& a) {
  if (!m.is_loopless()) fail(errc::loopy_input, "products of generators need a loopless matroid");
  matroid p = corado(m, a);
  if (!p.is_loopless() || p.rank() != m.rank() - a.count()) return bergman_class::zero();
  return bergman_class::of(std::move(p));
}

/// All degree-c monomials in the simplicial generators, in the order induced
/// by extending chains canonically (each step: next flat in canonical order,
/// then ascending exponent).  c = 0 gives the single empty monomial.
inline std::vector<simplicial_monomial> monomial_basis(const matroid& m, int c) {
  if (!m.is_loopless()) fail(errc::loopy_input, "the monomial basis needs a loopless matroid");
  if (c < 0) fail(errc::rank_out_of_range, "degree must be non-negative");
  std::vector<mask_t> flats;
  for (mask_t f : m.flats())
    if (f != 0) flats.push_back(f);

  std::vector<simplicial_monomial> out;
  std::vector<mask_t> chain;
  std::vector<int> exps;
  auto grow = [&](auto&& self, std::size_t from, int last_rank, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(m, chain, exps);
      return;
    }
    for (std::size_t i = from; i < flats.size(); ++i) {
      mask_t f = flats[i];
      if (!chain.empty() && (f == chain.back() || !subset_of(chain.back(), f))) continue;
      int gap = m.rank_of(f) - last_rank;
      for (int a = 1; a < gap && a <= remaining; ++a) {
        chain.push_back(f);
        exps.push_back(a);
        self(self, i + 1, m.rank_of(f), remaining - a);
        chain.pop_back();
        exps.pop_back();
      }
    }
  };
  grow(grow, 0, 0, c);
  return out;
}

/// The matroid of h_{F₁}^{a₁}⋯h_{F_k}^{a_k}: the coRado construction over
/// the expanded multiset.  For monomials of degree ≤ rank−1 the result is a
/// loopless matroid of rank rank(M) − degree; anything else indicates a bug
/// and fails loudly.
inline matroid relative_nested_quotient(const matroid& m, const simplicial_monomial& mono) {
  if (!m.is_loopless()) fail(errc::loopy_input, "nested quotients need a loopless matroid");
  int c = mono.degree();
  if (c > m.rank() - 1)
    fail(errc::degree_too_large, "degree " + std::to_string(c) + " exceeds rank(M) − 1 = " +
                                     std::to_string(m.rank() - 1));
  matroid q = corado(m, mono.expand(m));
  if (!q.is_loopless() || q.rank() != m.rank() - c)
    fail(errc::internal_inconsistency,
         "nested quotient is not loopless of rank " + std::to_string(m.rank() - c));
  return q;
}

/// Dragon-Hall-Rado condition: rk(∪_{j∈J} A_j) ≥ |J| + 1 for every nonempty
/// subfamily J.  On failure the first failing J in (cardinality, canonical)
/// order — a minimal witness — is returned as a mask over positions 0..m−1.
inline std::pair<bool, std::optional<mask_t>> dhr_check(const matroid& m, const set_system& a) {
  if (a.ground() != m.ground())
    fail(errc::ground_set_mismatch, "system and matroid live on different ground sets");
  int k = a.count();
  std::vector<mask_t> uni(std::size_t(1) << k, 0);
  for (mask_t j = 1; j < (mask_t(1) << k); ++j)
    uni[j] = uni[j & (j - 1)] | a.member(std::countr_zero(j));
  for (int size = 1; size <= k; ++size) {
    std::vector<mask_t> js = k_subsets(k, size);
    std::sort(js.begin(), js.end(), subset_order{});
    for (mask_t j : js)
      if (m.rank_of(uni[j]) < size + 1) return {false, j};
  }
  return {true, std::nullopt};
}

/// Degree of the top-dimensional product h_{A₁}⋯h_{A_d} on a rank-(d+1)
/// matroid: 1 when the iterated intersection M ∧ H_{A₁} ∧ ⋯ ∧ H_{A_d}
/// collapses to U_{1,E}, else 0.
inline int degree(const matroid& m, const set_system& a) {
  if (!m.is_loopless()) fail(errc::loopy_input, "degree needs a loopless matroid");
  if (a.count() != m.rank() - 1)
    fail(errc::rank_mismatch, "need exactly rank(M) − 1 = " + std::to_string(m.rank() - 1) +
                                  " members, got " + std::to_string(a.count()));
  matroid p = m;
  for (int i = 0; i < a.count(); ++i)
    p = matroid_intersection(p, matroid::hyperplane(m.ground(), a.member(i)));
  return p == matroid::uniform(1, m.ground()) ? 1 : 0;
}

/// Is there a transversal of A that avoids e and stays independent in M even
/// together with e itself?  (Equivalently: an independent transversal of the
/// e-deleted members in the contraction of M by e.  Requiring independence of
/// the picks alone would be strictly weaker — a parallel copy of e could stand
/// in for it — and would break the equivalence with the union-rank condition.)
/// Realized by the rank criterion rk(∪_{j∈J}(A_j − e) ∪ e) ≥ |J| + 1, with a
/// backtracking search seeded at e for the witness.
inline std::pair<bool, std::optional<std::vector<int>>> independent_transversal_avoiding(
    const matroid& m, const set_system& a, int e) {
  if (e < 0 || e >= m.ground().size()) fail(errc::unknown_label, "element index out of range");
  mask_t bit = mask_t(1) << e;
  if (m.rank_of(bit) == 0) return {false, std::nullopt};  // a loop joins no independent set
  std::vector<mask_t> restricted;
  for (mask_t member : a.members()) {
    if ((member & ~bit) == 0) return {false, std::nullopt};
    restricted.push_back(member & ~bit);
  }
  int k = a.count();
  std::vector<mask_t> uni(std::size_t(1) << k, bit);
  for (mask_t j = 1; j < (mask_t(1) << k); ++j) {
    uni[j] = uni[j & (j - 1)] | restricted[std::countr_zero(j)];
    if (m.rank_of(uni[j]) < popcount(j) + 1) return {false, std::nullopt};
  }
  auto witness = find_transversal_witness(restricted, m, bit);
  if (!witness)
    fail(errc::internal_inconsistency, "rank criterion admits a transversal but search found none");
  return {true, std::move(witness)};
}

}  // namespace corado
