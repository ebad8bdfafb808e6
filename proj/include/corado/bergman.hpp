#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "corado/bits.hpp"
#include "corado/error.hpp"
#include "corado/ground.hpp"
#include "corado/matroid.hpp"
#include "corado/rado.hpp"

namespace corado {

/// Bergman fan of a loopless matroid, kept combinatorial: the cones are the
/// flags ∅ ≠ F₁ ⊊ ⋯ ⊊ F_t ≠ E of proper nonempty flats (every subchain of a
/// flag is a cone, including the empty flag = the origin), and each flat's
/// ray is its 0/1 indicator vector normalized in ℝ^E/⟨all-ones⟩ to have
/// minimum coordinate 0 and content 1.
class bergman_fan {
 public:
  using flag = std::vector<mask_t>;  // ascending chain of flats

  static bergman_fan of(const matroid& m) {
    if (!m.is_loopless())
      fail(errc::loopy_matroid, "Bergman fans are only defined for loopless matroids");
    std::vector<mask_t> proper;
    mask_t full = m.ground().full_mask();
    for (mask_t f : m.flats())
      if (f != 0 && f != full) proper.push_back(f);

    std::vector<flag> cones;
    flag chain;
    auto grow = [&](auto&& self, std::size_t from) -> void {
      cones.push_back(chain);
      for (std::size_t i = from; i < proper.size(); ++i) {
        if (!chain.empty()) {
          mask_t last = chain.back();
          if (proper[i] == last || !subset_of(last, proper[i])) continue;
        }
        chain.push_back(proper[i]);
        self(self, i + 1);
        chain.pop_back();
      }
    };
    grow(grow, 0);

    std::map<mask_t, std::vector<int>> rays;
    for (mask_t f : proper) rays.emplace(f, indicator(m.ground().size(), f));
    return bergman_fan(m.ground(), std::move(cones), std::move(rays));
  }

  /// Assembles a fan from explicit pieces (used by tests and I/O): cones are
  /// closed under subchains, rays normalized.
  static bergman_fan from_parts(ground_set g, std::vector<flag> cones,
                                std::map<mask_t, std::vector<int>> rays) {
    std::vector<flag> closed;
    for (const flag& c : cones) {
      mask_t sub = 0;
      mask_t cnt = mask_t(1) << c.size();
      for (sub = 0; sub < cnt; ++sub) {
        flag part;
        for (std::size_t i = 0; i < c.size(); ++i)
          if (sub & (mask_t(1) << i)) part.push_back(c[i]);
        closed.push_back(std::move(part));
      }
    }
    for (auto& [f, v] : rays) v = normalize_ray(std::move(v));
    return bergman_fan(std::move(g), std::move(closed), std::move(rays));
  }

  const ground_set& ground() const { return ground_; }
  const std::vector<flag>& cones() const { return cones_; }
  const std::map<mask_t, std::vector<int>>& rays() const { return rays_; }

  /// Cones contained in no other cone.
  std::vector<flag> maximal_cones() const {
    std::vector<flag> out;
    for (const flag& c : cones_) {
      bool maximal = true;
      for (const flag& d : cones_) {
        if (d.size() > c.size() && chain_subset(c, d)) {
          maximal = false;
          break;
        }
      }
      if (maximal) out.push_back(c);
    }
    return out;
  }

  /// Dimension of the largest cone.
  int dimension() const {
    std::size_t best = 0;
    for (const flag& c : cones_) best = std::max(best, c.size());
    return static_cast<int>(best);
  }

  static std::vector<int> normalize_ray(std::vector<int> v) {
    if (v.empty()) return v;
    int mn = *std::min_element(v.begin(), v.end());
    int g = 0;
    for (int& x : v) {
      x -= mn;
      g = std::gcd(g, x);
    }
    if (g > 1)
      for (int& x : v) x /= g;
    return v;
  }

 private:
  bergman_fan(ground_set g, std::vector<flag> cones, std::map<mask_t, std::vector<int>> rays)
      : ground_(std::move(g)), cones_(std::move(cones)), rays_(std::move(rays)) {
    std::sort(cones_.begin(), cones_.end(), [](const flag& a, const flag& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), subset_order{});
    });
    cones_.erase(std::unique(cones_.begin(), cones_.end()), cones_.end());
  }

  static bool chain_subset(const flag& a, const flag& b) {
    for (mask_t f : a)
      if (std::find(b.begin(), b.end(), f) == b.end()) return false;
    return true;
  }

  static std::vector<int> indicator(int n, mask_t f) {
    std::vector<int> v(n, 0);
    for (int b : bits_of(f)) v[b] = 1;
    return v;
  }

  ground_set ground_;
  std::vector<flag> cones_;
  std::map<mask_t, std::vector<int>> rays_;
};

inline bool fans_equal(const bergman_fan& a, const bergman_fan& b) {
  if (a.ground() != b.ground())
    fail(errc::ground_set_mismatch, "fans live on different ground sets");
  return a.cones() == b.cones() && a.rays() == b.rays();
}

/// The stable intersection of a Bergman fan with tropical hyperplanes can
/// vanish: the underlying matroid intersection acquires a loop and no
/// Bergman fan exists.  Vanished is that result, not an error.
struct vanished_t {
  bool operator==(const vanished_t&) const { return true; }
};

using stable_intersection_result = std::variant<bergman_fan, vanished_t>;

/// Bergman fan of M ∧ H_{A₁} ∧ ⋯ ∧ H_{Aₘ}, computed through the Rado-dual
/// construction; Vanished when the intersection has a loop.
inline stable_intersection_result stable_intersection_with_hyperplanes(const matroid& m,
                                                                       const set_system& a) {
  if (!m.is_loopless())
    fail(errc::loopy_matroid, "stable intersection starts from a loopless matroid");
  matroid p = corado(m, a);
  if (!p.is_loopless()) return vanished_t{};
  return bergman_fan::of(p);
}

namespace detail {

/// Independence table of the transversal matroid on E presented by
/// `members`: S independent iff S injectively matches into the members that
/// contain its elements (Hall).  touching[e] = positions containing e.
inline std::vector<char> partial_transversal_table(int n, const std::vector<mask_t>& members) {
  std::vector<mask_t> touching(n, 0);
  for (std::size_t j = 0; j < members.size(); ++j)
    for (int e : bits_of(members[j])) touching[e] |= mask_t(1) << j;
  std::size_t count = std::size_t(1) << n;
  std::vector<char> ok(count, 0);
  std::vector<mask_t> act(count, 0);
  ok[0] = 1;
  for (mask_t s = 1; s < count; ++s) {
    mask_t low = lowest_bit(s);
    act[s] = act[s ^ low] | touching[std::countr_zero(low)];
    bool good = true;
    for (int b : bits_of(s)) {
      if (!ok[s ^ (mask_t(1) << b)]) {
        good = false;
        break;
      }
    }
    ok[s] = good && popcount(act[s]) >= popcount(s);
  }
  return ok;
}

/// Maximum-size rows of an independence table, in canonical subset order so
/// the result compares directly against a matroid's basis list.
inline std::vector<mask_t> bases_of_table(const std::vector<char>& ok) {
  int best = 0;
  for (mask_t s = 0; s < mask_t(ok.size()); ++s)
    if (ok[s]) best = std::max(best, popcount(s));
  std::vector<mask_t> bases;
  for (mask_t s = 0; s < mask_t(ok.size()); ++s)
    if (ok[s] && popcount(s) == best) bases.push_back(s);
  std::sort(bases.begin(), bases.end(), subset_order{});
  return bases;
}

/// True when every subset T of `need` meets enough chosen members:
/// max_T (|T| − #touching members) ≤ slack.  With slack 0 this is Hall's
/// condition for matching all of `need`.
inline bool deficiency_at_most(mask_t need, const std::vector<mask_t>& members, int slack) {
  std::vector<int> elems = bits_of(need);
  int k = static_cast<int>(elems.size());
  for (mask_t t = 1; t < (mask_t(1) << k); ++t) {
    mask_t touched = 0;
    for (int i = 0; i < k; ++i)
      if (t & (mask_t(1) << i))
        for (std::size_t j = 0; j < members.size(); ++j)
          if (members[j] & (mask_t(1) << elems[i])) touched |= mask_t(1) << j;
    if (popcount(t) - popcount(touched) > slack) return false;
  }
  return true;
}

inline void guard_search_size(const matroid& m, bool force) {
  if (!force && m.size() > 8)
    fail(errc::search_too_large,
         "presentation search over " + std::to_string(m.size()) +
             " elements refused; pass force to override");
}

}  // namespace detail

/// Decides whether M is a transversal matroid on its ground set, searching
/// canonically ordered multisets of exactly rank(M) nonempty subsets of the
/// non-loops (rank-many sets always suffice for a transversal presentation).
/// Returns a presenting system when one exists.
inline std::pair<bool, std::optional<set_system>> is_transversal(const matroid& m,
                                                                 bool force = false) {
  detail::guard_search_size(m, force);
  int n = m.size();
  int r = m.rank();
  if (r == 0) {
    // Only the rank-0 matroid is presented by the empty system.
    return {true, set_system(m.ground(), {})};
  }
  // An element sits in some member iff it is matchable as a singleton, so
  // the union of the members of any presentation is exactly the non-loops.
  mask_t nonloops = m.ground().full_mask() & ~m.loops();
  std::vector<mask_t> universe;
  for (mask_t s = 1; s < (mask_t(1) << n); ++s)
    if (subset_of(s, nonloops)) universe.push_back(s);
  std::sort(universe.begin(), universe.end(), subset_order{});

  std::vector<mask_t> circuits = m.circuits();
  const std::vector<mask_t>& bases = m.bases();

  std::vector<mask_t> chosen;
  std::optional<set_system> witness;
  auto dfs = [&](auto&& self, std::size_t from, mask_t covered) -> bool {
    int t = static_cast<int>(chosen.size());
    // A circuit already matchable into the chosen members stays matchable
    // under any extension, so the candidate can never reproduce M.
    for (mask_t c : circuits)
      if (popcount(c) <= t && detail::deficiency_at_most(c, chosen, 0)) return false;
    // Each future member can repair at most one unit of Hall deficiency of a
    // basis, so more than r−t missing units is fatal.
    for (mask_t b : bases)
      if (!detail::deficiency_at_most(b, chosen, r - t)) return false;
    if (t == r) {
      if (covered != nonloops) return false;
      std::vector<char> ok = detail::partial_transversal_table(n, chosen);
      if (detail::bases_of_table(ok) == bases) {
        witness = set_system(m.ground(), chosen);
        return true;
      }
      return false;
    }
    for (std::size_t i = from; i < universe.size(); ++i) {
      chosen.push_back(universe[i]);
      if (self(self, i, covered | universe[i])) return true;
      chosen.pop_back();
    }
    return false;
  };
  bool found = dfs(dfs, 0, 0);
  return {found, std::move(witness)};
}

/// Decides whether M is a strict gammoid, by two independent routes that
/// must agree: (a) the dual is transversal; (b) a direct search for a system
/// A of |E|−rank(M) many sets with corado(free matroid, A) = M, i.e. the
/// Bergman fan of M is a stable intersection of tropical hyperplanes.  The
/// returned witness is the system from route (b).
inline std::pair<bool, std::optional<set_system>> is_strict_gammoid(const matroid& m,
                                                                    bool force = false) {
  if (!m.is_loopless())
    fail(errc::loopy_matroid, "strict gammoids are loopless; the input has a loop");
  detail::guard_search_size(m, force);
  auto [dual_transversal, dual_witness] = is_transversal(m.dual(), force);

  int n = m.size();
  int corank = n - m.rank();
  std::optional<set_system> witness;
  bool direct = false;
  if (corank == 0) {
    direct = true;
    witness = set_system(m.ground(), {});
  } else {
    // Two lossless cuts: a member of size 1 would force a loop into the
    // intersection, and an element avoided by every member comes out a
    // coloop — so members draw from the non-coloops, with at least two
    // elements each, and must jointly cover the non-coloops exactly.
    mask_t must_cover = m.ground().full_mask() & ~m.coloops();
    std::vector<mask_t> universe;
    for (mask_t s = 1; s < (mask_t(1) << n); ++s)
      if (popcount(s) >= 2 && subset_of(s, must_cover)) universe.push_back(s);
    std::sort(universe.begin(), universe.end(), subset_order{});
    matroid free = matroid::free_on(m.ground());
    std::vector<mask_t> chosen;
    auto dfs = [&](auto&& self, std::size_t from, mask_t covered) -> bool {
      if (static_cast<int>(chosen.size()) == corank) {
        if (covered != must_cover) return false;
        set_system a(m.ground(), chosen);
        if (corado(free, a) == m) {
          witness = std::move(a);
          return true;
        }
        return false;
      }
      for (std::size_t i = from; i < universe.size(); ++i) {
        chosen.push_back(universe[i]);
        if (self(self, i, covered | universe[i])) return true;
        chosen.pop_back();
      }
      return false;
    };
    direct = dfs(dfs, 0, 0);
  }

  if (direct != dual_transversal)
    fail(errc::internal_inconsistency,
         "gammoid routes disagree: dual-transversal says " +
             std::string(dual_transversal ? "yes" : "no") + ", direct search says " +
             std::string(direct ? "yes" : "no"));
  return {direct, std::move(witness)};
}

}  // namespace corado
