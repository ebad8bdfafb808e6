#pragma once

#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "corado/bits.hpp"
#include "corado/chow.hpp"
#include "corado/enumerate.hpp"
#include "corado/ground.hpp"
#include "corado/matroid.hpp"
#include "corado/ops.hpp"
#include "corado/rado.hpp"

namespace corado {

/// Outcome of an exhaustive sweep: how many instances were checked and, if
/// any failed, a description of the first counterexample (enumeration order
/// is canonical, so reports are reproducible).
struct sweep_report {
  long long instances = 0;
  bool ok = true;
  std::string counterexample;
};

namespace detail {

inline std::string describe_system(const ground_set& g, const std::vector<mask_t>& members) {
  std::string s = "(";
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (i) s += ", ";
    s += g.set_string(members[i]);
  }
  return s + ")";
}

inline std::string describe_matroid(const matroid& m) {
  std::string s = "bases ";
  for (std::size_t i = 0; i < m.bases().size(); ++i) {
    if (i) s += ",";
    s += m.ground().set_string(m.bases()[i]);
  }
  return s;
}

}  // namespace detail

/// Checks corado(M, A) against the iterated intersection
/// M ∧ H_{A₁} ∧ ⋯ ∧ H_{Aₘ} for every matroid (loopless; all exchange-passing
/// basis families) on ≤ max_elements elements and every ordered system of up
/// to max_sets nonempty subsets.
inline sweep_report verify_theorem(int max_elements, int max_sets, bool up_to_iso = false) {
  sweep_report report;
  for (int n = 1; n <= max_elements && report.ok; ++n) {
    std::vector<mask_t> subsets = nonempty_subsets(n);
    std::set<std::vector<mask_t>> seen;
    for_each_loopless_matroid(n, [&](const matroid& m) {
      if (!report.ok) return;
      if (up_to_iso && !seen.insert(iso_canonical_form(m)).second) return;
      for (int k = 0; k <= max_sets && report.ok; ++k) {
        for_each_tuple(subsets, k, [&](const std::vector<mask_t>& members) {
          if (!report.ok) return;
          set_system a(m.ground(), members);
          matroid via_rado = corado(m, a);
          matroid via_meet = m;
          for (mask_t s : members)
            via_meet = matroid_intersection(via_meet, matroid::hyperplane(m.ground(), s));
          ++report.instances;
          if (via_rado != via_meet) {
            report.ok = false;
            report.counterexample = detail::describe_matroid(m) + " with A = " +
                                    detail::describe_system(m.ground(), members);
          }
        });
      }
    });
  }
  return report;
}

/// Checks the three-way equivalence degree(M,A) = 1 ⇔ DHR(M,A) ⇔ for every
/// e an independent transversal avoiding e exists, over all loopless M with
/// |E| ≤ max_elements of rank ≤ 4 and all multisets of rank−1 nonempty
/// subsets.
inline sweep_report verify_dhr(int max_elements, bool up_to_iso = false) {
  sweep_report report;
  for (int n = 1; n <= max_elements && report.ok; ++n) {
    std::vector<mask_t> subsets = nonempty_subsets(n);
    std::set<std::vector<mask_t>> seen;
    for_each_loopless_matroid(n, [&](const matroid& m) {
      if (!report.ok) return;
      if (m.rank() < 1 || m.rank() > 4) return;
      if (up_to_iso && !seen.insert(iso_canonical_form(m)).second) return;
      for_each_multiset(subsets, m.rank() - 1, [&](const std::vector<mask_t>& members) {
        if (!report.ok) return;
        set_system a(m.ground(), members);
        int deg = degree(m, a);
        bool dhr = dhr_check(m, a).first;
        bool avoid_all = true;
        for (int e = 0; e < n && avoid_all; ++e)
          avoid_all = independent_transversal_avoiding(m, a, e).first;
        ++report.instances;
        if ((deg == 1) != dhr || dhr != avoid_all) {
          report.ok = false;
          report.counterexample = detail::describe_matroid(m) + " with A = " +
                                  detail::describe_system(m.ground(), members) + ": degree=" +
                                  std::to_string(deg) + " dhr=" + (dhr ? "true" : "false") +
                                  " avoidance=" + (avoid_all ? "true" : "false");
        }
      });
    });
  }
  return report;
}

namespace detail {

/// Small deterministic corpus of matroids on {1..n}: uniforms, their duals,
/// two-block direct sums, and (globally budgeted) random basis families.
inline std::vector<matroid> right_matroid_corpus(int n, int& random_budget, std::mt19937& rng) {
  std::vector<matroid> out;
  ground_set g = ground_set::numbered(n);
  for (int k = 0; k <= n; ++k) {
    out.push_back(matroid::uniform(k, g));
    out.push_back(out.back().dual());
  }
  for (int a = 1; a < n; ++a) {
    ground_set left(std::vector<std::string>(g.labels().begin(), g.labels().begin() + a));
    ground_set right(std::vector<std::string>(g.labels().begin() + a, g.labels().end()));
    matroid sum = matroid::direct_sum(matroid::uniform((a + 1) / 2, left),
                                      matroid::uniform((n - a) / 2, right));
    out.push_back(sum);
    out.push_back(sum.dual());
  }
  for (int i = 0; i < 3 && random_budget > 0; ++i, --random_budget)
    out.push_back(random_matroid(n, rng));
  return out;
}

}  // namespace detail

/// Rado's theorem as a test: over bipartite graphs (exhaustive while the
/// edge space is small, seeded sampling above that) and a corpus of right
/// matroids, the rank-criterion decision must match an explicit
/// matching-search decision for every left subset.
inline sweep_report verify_rado(int max_left, int max_right, int random_families = 200,
                                unsigned seed = 20260817u) {
  sweep_report report;
  int random_budget = random_families;
  for (int nl = 1; nl <= max_left && report.ok; ++nl) {
    for (int nr = 1; nr <= max_right && report.ok; ++nr) {
      std::mt19937 rng(seed + static_cast<unsigned>(nl * 131 + nr));
      std::vector<std::string> left_labels, right_labels;
      for (int i = 1; i <= nl; ++i) left_labels.push_back("x" + std::to_string(i));
      for (int i = 1; i <= nr; ++i) right_labels.push_back("y" + std::to_string(i));
      ground_set left(left_labels), right(right_labels);
      std::vector<matroid> corpus = detail::right_matroid_corpus(nr, random_budget, rng);
      // Relabel the corpus onto the right part once.
      std::map<std::string, std::string> to_right;
      for (int i = 0; i < nr; ++i) to_right[std::to_string(i + 1)] = right_labels[i];
      for (auto& m : corpus) m = m.relabel(to_right);

      long long edge_space = 1LL << (nl * nr);
      long long graph_count = std::min<long long>(edge_space, 1024);
      bool exhaustive = edge_space <= 1024;
      std::uniform_int_distribution<long long> pick(0, edge_space - 1);
      for (long long gi = 0; gi < graph_count && report.ok; ++gi) {
        long long code = exhaustive ? gi : pick(rng);
        std::vector<mask_t> adj(nl);
        for (int i = 0; i < nl; ++i)
          adj[i] = static_cast<mask_t>((code >> (i * nr)) & ((1LL << nr) - 1));
        bipartite_graph h = bipartite_graph::from_adjacency(left, right, adj);
        for (const matroid& m : corpus) {
          if (!report.ok) break;
          std::vector<char> criterion = rado_independence_table(h, m);
          ++report.instances;
          for (mask_t s = 0; s < (mask_t(1) << nl); ++s) {
            std::vector<mask_t> members;
            for (int b : bits_of(s)) members.push_back(adj[b]);
            bool matched = find_transversal_witness(members, m).has_value();
            if (matched != static_cast<bool>(criterion[s])) {
              report.ok = false;
              report.counterexample =
                  "graph code " + std::to_string(code) + " on " + std::to_string(nl) + "x" +
                  std::to_string(nr) + ", right matroid " + detail::describe_matroid(m) +
                  ", left subset " + left.set_string(s);
              break;
            }
          }
        }
      }
    }
  }
  return report;
}

}  // namespace corado
