#pragma once

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "corado/bits.hpp"
#include "corado/error.hpp"

namespace corado {

/// Ordered set of element labels.  Bit i of a mask_t refers to labels()[i].
///
/// Sizes are capped twice: a configurable soft cap (default 16) guards user
/// input, and a hard ceiling of 24 bounds every table the library allocates.
/// Library-internal constructions (concat, hat_copy) may exceed the soft cap
/// because derived ground sets legitimately outgrow their inputs.
class ground_set {
 public:
  static constexpr int hard_cap = 24;

  static int max_size() { return soft_cap_(); }

  static void set_max_size(int n) {
    if (n < 1 || n > hard_cap)
      fail(errc::ground_too_large,
           "ground size cap must be between 1 and " + std::to_string(hard_cap));
    soft_cap_() = n;
  }

  ground_set() = default;

  explicit ground_set(std::vector<std::string> labels)
      : ground_set(std::move(labels), false) {}

  /// Labels "1".."n".
  static ground_set numbered(int n) {
    std::vector<std::string> ls;
    ls.reserve(n > 0 ? n : 0);
    for (int i = 1; i <= n; ++i) ls.push_back(std::to_string(i));
    return ground_set(std::move(ls));
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int i) const { return labels_.at(i); }

  bool contains(const std::string& l) const { return index_.count(l) != 0; }

  int index(const std::string& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) fail(errc::unknown_label, "no element named '" + l + "'");
    return it->second;
  }

  mask_t full_mask() const {
    return size() == 0 ? 0 : (size() >= 32 ? ~mask_t(0) : (mask_t(1) << size()) - 1);
  }

  mask_t mask_of(const std::vector<std::string>& ls) const {
    mask_t m = 0;
    for (const auto& l : ls) m |= mask_t(1) << index(l);
    return m;
  }

  std::vector<std::string> labels_of(mask_t m) const {
    std::vector<std::string> out;
    for (int b : bits_of(m)) out.push_back(label(b));
    return out;
  }

  /// "{1,3,5}" rendering for messages and text output.
  std::string set_string(mask_t m) const {
    std::string s = "{";
    bool first = true;
    for (int b : bits_of(m)) {
      if (!first) s += ",";
      s += label(b);
      first = false;
    }
    return s + "}";
  }

  bool operator==(const ground_set& o) const { return labels_ == o.labels_; }
  bool operator!=(const ground_set& o) const { return !(*this == o); }

  /// Disjoint concatenation; keeps each side's label order.
  static ground_set concat(const ground_set& a, const ground_set& b) {
    for (const auto& l : b.labels_)
      if (a.contains(l))
        fail(errc::ground_sets_overlap, "label '" + l + "' appears on both sides");
    std::vector<std::string> ls = a.labels_;
    ls.insert(ls.end(), b.labels_.begin(), b.labels_.end());
    return ground_set(std::move(ls), true);
  }

  /// Parallel copy with '^' appended to every label.
  static ground_set hat_copy(const ground_set& g) {
    std::vector<std::string> ls;
    ls.reserve(g.labels_.size());
    for (const auto& l : g.labels_) ls.push_back(l + "^");
    return ground_set(std::move(ls), true);
  }

 private:
  ground_set(std::vector<std::string> labels, bool internal)
      : labels_(std::move(labels)) {
    int cap = internal ? hard_cap : std::min(soft_cap_(), hard_cap);
    if (static_cast<int>(labels_.size()) > cap)
      fail(errc::ground_too_large, std::to_string(labels_.size()) +
                                       " elements exceeds the cap of " + std::to_string(cap));
    for (int i = 0; i < static_cast<int>(labels_.size()); ++i) {
      if (labels_[i].empty()) fail(errc::unknown_label, "empty element label");
      if (!index_.emplace(labels_[i], i).second)
        fail(errc::duplicate_edge_label, "label '" + labels_[i] + "' repeats");
    }
  }

  static int& soft_cap_() {
    static int cap = 16;
    return cap;
  }

  std::vector<std::string> labels_;
  std::map<std::string, int> index_;
};

}  // namespace corado
