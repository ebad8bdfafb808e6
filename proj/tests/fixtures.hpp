#pragma once

// Shared example objects and small helpers for the test suite.

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "corado/corado.hpp"

namespace fixtures {

using corado::ground_set;
using corado::mask_t;
using corado::matroid;
using corado::set_system;

// Rank-4 graphic matroid on seven labeled edges: a triangle {2,3,4} braced
// by edges 1, 5, 6, with edge 7 hanging off one corner (so 7 is a coloop).
inline matroid seven_edge_graphic() {
  return matroid::graphic({"v0", "v1", "v2", "v3", "v4"},
                          {{"v0", "v1", "1"},
                           {"v0", "v2", "2"},
                           {"v0", "v3", "3"},
                           {"v2", "v3", "4"},
                           {"v3", "v1", "5"},
                           {"v1", "v2", "6"},
                           {"v2", "v4", "7"}});
}

// The companion system on its edge labels: A₁ = {2,3,4}, A₂ = {4,6}.
inline set_system two_member_system(const matroid& m) {
  return set_system(m.ground(), {m.ground().mask_of({"2", "3", "4"}),
                                 m.ground().mask_of({"4", "6"})});
}

inline mask_t mask_of(const matroid& m, const std::vector<std::string>& labels) {
  return m.ground().mask_of(labels);
}

// Runs f, which must throw, and hands back the error code for assertions.
inline corado::errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const corado::error& e) {
    return e.code();
  }
  throw std::runtime_error("expected the call to throw");
}

}  // namespace fixtures
