#pragma once

// Independent brute-force oracles used to pin engine behaviour in tests.
// These deliberately avoid the engine's pruning/certificate machinery.

#include <map>
#include <set>
#include <vector>

#include "alcalc/alcove.hpp"
#include "alcalc/root_datum.hpp"

namespace alcalc::testing {

/// Upward reachability of the covering relation "A -> s_{alpha,n}(A) for
/// n >= k_alpha(A)", restricted to an ambient gallery ball.  closure[a]
/// holds every b reachable from a by chains that stay inside the ball.
inline std::map<Alcove, std::set<Alcove>> order_closure(const RootDatum& d,
                                                        int ambient_radius) {
  std::vector<Alcove> ball = gallery_ball(d, ambient_radius);
  std::set<Alcove> in_ball(ball.begin(), ball.end());
  std::map<Alcove, std::vector<Alcove>> up;
  for (const Alcove& c : ball) {
    for (int i = 0; i < d.num_positive(); ++i) {
      // Crossing one hyperplane changes one coordinate by one, so any target
      // still in the ball has its n within this window.
      Coord k = coord(d, c, i);
      for (Coord n = k; n <= k + 2 * ambient_radius + 2; ++n) {
        Alcove u = left_act(d, reflection_elt(d, i, n), c);
        if (in_ball.count(u)) up[c].push_back(u);
      }
    }
  }
  std::map<Alcove, std::set<Alcove>> closure;
  for (const Alcove& a : ball) {
    std::set<Alcove>& seen = closure[a];
    seen.insert(a);
    std::vector<Alcove> stack{a};
    while (!stack.empty()) {
      Alcove c = stack.back();
      stack.pop_back();
      for (const Alcove& u : up[c])
        if (seen.insert(u).second) stack.push_back(u);
    }
  }
  return closure;
}

} // namespace alcalc::testing
