#include "alcalc/alcove.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <set>
#include <sstream>

#include "alcalc/errors.hpp"

namespace alcalc {

std::vector<Coord> coords(const RootDatum& d, const Alcove& a) {
  std::vector<Coord> k(d.num_positive());
  for (int i = 0; i < d.num_positive(); ++i) k[i] = coord(d, a, i);
  return k;
}

Coord coord(const RootDatum& d, const Alcove& a, int i) {
  // k_alpha(w(A_fund) + mu) = [w^{-1} alpha > 0] + <mu, alpha^vee>.
  int winv = d.w_inv(a.w);
  bool pos = d.weyl()[winv].pos_image[i].second > 0;
  Vec2 mu_x = d.root_to_x(a.mu);
  return (pos ? 1 : 0) + RootDatum::pair(mu_x, d.alpha(i).covec);
}

std::optional<Alcove> from_coords(const RootDatum& d, const std::vector<Coord>& k) {
  if (static_cast<int>(k.size()) != d.num_positive()) return std::nullopt;
  for (int w = 0; w < d.weyl_order(); ++w) {
    int winv = d.w_inv(w);
    Vec2 t{};
    for (int i = 0; i < d.rank(); ++i) {
      int s = d.simple(i);
      bool pos = d.weyl()[winv].pos_image[s].second > 0;
      t[i] = k[s] - (pos ? 1 : 0);
    }
    Vec2 mu;
    if (!d.solve_root_coords(t, mu)) continue;
    Alcove a{w, mu};
    if (coords(d, a) == k) return a;
  }
  return std::nullopt;
}

std::string alcove_str(const RootDatum& d, const Alcove& a) {
  std::ostringstream os;
  os << "[";
  auto k = coords(d, a);
  for (size_t i = 0; i < k.size(); ++i) os << (i ? "," : "") << k[i];
  os << "]";
  return os.str();
}

AffineElt aff_of(const Alcove& a) { return {a.w, a.mu}; }

AffineElt aff_mul(const RootDatum& d, const AffineElt& x, const AffineElt& y) {
  // (x.w, x.mu)(y.w, y.mu): p -> x.w y.w (p) + x.w(y.mu) + x.mu.
  Vec2 m = d.act_root(x.w, y.mu);
  return {d.w_mul(x.w, y.w), {x.mu[0] + m[0], x.mu[1] + m[1]}};
}

AffineElt aff_inv(const RootDatum& d, const AffineElt& x) {
  int wi = d.w_inv(x.w);
  Vec2 m = d.act_root(wi, x.mu);
  return {wi, {-m[0], -m[1]}};
}

AffineElt reflection_elt(const RootDatum& d, int i, Coord n) {
  // s_{alpha,n}: p -> s_alpha(p) + n*alpha.
  const Root& r = d.alpha(i);
  return {d.reflection(i), {n * r.in_simple[0], n * r.in_simple[1]}};
}

Alcove left_act(const RootDatum& d, const AffineElt& x, const Alcove& a) {
  AffineElt r = aff_mul(d, x, aff_of(a));
  return {r.w, r.mu};
}

Alcove right_act(const RootDatum& d, const Alcove& a, int face) {
  const Face& f = d.faces()[face];
  AffineElt sigma = reflection_elt(d, f.root, f.level);
  AffineElt r = aff_mul(d, aff_of(a), sigma);
  return {r.w, r.mu};
}

Alcove right_act_word(const RootDatum& d, Alcove a, const std::vector<int>& word) {
  for (int s : word) a = right_act(d, a, s);
  return a;
}

Alcove translate(const RootDatum& d, const Alcove& a, const Vec2& mu) {
  (void)d;
  return {a.w, {a.mu[0] + mu[0], a.mu[1] + mu[1]}};
}

Alcove up_alcove(const RootDatum& d, int i, const Alcove& a) {
  return left_act(d, reflection_elt(d, i, coord(d, a, i)), a);
}

Alcove down_alcove(const RootDatum& d, int i, const Alcove& a) {
  return left_act(d, reflection_elt(d, i, coord(d, a, i) - 1), a);
}

Coord dist(const RootDatum& d, const Alcove& a, const Alcove& b) {
  Coord s = 0;
  for (int i = 0; i < d.num_positive(); ++i) s += coord(d, b, i) - coord(d, a, i);
  return s;
}

Coord length(const RootDatum& d, const Alcove& a) {
  return dist(d, fundamental_alcove, a);
}

Coord separation(const RootDatum& d, const Alcove& a, const Alcove& b) {
  Coord s = 0;
  for (int i = 0; i < d.num_positive(); ++i) {
    Coord t = coord(d, b, i) - coord(d, a, i);
    s += t < 0 ? -t : t;
  }
  return s;
}

Vec2 interior_point_scaled(const RootDatum& d, const Alcove& a) {
  Vec2 p = d.act(a.w, d.p0_scaled());
  Vec2 mu_x = d.root_to_x(a.mu);
  return {p[0] + d.p0_den() * mu_x[0], p[1] + d.p0_den() * mu_x[1]};
}

bool in_positive_cone(const RootDatum& d, const Vec2& v) {
  const Vec2 a0 = d.alpha(d.simple(0)).vec;
  if (d.rank() == 1) {
    // Everything lives on the line spanned by alpha.
    if (a0[1] == 0 && v[1] != 0) return false;
    return v[0] * a0[0] >= 0;
  }
  const Vec2 a1 = d.alpha(d.simple(1)).vec;
  Coord det = a0[0] * a1[1] - a0[1] * a1[0];
  Coord c0 = v[0] * a1[1] - v[1] * a1[0];
  Coord c1 = a0[0] * v[1] - a0[1] * v[0];
  if (det < 0) { c0 = -c0; c1 = -c1; }
  return c0 >= 0 && c1 >= 0;
}

namespace {

/// Upward BFS from `a`, keeping only alcoves C with pt(b) - pt(C) in the
/// positive cone.  Visits exactly the candidates for chains from a to b.
std::vector<Alcove> cone_interval_bfs(const RootDatum& d, const Alcove& a, const Alcove& b) {
  Vec2 ptb = interior_point_scaled(d, b);
  auto below_b = [&](const Alcove& c) {
    Vec2 ptc = interior_point_scaled(d, c);
    return in_positive_cone(d, {ptb[0] - ptc[0], ptb[1] - ptc[1]});
  };
  std::vector<Alcove> out;
  if (!below_b(a)) return out;
  std::set<Alcove> seen{a};
  std::deque<Alcove> q{a};
  while (!q.empty()) {
    Alcove c = q.front();
    q.pop_front();
    out.push_back(c);
    for (int i = 0; i < d.num_positive(); ++i) {
      // Up-steps across every alpha-hyperplane above c.  The prune predicate
      // is antitone in n (the reflected point moves up by positive multiples
      // of alpha), so the feasible n form a prefix and we may stop at the
      // first failure.
      for (Coord n = coord(d, c, i);; ++n) {
        Alcove u = left_act(d, reflection_elt(d, i, n), c);
        if (!below_b(u)) break;
        if (seen.insert(u).second) q.push_back(u);
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

} // namespace

bool leq(const RootDatum& d, const Alcove& a, const Alcove& b) {
  if (a == b) return true;
  auto inter = cone_interval_bfs(d, a, b);
  return std::binary_search(inter.begin(), inter.end(), b);
}

std::vector<Alcove> interval(const RootDatum& d, const Alcove& a, const Alcove& b) {
  std::vector<Alcove> out;
  for (const Alcove& c : cone_interval_bfs(d, a, b))
    if (leq(d, c, b)) out.push_back(c);
  return out;
}

Vec2 box_of(const RootDatum& d, const Alcove& a) {
  Vec2 lam{};
  for (int i = 0; i < d.rank(); ++i) lam[i] = coord(d, a, d.simple(i));
  return lam;
}

Coord lambda_pair(const RootDatum& d, const Vec2& lambda, int i) {
  const Vec2& m = d.alpha(i).covec_in_simple;
  return m[0] * lambda[0] + m[1] * lambda[1];
}

std::vector<Alcove> box_alcoves(const RootDatum& d, const Vec2& lambda) {
  std::set<Alcove> out;
  for (int w = 0; w < d.weyl_order(); ++w) {
    int winv = d.w_inv(w);
    Vec2 t{};
    for (int i = 0; i < d.rank(); ++i) {
      bool pos = d.weyl()[winv].pos_image[d.simple(i)].second > 0;
      t[i] = lambda[i] - (pos ? 1 : 0);
    }
    Vec2 mu;
    if (d.solve_root_coords(t, mu)) out.insert(Alcove{w, mu});
  }
  return {out.begin(), out.end()};
}

Alcove box_max(const RootDatum& d, const Vec2& lambda) {
  auto box = box_alcoves(d, lambda);
  assert(!box.empty());
  for (const Alcove& cand : box) {
    bool is_max = true;
    for (const Alcove& c : box)
      if (!leq(d, c, cand)) { is_max = false; break; }
    if (is_max) return cand;
  }
  assert(false && "box has no maximum in the generic order");
  return box.front();
}

std::vector<Alcove> wlambda_orbit(const RootDatum& d, const Vec2& lambda) {
  Alcove amax = box_max(d, lambda);
  std::set<Alcove> orbit;
  for (int w = 0; w < d.weyl_order(); ++w) {
    // Stabilizer element (w, lambda - w(lambda)); the translation part is
    // integral in the root lattice for every integral lambda.
    Vec2 t{};
    for (int i = 0; i < d.rank(); ++i) {
      auto [j, sign] = d.weyl()[d.w_inv(w)].pos_image[d.simple(i)];
      t[i] = lambda[i] - sign * lambda_pair(d, lambda, j);
    }
    Vec2 mu;
    bool ok = d.solve_root_coords(t, mu);
    assert(ok && "lambda - w(lambda) escaped the root lattice");
    if (!ok) continue;
    orbit.insert(left_act(d, AffineElt{w, mu}, amax));
  }
  assert(static_cast<int>(orbit.size()) == d.weyl_order());
  return {orbit.begin(), orbit.end()};
}

std::vector<int> word_from(const RootDatum& d, const Alcove& a, const Alcove& b) {
  std::vector<int> word;
  Alcove c = b;
  while (c != a) {
    Coord h = separation(d, a, c);
    bool moved = false;
    for (int s = 0; s < d.num_faces(); ++s) {
      Alcove cs = right_act(d, c, s);
      if (separation(d, a, cs) == h - 1) {
        word.push_back(s);
        c = cs;
        moved = true;
        break;
      }
    }
    assert(moved && "gallery descent stuck");
    if (!moved) break;
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<Alcove> gallery_ball(const RootDatum& d, int radius, const Alcove& base) {
  std::set<Alcove> seen{base};
  std::deque<std::pair<Alcove, int>> q{{base, 0}};
  while (!q.empty()) {
    auto [c, depth] = q.front();
    q.pop_front();
    if (depth == radius) continue;
    for (int s = 0; s < d.num_faces(); ++s) {
      Alcove n = right_act(d, c, s);
      if (seen.insert(n).second) q.emplace_back(n, depth + 1);
    }
  }
  return {seen.begin(), seen.end()};
}

} // namespace alcalc
