#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "alcalc/root_datum.hpp"

namespace alcalc {

/// An alcove, stored as the unique (w, mu) with A = w(A_fund) + mu where
/// w lies in the finite Weyl group and mu in the root lattice (simple-root
/// coordinates).  W'_aff = W_f x ZDelta acts simply transitively, so this is
/// a faithful, canonical key; the derived ordering makes alcoves usable as
/// map keys with deterministic iteration.
struct Alcove {
  int w = 0;
  Vec2 mu{0, 0};
  friend auto operator<=>(const Alcove&, const Alcove&) = default;
};

/// Element of W'_aff: x -> w(x) + mu (mu in simple-root coordinates).
struct AffineElt {
  int w = 0;
  Vec2 mu{0, 0};
};

inline constexpr Alcove fundamental_alcove{};

/// Alcove coordinates: k_alpha(A) is the unique integer with
/// k-1 < <a, alpha^vee> < k on A, listed in the datum's positive-root order.
std::vector<Coord> coords(const RootDatum& d, const Alcove& a);
Coord coord(const RootDatum& d, const Alcove& a, int pos_root);

/// Inverse of coords; empty when the integer tuple is not realized by an alcove.
std::optional<Alcove> from_coords(const RootDatum& d, const std::vector<Coord>& k);

/// "[k1,k2,...]" in positive-root order.
std::string alcove_str(const RootDatum& d, const Alcove& a);

AffineElt aff_of(const Alcove& a);
AffineElt aff_mul(const RootDatum& d, const AffineElt& x, const AffineElt& y);
AffineElt aff_inv(const RootDatum& d, const AffineElt& x);
/// The reflection s_{alpha, n} as an affine element.
AffineElt reflection_elt(const RootDatum& d, int pos_root, Coord n);

/// Left action of W'_aff.
Alcove left_act(const RootDatum& d, const AffineElt& x, const Alcove& a);
/// Right action: reflect A through its own wall of the given face type.
Alcove right_act(const RootDatum& d, const Alcove& a, int face);
Alcove right_act_word(const RootDatum& d, Alcove a, const std::vector<int>& word);
/// Translate by mu (simple-root coordinates).
Alcove translate(const RootDatum& d, const Alcove& a, const Vec2& mu);

/// alpha-up / alpha-down: reflection across the nearest alpha-hyperplane
/// above / below A.
Alcove up_alcove(const RootDatum& d, int pos_root, const Alcove& a);
Alcove down_alcove(const RootDatum& d, int pos_root, const Alcove& a);

/// Signed crossing count d(A,B) = sum_alpha (k_alpha(B) - k_alpha(A)).
Coord dist(const RootDatum& d, const Alcove& a, const Alcove& b);
/// Length normalized by ell(A_fund) = 0: ell(A) = dist(A_fund, A).
Coord length(const RootDatum& d, const Alcove& a);
/// Number of hyperplanes separating A from B.
Coord separation(const RootDatum& d, const Alcove& a, const Alcove& b);

/// Generic Bruhat order: bounded upward BFS from A, pruned by the exact
/// certificate "B above C ==> pt(B) - pt(C) is a nonnegative combination of
/// positive roots" evaluated at exact interior points.
bool leq(const RootDatum& d, const Alcove& a, const Alcove& b);

/// [A, B] = { C : A <= C <= B }, sorted.
std::vector<Alcove> interval(const RootDatum& d, const Alcove& a, const Alcove& b);

/// Box label of A: the integer tuple (<lambda, alpha_i^vee>)_i of the unique
/// box containing A; equals the simple coordinates of A.
Vec2 box_of(const RootDatum& d, const Alcove& a);
/// All alcoves of the box Pi_lambda.
std::vector<Alcove> box_alcoves(const RootDatum& d, const Vec2& lambda);
/// The unique <=-maximum A_lambda^- of the box (asserted unique).
Alcove box_max(const RootDatum& d, const Vec2& lambda);
/// The orbit W'_lambda A_lambda^- (size |W_f|), sorted.
std::vector<Alcove> wlambda_orbit(const RootDatum& d, const Vec2& lambda);
/// <lambda, beta^vee> for a box label lambda and any positive root beta.
Coord lambda_pair(const RootDatum& d, const Vec2& lambda, int pos_root);

/// A reduced right-action word with a . word = b (gallery descent); the word
/// length equals separation(a, b).
std::vector<int> word_from(const RootDatum& d, const Alcove& a, const Alcove& b);

/// All alcoves within gallery distance r of the base alcove, sorted.
std::vector<Alcove> gallery_ball(const RootDatum& d, int radius,
                                 const Alcove& base = fundamental_alcove);

/// Exact interior point of A, scaled by d.p0_den(): integer weight coords.
Vec2 interior_point_scaled(const RootDatum& d, const Alcove& a);
/// Is v a nonnegative rational combination of the simple roots?
bool in_positive_cone(const RootDatum& d, const Vec2& v);

} // namespace alcalc
