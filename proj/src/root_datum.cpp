#include "alcalc/root_datum.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>

#include "alcalc/errors.hpp"

namespace alcalc {

Vec2 mat_apply(const Mat2& m, const Vec2& v) {
  return {m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]};
}

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  Mat2 r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

namespace {

constexpr Mat2 kIdentity{{{1, 0}, {0, 1}}};

/// Reflection s_alpha on weight coordinates: x -> x - <x, covec> * vec.
Mat2 reflection_matrix(const Vec2& vec, const Vec2& covec) {
  Mat2 m = kIdentity;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) m[r][c] -= vec[r] * covec[c];
  return m;
}

} // namespace

DatumName RootDatum::parse_name(const std::string& s) {
  if (s == "A1") return DatumName::A1;
  if (s == "A1xA1") return DatumName::A1xA1;
  if (s == "A2") return DatumName::A2;
  if (s == "B2") return DatumName::B2;
  if (s == "G2") return DatumName::G2;
  throw UsageError("unknown root datum '" + s + "' (expected A1, A1xA1, A2, B2, G2)");
}

const RootDatum& RootDatum::get(DatumName name) {
  static const RootDatum a1 = build(DatumName::A1);
  static const RootDatum a1a1 = build(DatumName::A1xA1);
  static const RootDatum a2 = build(DatumName::A2);
  static const RootDatum b2 = build(DatumName::B2);
  static const RootDatum g2 = build(DatumName::G2);
  switch (name) {
    case DatumName::A1: return a1;
    case DatumName::A1xA1: return a1a1;
    case DatumName::A2: return a2;
    case DatumName::B2: return b2;
    case DatumName::G2: return g2;
  }
  throw UsageError("unknown root datum enum value");
}

RootDatum RootDatum::build(DatumName name) {
  RootDatum d;
  d.name_ = name;

  // Simple roots in the weight basis of X and simple coroots as coordinate
  // functionals.  All data use the weight-lattice normalization (where every
  // positive coroot is a primitive functional, so delta_s always exists);
  // A1 is X = Z with alpha = 2, making alcoves the integer intervals.
  std::vector<Root> simples;
  switch (name) {
    case DatumName::A1:
      d.str_name_ = "A1";
      d.rank_ = 1;
      d.num_factors_ = 1;
      d.var_names_ = {"x"};
      simples = {{{2, 0}, {1, 0}, {1, 0}, {1, 0}, 0}};
      d.factor_of_simple_ = {0, 0};
      break;
    case DatumName::A1xA1:
      d.str_name_ = "A1xA1";
      d.rank_ = 2;
      d.num_factors_ = 2;
      d.var_names_ = {"x1", "x2"};
      simples = {{{2, 0}, {1, 0}, {1, 0}, {1, 0}, 0},
                 {{0, 2}, {0, 1}, {0, 1}, {0, 1}, 1}};
      d.factor_of_simple_ = {0, 1};
      break;
    case DatumName::A2:
      d.str_name_ = "A2";
      d.rank_ = 2;
      d.num_factors_ = 1;
      d.var_names_ = {"x1", "x2"};
      simples = {{{2, -1}, {1, 0}, {1, 0}, {1, 0}, 0},
                 {{-1, 2}, {0, 1}, {0, 1}, {0, 1}, 1}};
      d.factor_of_simple_ = {0, 0};
      break;
    case DatumName::B2:
      d.str_name_ = "B2";
      d.rank_ = 2;
      d.num_factors_ = 1;
      d.var_names_ = {"x1", "x2"};
      // alpha_1 long, alpha_2 short.
      simples = {{{2, -2}, {1, 0}, {1, 0}, {1, 0}, 0},
                 {{-1, 2}, {0, 1}, {0, 1}, {0, 1}, 1}};
      d.factor_of_simple_ = {0, 0};
      break;
    case DatumName::G2:
      d.str_name_ = "G2";
      d.rank_ = 2;
      d.num_factors_ = 1;
      d.var_names_ = {"x1", "x2"};
      // alpha_1 short, alpha_2 long.
      simples = {{{2, -1}, {1, 0}, {1, 0}, {1, 0}, 0},
                 {{-3, 2}, {0, 1}, {0, 1}, {0, 1}, 1}};
      d.factor_of_simple_ = {0, 0};
      break;
  }

  // Positive roots by reflection closure from the simples.
  d.positive_ = simples;
  for (bool grew = true; grew;) {
    grew = false;
    for (size_t i = 0; i < d.positive_.size(); ++i) {
      for (int s = 0; s < d.rank_; ++s) {
        const Root& si = simples[s];
        const Root b = d.positive_[i];
        Coord n = pair(b.vec, si.covec);
        Root r;
        for (int c = 0; c < 2; ++c) {
          r.vec[c] = b.vec[c] - n * si.vec[c];
          r.in_simple[c] = b.in_simple[c] - (c == s ? n : 0);
        }
        Coord m = pair(si.vec, b.covec);
        for (int c = 0; c < 2; ++c) {
          r.covec[c] = b.covec[c] - m * si.covec[c];
          r.covec_in_simple[c] = b.covec_in_simple[c] - (c == s ? m : 0);
        }
        if (r.in_simple[0] < 0 || r.in_simple[1] < 0) continue; // negative root
        bool known = false;
        for (const Root& k : d.positive_)
          if (k.vec == r.vec) known = true;
        if (!known) {
          d.positive_.push_back(r);
          grew = true;
        }
      }
    }
  }
  // Canonical order: by height, then reverse-lexicographic on simple-root
  // coordinates, so the simple roots come first in their declared order.
  std::sort(d.positive_.begin(), d.positive_.end(), [](const Root& a, const Root& b) {
    Coord ha = a.in_simple[0] + a.in_simple[1], hb = b.in_simple[0] + b.in_simple[1];
    if (ha != hb) return ha < hb;
    return a.in_simple > b.in_simple;
  });
  for (size_t i = 0; i < d.positive_.size(); ++i)
    if (d.positive_[i].simple_index >= 0) d.simple_[d.positive_[i].simple_index] = static_cast<int>(i);

  for (int i = 0; i < d.rank_; ++i)
    for (int j = 0; j < d.rank_; ++j)
      d.cartan_[i][j] = pair(d.positive_[d.simple_[j]].vec, d.positive_[d.simple_[i]].covec);

  // Finite Weyl group by closure under right multiplication with the simple
  // reflections; lengths are BFS depths.
  std::vector<Mat2> gens;
  for (int i = 0; i < d.rank_; ++i) {
    const Root& s = d.positive_[d.simple_[i]];
    gens.push_back(reflection_matrix(s.vec, s.covec));
  }
  d.weyl_.push_back(WeylElt{kIdentity, kIdentity, 0, 0, {}});
  for (size_t head = 0; head < d.weyl_.size(); ++head) {
    for (const Mat2& g : gens) {
      Mat2 m = mat_mul(d.weyl_[head].on_x, g);
      bool known = false;
      for (const WeylElt& w : d.weyl_)
        if (w.on_x == m) known = true;
      if (!known) d.weyl_.push_back(WeylElt{m, {}, 0, d.weyl_[head].length + 1, {}});
    }
  }

  // Signed permutation of the positive roots, and the root-coordinate matrix
  // (columns = root coordinates of w(alpha_j)).
  for (WeylElt& w : d.weyl_) {
    w.pos_image.resize(d.positive_.size());
    for (size_t i = 0; i < d.positive_.size(); ++i) {
      Vec2 im = mat_apply(w.on_x, d.positive_[i].vec);
      Vec2 neg = {-im[0], -im[1]};
      int j = -1, sign = 0;
      for (size_t k = 0; k < d.positive_.size(); ++k) {
        if (d.positive_[k].vec == im) { j = static_cast<int>(k); sign = 1; }
        if (d.positive_[k].vec == neg) { j = static_cast<int>(k); sign = -1; }
      }
      assert(j >= 0 && "Weyl image is not a root");
      w.pos_image[i] = {j, sign};
      if (d.positive_[i].simple_index >= 0) {
        int col = d.positive_[i].simple_index;
        for (int r = 0; r < 2; ++r)
          w.on_root[r][col] = sign * d.positive_[j].in_simple[r];
      }
    }
    if (d.rank_ == 1) w.on_root[1][1] = 1;
  }

  // Multiplication table, inverses, longest element.
  auto index_of = [&](const Mat2& m) {
    for (size_t i = 0; i < d.weyl_.size(); ++i)
      if (d.weyl_[i].on_x == m) return static_cast<int>(i);
    assert(false && "product escaped the group");
    return -1;
  };
  d.mul_.assign(d.weyl_.size(), std::vector<int>(d.weyl_.size(), 0));
  for (size_t a = 0; a < d.weyl_.size(); ++a)
    for (size_t b = 0; b < d.weyl_.size(); ++b)
      d.mul_[a][b] = index_of(mat_mul(d.weyl_[a].on_x, d.weyl_[b].on_x));
  for (size_t a = 0; a < d.weyl_.size(); ++a) {
    for (size_t b = 0; b < d.weyl_.size(); ++b)
      if (d.mul_[a][b] == 0) d.weyl_[a].inverse = static_cast<int>(b);
    if (d.weyl_[a].length > d.weyl_[d.longest_].length) d.longest_ = static_cast<int>(a);
  }
  d.refl_.resize(d.positive_.size());
  for (size_t i = 0; i < d.positive_.size(); ++i)
    d.refl_[i] = index_of(reflection_matrix(d.positive_[i].vec, d.positive_[i].covec));

  // Highest short root per factor = root whose coroot has maximal height.
  for (int f = 0; f < d.num_factors_; ++f) {
    int best = -1;
    Coord best_h = -1;
    for (int i = 0; i < d.num_positive(); ++i) {
      if (d.factor_of_root(i) != f) continue;
      Coord h = d.positive_[i].covec_in_simple[0] + d.positive_[i].covec_in_simple[1];
      if (h > best_h) { best_h = h; best = i; }
    }
    d.theta_short_[f] = best;
    d.p0_den_ = std::max(d.p0_den_, best_h + 1);
  }

  // Interior point: <p0, alpha_i^vee> = 1/p0_den for each simple i, so
  // <p0, beta^vee> = height(beta^vee)/p0_den in (0,1) for every positive beta.
  {
    Vec2 t{1, d.rank_ == 2 ? 1 : 0};
    // p0_scaled in weight coordinates solves <p0_scaled, alpha_i^vee> = 1.
    // With coroots as the coordinate functionals this is just (1,..,1); for
    // A1/A1xA1 the coroots are also coordinate functionals by construction.
    d.p0_scaled_ = t;
    for (int i = 0; i < d.rank_; ++i)
      assert(pair(d.p0_scaled_, d.positive_[d.simple_[i]].covec) == 1);
  }

  // Wall types of the fundamental alcove.
  for (int i = 0; i < d.rank_; ++i)
    d.faces_.push_back(Face{d.simple_[i], 0, "s" + std::to_string(i)});
  for (int f = 0; f < d.num_factors_; ++f)
    d.faces_.push_back(Face{d.theta_short_[f], 1, "s" + std::to_string(d.rank_ + f)});

  return d;
}

int RootDatum::factor_of_root(int i) const {
  // A positive root lies in the factor of any simple root appearing in it.
  const Root& r = positive_[i];
  for (int s = 0; s < rank_; ++s)
    if (r.in_simple[s] != 0) return factor_of_simple_[s];
  assert(false && "root with empty support");
  return 0;
}

int RootDatum::face_by_name(const std::string& s) const {
  for (int i = 0; i < num_faces(); ++i)
    if (faces_[i].name == s) return i;
  throw UsageError("unknown wall name '" + s + "' for " + str_name_);
}

Vec2 RootDatum::root_to_x(const Vec2& c) const {
  const Root& a0 = positive_[simple_[0]];
  Vec2 r{c[0] * a0.vec[0], c[0] * a0.vec[1]};
  if (rank_ == 2) {
    const Root& a1 = positive_[simple_[1]];
    r[0] += c[1] * a1.vec[0];
    r[1] += c[1] * a1.vec[1];
  }
  return r;
}

bool RootDatum::solve_root_coords(const Vec2& t, Vec2& out) const {
  if (rank_ == 1) {
    if (t[1] != 0) return false;
    if (t[0] % cartan_[0][0] != 0) return false;
    out = {t[0] / cartan_[0][0], 0};
    return true;
  }
  Coord a = cartan_[0][0], b = cartan_[0][1], c = cartan_[1][0], e = cartan_[1][1];
  Coord det = a * e - b * c;
  assert(det != 0);
  Coord n0 = e * t[0] - b * t[1];
  Coord n1 = -c * t[0] + a * t[1];
  if (n0 % det != 0 || n1 % det != 0) return false;
  out = {n0 / det, n1 / det};
  return true;
}

GkmReport RootDatum::gkm_check(long long p) const {
  GkmReport rep;
  rep.two_invertible = (p != 2);
  for (int i = 0; i < num_positive(); ++i) {
    for (int j = i + 1; j < num_positive(); ++j) {
      Coord det = positive_[i].vec[0] * positive_[j].vec[1] -
                  positive_[i].vec[1] * positive_[j].vec[0];
      // Rank-1 embeddings keep second coordinates zero only for A1, where
      // there is a single positive root and no pairs arise.
      bool dep = (p == 0) ? (det == 0) : (det % p == 0);
      if (dep) rep.bad_pairs.emplace_back(i, j);
    }
  }
  rep.ok = rep.two_invertible && rep.bad_pairs.empty();
  return rep;
}

std::string GkmReport::str() const {
  std::ostringstream os;
  os << (ok ? "ok" : "violated");
  if (!two_invertible) os << "; 2 not invertible";
  if (!bad_pairs.empty()) {
    os << "; dependent positive-root pairs:";
    for (auto& [i, j] : bad_pairs) os << " (" << i << "," << j << ")";
  }
  return os.str();
}

} // namespace alcalc
