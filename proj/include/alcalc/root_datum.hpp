#pragma once

#include <array>
#include <string>
#include <vector>

namespace alcalc {

using Coord = long long;

/// Coordinate pair; rank-1 data use slot 0 and keep slot 1 at zero.
using Vec2 = std::array<Coord, 2>;
/// Row-major 2x2 integer matrix.
using Mat2 = std::array<Vec2, 2>;

Vec2 mat_apply(const Mat2& m, const Vec2& v);
Mat2 mat_mul(const Mat2& a, const Mat2& b);

enum class DatumName { A1, A1xA1, A2, B2, G2 };

/// One root with its coroot, both in fixed coordinates: the root in the
/// weight basis of X, the coroot as an integer functional on those
/// coordinates.  Integer expansions over the simple roots/coroots are kept
/// alongside (every positive root and coroot has one).
struct Root {
  Vec2 vec;
  Vec2 covec;
  Vec2 in_simple;
  Vec2 covec_in_simple;
  int simple_index = -1;
};

/// Finite Weyl group element: matrices on weight and on root coordinates,
/// the signed permutation of the positive roots, and group metadata.
struct WeylElt {
  Mat2 on_x;
  Mat2 on_root;
  int inverse = 0;
  int length = 0;
  /// pos_image[i] = (j, sign): w(alpha_i) = sign * alpha_j (positive indices).
  std::vector<std::pair<int, int>> pos_image;
};

/// A wall type of the fundamental alcove: the reflection s_{alpha, level}.
/// Simple walls come first (level 0), then one affine wall per irreducible
/// factor (level 1 against the factor's highest short root).  Names are
/// "s0", "s1", ... in that order.
struct Face {
  int root;
  Coord level;
  std::string name;
};

struct GkmReport {
  bool ok = false;
  bool two_invertible = false;
  /// Pairs of positive-root indices that become proportional over k.
  std::vector<std::pair<int, int>> bad_pairs;
  std::string str() const;
};

/// One of the five hard-coded rank <= 2 root data.  Immutable after
/// construction; obtain shared instances through get().
class RootDatum {
public:
  static const RootDatum& get(DatumName name);
  static DatumName parse_name(const std::string& s);

  DatumName name() const { return name_; }
  const std::string& str_name() const { return str_name_; }
  int rank() const { return rank_; }
  int num_factors() const { return num_factors_; }

  const std::vector<Root>& positive() const { return positive_; }
  int num_positive() const { return static_cast<int>(positive_.size()); }
  const Root& alpha(int i) const { return positive_[i]; }
  /// Position of the i-th simple root in positive().
  int simple(int i) const { return simple_[i]; }
  /// Cartan entry <alpha_j, alpha_i^vee>.
  Coord cartan(int i, int j) const { return cartan_[i][j]; }

  const std::vector<WeylElt>& weyl() const { return weyl_; }
  int weyl_order() const { return static_cast<int>(weyl_.size()); }
  int w_mul(int a, int b) const { return mul_[a][b]; }
  int w_inv(int a) const { return weyl_[a].inverse; }
  /// Index of the reflection s_alpha for positive root i.
  int reflection(int i) const { return refl_[i]; }
  int longest() const { return longest_; }

  const std::vector<Face>& faces() const { return faces_; }
  int num_faces() const { return static_cast<int>(faces_.size()); }
  /// Face index by name ("s0", ...); throws UsageError on unknown names.
  int face_by_name(const std::string& s) const;

  /// Interior point of the fundamental alcove, exactly: p0 = p0_scaled()/p0_den().
  /// Every pairing <p0, beta^vee> lies strictly between 0 and 1.
  const Vec2& p0_scaled() const { return p0_scaled_; }
  Coord p0_den() const { return p0_den_; }

  const std::vector<std::string>& var_names() const { return var_names_; }

  /// GKM admissibility over characteristic p (0 or a prime): 2 invertible
  /// and distinct positive roots pairwise independent over k.
  GkmReport gkm_check(long long p) const;

  static Coord pair(const Vec2& weight, const Vec2& covec) {
    return weight[0] * covec[0] + weight[1] * covec[1];
  }
  /// w acting on weight coordinates.
  Vec2 act(int w, const Vec2& v) const { return mat_apply(weyl_[w].on_x, v); }
  /// w acting on simple-root coordinates.
  Vec2 act_root(int w, const Vec2& c) const { return mat_apply(weyl_[w].on_root, c); }
  /// Convert simple-root coordinates to weight coordinates.
  Vec2 root_to_x(const Vec2& c) const;
  /// Solve <mu, alpha_i^vee> = t_i for mu in the root lattice; false if the
  /// solution is non-integral (or, rank 1, if t_1 != 0).
  bool solve_root_coords(const Vec2& t, Vec2& out) const;

  /// Highest short root (equivalently: root of the highest coroot) of a factor.
  int theta_short(int factor) const { return theta_short_[factor]; }
  int factor_of_simple(int i) const { return factor_of_simple_[i]; }
  /// Factor a positive root belongs to.
  int factor_of_root(int i) const;

private:
  RootDatum() = default;
  static RootDatum build(DatumName name);

  DatumName name_ = DatumName::A1;
  std::string str_name_;
  int rank_ = 1;
  int num_factors_ = 1;
  std::vector<Root> positive_;
  std::array<int, 2> simple_{};
  std::array<std::array<Coord, 2>, 2> cartan_{};
  std::vector<WeylElt> weyl_;
  std::vector<std::vector<int>> mul_;
  std::vector<int> refl_;
  int longest_ = 0;
  std::vector<Face> faces_;
  Vec2 p0_scaled_{};
  Coord p0_den_ = 1;
  std::vector<std::string> var_names_;
  std::array<int, 2> theta_short_{};
  std::array<int, 2> factor_of_simple_{};
};

} // namespace alcalc
