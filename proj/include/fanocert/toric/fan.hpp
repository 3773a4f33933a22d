#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fanocert/exact/rational.hpp"

namespace fanocert::toric {

using Vec = std::vector<long long>;
using exact::Integer;

/// Sorted ray indices into the owning fan.
struct Cone {
  std::vector<std::size_t> rays;
  friend bool operator==(const Cone&, const Cone&) = default;
};

std::string to_string(const Vec& v);
long long dot(const Vec& a, const Vec& b);
/// Divides out the gcd; throws on the zero vector.
Vec make_primitive(const Vec& v);
bool is_primitive(const Vec& v);

/// Validated fan: primitive rays, strongly convex maximal cones whose
/// pairwise intersections are common faces.
class Fan {
 public:
  Fan(int dim, std::vector<Vec> rays, std::vector<std::vector<std::size_t>> cones);

  int dim() const { return dim_; }
  const std::vector<Vec>& rays() const { return rays_; }
  const std::vector<Cone>& cones() const { return cones_; }
  std::size_t ray_count() const { return rays_.size(); }

  bool cone_is_simplicial(const Cone& c) const;
  bool is_simplicial() const;
  /// Every facet of a full-dimensional maximal cone lies in exactly two
  /// maximal cones and the adjacency graph is connected.
  bool is_complete() const;
  /// Index of the maximal cone with exactly these rays, if any.
  std::optional<std::size_t> find_cone(std::vector<std::size_t> rays) const;

 private:
  int dim_;
  std::vector<Vec> rays_;
  std::vector<Cone> cones_;
};

/// Geometry of cones generated by explicit vectors (exact, via Fourier-Motzkin).
namespace geometry {
bool strongly_convex(const std::vector<Vec>& gens, int dim);
bool in_cone(const Vec& v, const std::vector<Vec>& gens, int dim);
/// Is `subset` (indices into gens) exactly the set of generators on some face?
bool is_face(const std::vector<Vec>& gens, const std::vector<std::size_t>& subset, int dim);
/// Facets as index sets into gens (full-dimensional cones only).
std::vector<std::vector<std::size_t>> facets(const std::vector<Vec>& gens, int dim);
/// Do the cones meet exactly along cone(common)? (a separating hyperplane exists)
bool meet_in_common_face(const std::vector<Vec>& a, const std::vector<Vec>& b, const std::vector<Vec>& common,
                         int dim);
std::size_t rank(const std::vector<Vec>& gens);
}  // namespace geometry

struct ConeSmoothness {
  bool smooth = false;
  Integer multiplicity;
};

/// multiplicity = gcd of maximal minors; throws "not simplicial".
ConeSmoothness cone_is_smooth(const Fan& fan, const Cone& cone);
bool fan_is_smooth(const Fan& fan);

using TorusDivisor = std::vector<long long>;

/// Coefficient <m, u_rho> at each ray.
TorusDivisor principal_divisor(const Fan& fan, const Vec& m);

/// Rays u_rho - a_rho e_last plus +e_last, -e_last; each base cone lifted twice.
Fan build_p1_bundle_fan(const Fan& base, const TorusDivisor& a);

/// Removes a ray, replacing its star by one cone on the remaining rays.
Fan contract_ray(const Fan& fan, std::size_t ray);

struct QFactorialization {
  Fan fan;
  std::vector<std::array<std::size_t, 2>> diagonals;  // one per subdivided cone
};

/// Triangulations of each non-simplicial cone using only its own rays.
std::vector<QFactorialization> enumerate_qfactorializations(const Fan& fan);

/// First primitive covector (canonical sign, by sup-norm shell then lex) with
/// every maximal cone on one side of its kernel.
std::optional<Vec> fibration_to_p1(const Fan& fan, int bound = 3);

/// Rays with <m, .> = 0 in some maximal cone lie in the kernel; checks the
/// sign condition directly on every cone.
bool verify_fibration(const Fan& fan, const Vec& m);

namespace fans {
Fan projective_plane();
Fan projective_space3();
/// Rays e1, e2, -e1 + c e2, -e2 (Hirzebruch surface F_c).
Fan hirzebruch(long long c);
/// Scroll S(a, b) base fan: F_{b-a}.
Fan scroll_surface(long long a, long long b);
/// 2D fan from rays, cones between cyclic neighbours.
Fan surface_from_rays(std::vector<Vec> rays);
}  // namespace fans

}  // namespace fanocert::toric
