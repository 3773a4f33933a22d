#include "fanocert/toric/surface.hpp"

#include <algorithm>

#include "fanocert/error.hpp"

namespace fanocert::toric {

namespace {

int half(const Vec& v) { return (v[1] > 0 || (v[1] == 0 && v[0] > 0)) ? 0 : 1; }

long long cross(const Vec& a, const Vec& b) { return a[0] * b[1] - a[1] * b[0]; }

void require_smooth_complete_surface(const Fan& fan) {
  if (fan.dim() != 2) throw Error("surface computation needs a 2-dimensional fan");
  if (!fan.is_complete()) throw Error("surface fan is not complete");
  if (!fan_is_smooth(fan)) throw Error("surface fan is not smooth");
}

}  // namespace

std::vector<std::size_t> cyclic_order(const std::vector<Vec>& rays) {
  for (const auto& r : rays)
    if (r.size() != 2) throw Error("cyclic order needs 2D rays");
  std::vector<std::size_t> idx(rays.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) {
    int hi = half(rays[i]), hj = half(rays[j]);
    if (hi != hj) return hi < hj;
    return cross(rays[i], rays[j]) > 0;
  });
  return idx;
}

std::vector<long long> surface_self_intersections(const Fan& fan) {
  require_smooth_complete_surface(fan);
  const auto& rays = fan.rays();
  auto ord = cyclic_order(rays);
  std::size_t k = ord.size();
  std::vector<long long> out(k);
  for (std::size_t p = 0; p < k; ++p) {
    const Vec& u = rays[ord[p]];
    const Vec& prev = rays[ord[(p + k - 1) % k]];
    const Vec& next = rays[ord[(p + 1) % k]];
    Vec sum{prev[0] + next[0], prev[1] + next[1]};
    std::size_t j = u[0] != 0 ? 0 : 1;
    long long c = sum[j] / u[j];
    if (sum[0] != c * u[0] || sum[1] != c * u[1]) throw Error("wall relation is not an integer multiple");
    out[ord[p]] = -c;
  }
  return out;
}

long long surface_intersection(const Fan& fan, std::size_t i, std::size_t j) {
  if (i == j) throw Error("use surface_self_intersections for D_i^2");
  if (i >= fan.ray_count() || j >= fan.ray_count()) throw Error("ray index out of range");
  require_smooth_complete_surface(fan);
  return fan.find_cone({i, j}).has_value() ? 1 : 0;
}

long long divisor_intersection(const Fan& fan, const TorusDivisor& a, const TorusDivisor& b) {
  if (a.size() != fan.ray_count() || b.size() != fan.ray_count()) throw Error("divisor length mismatch");
  auto self = surface_self_intersections(fan);
  long long total = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (a[i] == 0 || b[j] == 0) continue;
      long long ij = i == j ? self[i] : (fan.find_cone({i, j}) ? 1 : 0);
      total += a[i] * b[j] * ij;
    }
  return total;
}

Fan blow_up_surface(const Fan& fan, std::size_t cone_index) {
  if (fan.dim() != 2) throw Error("blow-up needs a 2-dimensional fan");
  if (cone_index >= fan.cones().size()) throw Error("cone index out of range");
  const auto& c = fan.cones()[cone_index].rays;
  if (c.size() != 2) throw Error("blow-up needs a 2-ray cone");
  const Vec& a = fan.rays()[c[0]];
  const Vec& b = fan.rays()[c[1]];
  auto rays = fan.rays();
  rays.push_back(make_primitive({a[0] + b[0], a[1] + b[1]}));
  return fans::surface_from_rays(rays);
}

}  // namespace fanocert::toric
