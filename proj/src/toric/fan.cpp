#include "fanocert/toric/fan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "fanocert/error.hpp"
#include "fanocert/exact/inequalities.hpp"
#include "fanocert/exact/int_matrix.hpp"
#include "fanocert/toric/surface.hpp"

namespace fanocert::toric {

using exact::Inequality;
using exact::Rational;

std::string to_string(const Vec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

long long dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error("dimension mismatch in pairing");
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_primitive(const Vec& v) {
  long long g = 0;
  for (auto x : v) g = std::gcd(g, x);
  return g == 1;
}

Vec make_primitive(const Vec& v) {
  long long g = 0;
  for (auto x : v) g = std::gcd(g, x);
  if (g == 0) throw Error("zero ray");
  Vec out(v);
  for (auto& x : out) x /= g;
  return out;
}

namespace geometry {

namespace {

Inequality row(const Vec& g, long long scale, long long rhs) {
  Inequality q;
  for (auto x : g) q.a.emplace_back(scale * x);
  q.b = Rational(rhs);
  return q;
}

bool feasible(const std::vector<Inequality>& sys, int dim) {
  return exact::solve_inequalities(sys, static_cast<std::size_t>(dim)).has_value();
}

}  // namespace

std::size_t rank(const std::vector<Vec>& gens) {
  if (gens.empty()) return 0;
  return exact::rank(exact::IntMatrix::from_rows(gens));
}

bool strongly_convex(const std::vector<Vec>& gens, int dim) {
  std::vector<Inequality> sys;
  for (const auto& g : gens) sys.push_back(row(g, 1, 1));
  return feasible(sys, dim);
}

bool in_cone(const Vec& v, const std::vector<Vec>& gens, int dim) {
  // Farkas: v in cone(gens) iff no m with m.g >= 0 for all g and m.v < 0
  std::vector<Inequality> sys;
  for (const auto& g : gens) sys.push_back(row(g, 1, 0));
  sys.push_back(row(v, -1, 1));
  return !feasible(sys, dim);
}

bool is_face(const std::vector<Vec>& gens, const std::vector<std::size_t>& subset, int dim) {
  std::vector<Inequality> sys;
  std::vector<bool> on(gens.size(), false);
  for (auto i : subset) on[i] = true;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (on[i]) {
      sys.push_back(row(gens[i], 1, 0));
      sys.push_back(row(gens[i], -1, 0));
    } else {
      sys.push_back(row(gens[i], 1, 1));
    }
  }
  return feasible(sys, dim);
}

std::vector<std::vector<std::size_t>> facets(const std::vector<Vec>& gens, int dim) {
  std::vector<std::vector<std::size_t>> out;
  std::size_t k = gens.size();
  if (k > 16) throw Error("cone has too many rays for facet enumeration");
  for (unsigned mask = 0; mask < (1u << k); ++mask) {
    std::vector<std::size_t> sub;
    std::vector<Vec> sv;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) {
        sub.push_back(i);
        sv.push_back(gens[i]);
      }
    if (static_cast<int>(rank(sv)) != dim - 1) continue;
    if (is_face(gens, sub, dim)) out.push_back(sub);
  }
  return out;
}

bool meet_in_common_face(const std::vector<Vec>& a, const std::vector<Vec>& b, const std::vector<Vec>& common,
                         int dim) {
  std::vector<Inequality> sys;
  for (const auto& c : common) {
    sys.push_back(row(c, 1, 0));
    sys.push_back(row(c, -1, 0));
  }
  for (const auto& x : a) sys.push_back(row(x, 1, 1));
  for (const auto& y : b) sys.push_back(row(y, -1, 1));
  return feasible(sys, dim);
}

}  // namespace geometry

Fan::Fan(int dim, std::vector<Vec> rays, std::vector<std::vector<std::size_t>> cones)
    : dim_(dim), rays_(std::move(rays)) {
  if (dim < 1 || dim > 3) throw Error("fan dimension must be 1, 2 or 3");
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const Vec& r = rays_[i];
    if (static_cast<int>(r.size()) != dim)
      throw Error("rays[" + std::to_string(i) + "] has length " + std::to_string(r.size()) + ", expected " +
                  std::to_string(dim));
    if (std::all_of(r.begin(), r.end(), [](long long x) { return x == 0; }))
      throw Error("zero ray: rays[" + std::to_string(i) + "]");
    if (!is_primitive(r)) throw Error("ray not primitive: rays[" + std::to_string(i) + "] = " + to_string(r));
    for (std::size_t j = 0; j < i; ++j)
      if (rays_[j] == r) throw Error("duplicate ray " + to_string(r));
  }
  if (cones.empty()) throw Error("fan has no cones");
  std::vector<bool> used(rays_.size(), false);
  for (std::size_t c = 0; c < cones.size(); ++c) {
    auto idx = cones[c];
    if (idx.empty()) throw Error("cones[" + std::to_string(c) + "] is empty");
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
      throw Error("cones[" + std::to_string(c) + "] repeats a ray");
    for (auto i : idx) {
      if (i >= rays_.size()) throw Error("cones[" + std::to_string(c) + "] refers to missing ray " + std::to_string(i));
      used[i] = true;
    }
    cones_.push_back(Cone{idx});
  }
  for (std::size_t i = 0; i < rays_.size(); ++i)
    if (!used[i]) throw Error("ray " + to_string(rays_[i]) + " lies in no cone");

  auto gens = [this](const std::vector<std::size_t>& idx) {
    std::vector<Vec> g;
    for (auto i : idx) g.push_back(rays_[i]);
    return g;
  };
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    const auto& idx = cones_[c].rays;
    if (!geometry::strongly_convex(gens(idx), dim_))
      throw Error("cones[" + std::to_string(c) + "] is not strongly convex");
    for (auto i : idx) {
      std::vector<std::size_t> others;
      for (auto j : idx)
        if (j != i) others.push_back(j);
      if (geometry::in_cone(rays_[i], gens(others), dim_))
        throw Error("ray " + to_string(rays_[i]) + " is not extremal in cones[" + std::to_string(c) + "]");
    }
  }
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    for (std::size_t d = c + 1; d < cones_.size(); ++d) {
      const auto& a = cones_[c].rays;
      const auto& b = cones_[d].rays;
      std::vector<std::size_t> common, a_only, b_only;
      std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
      std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(a_only));
      std::set_difference(b.begin(), b.end(), a.begin(), a.end(), std::back_inserter(b_only));
      if (a_only.empty() || b_only.empty())
        throw Error("cones[" + std::to_string(c) + "] and cones[" + std::to_string(d) + "] are nested");
      if (!geometry::meet_in_common_face(gens(a_only), gens(b_only), gens(common), dim_))
        throw Error("cones[" + std::to_string(c) + "] and cones[" + std::to_string(d) +
                    "] do not meet in a common face");
    }
  }
}

bool Fan::cone_is_simplicial(const Cone& c) const {
  std::vector<Vec> g;
  for (auto i : c.rays) g.push_back(rays_[i]);
  return geometry::rank(g) == g.size();
}

bool Fan::is_simplicial() const {
  return std::all_of(cones_.begin(), cones_.end(), [this](const Cone& c) { return cone_is_simplicial(c); });
}

std::optional<std::size_t> Fan::find_cone(std::vector<std::size_t> rays) const {
  std::sort(rays.begin(), rays.end());
  for (std::size_t i = 0; i < cones_.size(); ++i)
    if (cones_[i].rays == rays) return i;
  return std::nullopt;
}

bool Fan::is_complete() const {
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> owners;
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    std::vector<Vec> g;
    for (auto i : cones_[c].rays) g.push_back(rays_[i]);
    if (static_cast<int>(geometry::rank(g)) != dim_) return false;
    for (const auto& f : geometry::facets(g, dim_)) {
      std::vector<std::size_t> key;
      for (auto k : f) key.push_back(cones_[c].rays[k]);
      owners[key].push_back(c);
    }
  }
  std::vector<std::vector<std::size_t>> adj(cones_.size());
  for (const auto& [facet, cs] : owners) {
    if (cs.size() != 2) return false;
    adj[cs[0]].push_back(cs[1]);
    adj[cs[1]].push_back(cs[0]);
  }
  std::vector<bool> seen(cones_.size(), false);
  std::queue<std::size_t> q;
  q.push(0);
  seen[0] = true;
  std::size_t count = 1;
  while (!q.empty()) {
    auto c = q.front();
    q.pop();
    for (auto d : adj[c])
      if (!seen[d]) {
        seen[d] = true;
        ++count;
        q.push(d);
      }
  }
  return count == cones_.size();
}

ConeSmoothness cone_is_smooth(const Fan& fan, const Cone& cone) {
  if (!fan.cone_is_simplicial(cone)) throw Error("not simplicial");
  std::vector<std::vector<long long>> rows;
  for (auto i : cone.rays) rows.push_back(fan.rays()[i]);
  ConeSmoothness s;
  s.multiplicity = exact::maximal_minor_gcd(exact::IntMatrix::from_rows(rows));
  s.smooth = s.multiplicity == 1;
  return s;
}

bool fan_is_smooth(const Fan& fan) {
  bool all = true;
  for (const auto& c : fan.cones()) all = cone_is_smooth(fan, c).smooth && all;
  return all;
}

TorusDivisor principal_divisor(const Fan& fan, const Vec& m) {
  if (static_cast<int>(m.size()) != fan.dim()) throw Error("covector has wrong dimension");
  TorusDivisor d;
  for (const auto& r : fan.rays()) d.push_back(dot(m, r));
  return d;
}

Fan build_p1_bundle_fan(const Fan& base, const TorusDivisor& a) {
  if (a.size() != base.ray_count()) throw Error("divisor length differs from the number of rays");
  if (base.dim() > 2) throw Error("bundle construction needs a base of dimension <= 2");
  if (!base.is_complete()) throw Error("base fan is not complete");
  int d = base.dim() + 1;
  std::vector<Vec> rays;
  for (std::size_t i = 0; i < base.ray_count(); ++i) {
    Vec v = base.rays()[i];
    v.push_back(-a[i]);
    rays.push_back(v);
  }
  Vec up(static_cast<std::size_t>(d), 0), down(static_cast<std::size_t>(d), 0);
  up.back() = 1;
  down.back() = -1;
  std::size_t iu = rays.size(), id = rays.size() + 1;
  rays.push_back(up);
  rays.push_back(down);
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t top : {iu, id})
    for (const auto& c : base.cones()) {
      auto idx = c.rays;
      idx.push_back(top);
      cones.push_back(idx);
    }
  return Fan(d, rays, cones);
}

Fan contract_ray(const Fan& fan, std::size_t ray) {
  if (ray >= fan.ray_count()) throw Error("ray index out of range");
  std::vector<std::vector<std::size_t>> kept;
  std::set<std::size_t> star_rays;
  for (const auto& c : fan.cones()) {
    if (std::find(c.rays.begin(), c.rays.end(), ray) == c.rays.end()) {
      kept.push_back(c.rays);
    } else {
      for (auto i : c.rays)
        if (i != ray) star_rays.insert(i);
    }
  }
  std::vector<Vec> gens;
  for (auto i : star_rays) gens.push_back(fan.rays()[i]);
  auto with_v = gens;
  with_v.push_back(fan.rays()[ray]);
  if (!geometry::strongly_convex(with_v, fan.dim())) throw Error("not strongly convex");
  if (!geometry::in_cone(fan.rays()[ray], gens, fan.dim()))
    throw Error("contracted ray does not lie in the cone on its star");

  std::vector<std::size_t> merged;
  std::vector<std::size_t> star(star_rays.begin(), star_rays.end());
  for (std::size_t k = 0; k < star.size(); ++k) {
    std::vector<Vec> others;
    for (std::size_t j = 0; j < star.size(); ++j)
      if (j != k) others.push_back(fan.rays()[star[j]]);
    if (!geometry::in_cone(fan.rays()[star[k]], others, fan.dim())) merged.push_back(star[k]);
  }
  kept.push_back(merged);

  auto shift = [ray](std::size_t i) { return i > ray ? i - 1 : i; };
  std::vector<Vec> rays;
  for (std::size_t i = 0; i < fan.ray_count(); ++i)
    if (i != ray) rays.push_back(fan.rays()[i]);
  for (auto& c : kept)
    for (auto& i : c) i = shift(i);
  return Fan(fan.dim(), rays, kept);
}

std::vector<QFactorialization> enumerate_qfactorializations(const Fan& fan) {
  struct Split {
    std::size_t cone;
    std::vector<std::array<std::size_t, 2>> diagonals;
  };
  std::vector<Split> splits;
  for (std::size_t c = 0; c < fan.cones().size(); ++c) {
    const auto& cone = fan.cones()[c];
    if (fan.cone_is_simplicial(cone)) continue;
    if (cone.rays.size() > 4)
      throw Error("beyond desk scale: cone with " + std::to_string(cone.rays.size()) + " rays");
    std::vector<Vec> g;
    for (auto i : cone.rays) g.push_back(fan.rays()[i]);
    if (fan.dim() != 3 || geometry::rank(g) != 3)
      throw Error("beyond desk scale: only full-dimensional 3D cones are subdivided");
    Split s{c, {}};
    for (std::size_t i = 0; i < g.size(); ++i)
      for (std::size_t j = i + 1; j < g.size(); ++j)
        if (!geometry::is_face(g, {i, j}, 3)) s.diagonals.push_back({cone.rays[i], cone.rays[j]});
    if (s.diagonals.empty()) throw Error("non-simplicial cone without a diagonal");
    splits.push_back(s);
  }
  if (splits.empty()) return {QFactorialization{fan, {}}};

  std::vector<QFactorialization> out;
  std::vector<std::size_t> choice(splits.size(), 0);
  for (;;) {
    std::vector<std::vector<std::size_t>> cones;
    std::vector<std::array<std::size_t, 2>> chosen;
    std::size_t s = 0;
    for (std::size_t c = 0; c < fan.cones().size(); ++c) {
      if (s < splits.size() && splits[s].cone == c) {
        auto diag = splits[s].diagonals[choice[s]];
        chosen.push_back(diag);
        for (auto k : fan.cones()[c].rays)
          if (k != diag[0] && k != diag[1]) cones.push_back({diag[0], diag[1], k});
        ++s;
      } else {
        cones.push_back(fan.cones()[c].rays);
      }
    }
    out.push_back(QFactorialization{Fan(fan.dim(), fan.rays(), cones), chosen});
    // odometer, last split varies fastest
    std::size_t k = splits.size();
    while (k > 0) {
      --k;
      if (++choice[k] < splits[k].diagonals.size()) break;
      choice[k] = 0;
      if (k == 0) return out;
    }
  }
}

bool verify_fibration(const Fan& fan, const Vec& m) {
  if (static_cast<int>(m.size()) != fan.dim() || !is_primitive(m)) return false;
  for (const auto& c : fan.cones()) {
    bool pos = false, neg = false;
    for (auto i : c.rays) {
      long long v = dot(m, fan.rays()[i]);
      pos = pos || v > 0;
      neg = neg || v < 0;
    }
    if (pos && neg) return false;
  }
  return true;
}

std::optional<Vec> fibration_to_p1(const Fan& fan, int bound) {
  int d = fan.dim();
  for (long long s = 1; s <= bound; ++s) {
    Vec m(static_cast<std::size_t>(d), -s);
    for (;;) {
      bool on_shell = std::any_of(m.begin(), m.end(), [s](long long x) { return x == s || x == -s; });
      auto first = std::find_if(m.begin(), m.end(), [](long long x) { return x != 0; });
      if (on_shell && first != m.end() && *first > 0 && is_primitive(m) && verify_fibration(fan, m)) return m;
      int k = d - 1;
      while (k >= 0 && m[static_cast<std::size_t>(k)] == s) m[static_cast<std::size_t>(k--)] = -s;
      if (k < 0) break;
      ++m[static_cast<std::size_t>(k)];
    }
  }
  return std::nullopt;
}

namespace fans {

Fan surface_from_rays(std::vector<Vec> rays) {
  auto ord = cyclic_order(rays);
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t i = 0; i < ord.size(); ++i) cones.push_back({ord[i], ord[(i + 1) % ord.size()]});
  return Fan(2, std::move(rays), cones);
}

Fan projective_plane() { return surface_from_rays({{1, 0}, {0, 1}, {-1, -1}}); }

Fan projective_space3() {
  return Fan(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}}, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

Fan hirzebruch(long long c) { return surface_from_rays({{1, 0}, {0, 1}, {-1, c}, {0, -1}}); }

Fan scroll_surface(long long a, long long b) { return hirzebruch(b - a); }

}  // namespace fans

}  // namespace fanocert::toric
