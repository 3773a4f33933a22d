#include "fanocert/numerology/numerology.hpp"

#include <algorithm>
#include <numeric>

#include "fanocert/error.hpp"

namespace fanocert::numerology {

Rational delta_genus(const DeltaGenusInput& in) {
  return Rational(static_cast<long long>(in.dim)) + in.top_self_intersection - Rational(static_cast<long long>(in.h0));
}

std::vector<unsigned> projection_degree_forcing(unsigned max_degree) {
  std::vector<unsigned> out;
  for (unsigned deg = 1; deg <= max_degree; ++deg) {
    Rational a2(exact::Integer(4), exact::Integer(deg));
    if (delta_genus({2, a2, 5}).sign() >= 0) out.push_back(deg);
  }
  return out;
}

bool is_prime(unsigned n) {
  if (n < 2) return false;
  for (unsigned k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

std::vector<DivisibilitySolution> p_divisibility_solutions(unsigned g_min, unsigned g_max,
                                                           const std::set<unsigned>& excluded) {
  if (g_min > g_max) throw Error("empty genus range");
  std::vector<DivisibilitySolution> out;
  for (unsigned p = 2; p <= g_max; ++p) {
    if (!is_prime(p)) continue;
    for (unsigned g = std::max(g_min, 1u); g <= g_max; ++g) {
      if (excluded.contains(g)) continue;
      // 2g - 2 = 2 d p^2
      unsigned rest = g - 1;
      if (rest == 0 || rest % (p * p) != 0) continue;
      out.push_back({p, g, rest / (p * p)});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

long long scroll_degree(const std::vector<long long>& a) {
  for (long long x : a)
    if (x < 0) throw Error("scroll type entries must be non-negative");
  return std::accumulate(a.begin(), a.end(), 0LL);
}

std::vector<std::pair<unsigned, unsigned>> scroll_splittings(unsigned total) {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned a = 1; 2 * a <= total; ++a) out.emplace_back(a, total - a);
  return out;
}

Obstruction g10_obstruction(unsigned g, unsigned divisor) {
  if (divisor == 0) throw Error("divisor must be positive");
  Obstruction o;
  o.value = (2LL * g - 8) + 4;
  o.divisor = divisor;
  o.obstructed = o.value % static_cast<long long>(divisor) != 0;
  return o;
}

bool surface_rr_parity(long long d_squared) { return d_squared % 2 == 0; }

}  // namespace fanocert::numerology
