#pragma once

#include <set>
#include <utility>
#include <vector>

#include "fanocert/exact/rational.hpp"

namespace fanocert::numerology {

using exact::Rational;

struct DeltaGenusInput {
  unsigned dim = 0;
  Rational top_self_intersection;
  unsigned h0 = 0;
};

/// dim + A^dim - h0
Rational delta_genus(const DeltaGenusInput& in);

/// Degrees deg in 1..max_degree of a projection onto a surface T with T^2 = 4/deg and h0 = 5
/// for which Delta(T) = 4/deg - 3 is non-negative.
std::vector<unsigned> projection_degree_forcing(unsigned max_degree);

struct DivisibilitySolution {
  unsigned p = 0;
  unsigned g = 0;
  unsigned d = 0;
  friend auto operator<=>(const DivisibilitySolution&, const DivisibilitySolution&) = default;
};

/// All (p, g, d) with p prime, d >= 1, g in [g_min, g_max] minus `excluded` and 2g - 2 = 2 d p^2.
std::vector<DivisibilitySolution> p_divisibility_solutions(unsigned g_min, unsigned g_max,
                                                           const std::set<unsigned>& excluded);

bool is_prime(unsigned n);

long long scroll_degree(const std::vector<long long>& a);
/// Pairs 0 < a <= b with a + b = total.
std::vector<std::pair<unsigned, unsigned>> scroll_splittings(unsigned total);

struct Obstruction {
  long long value = 0;  // (2g - 8) + 4
  unsigned divisor = 0;
  bool obstructed = false;  // value not divisible by divisor
};

Obstruction g10_obstruction(unsigned g = 10, unsigned divisor = 3);

/// Riemann-Roch on a surface: chi(D) = chi(O) + D^2/2 is integral iff D^2 is even.
bool surface_rr_parity(long long d_squared);

}  // namespace fanocert::numerology
