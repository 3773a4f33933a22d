#pragma once

#include <cstddef>
#include <vector>

#include "fanocert/toric/fan.hpp"

namespace fanocert::toric {

/// Ray indices sorted counterclockwise starting from the positive x half-axis.
std::vector<std::size_t> cyclic_order(const std::vector<Vec>& rays);

/// D_i^2 = -c with u_{i-1} + u_{i+1} = c u_i; indexed like fan.rays().
std::vector<long long> surface_self_intersections(const Fan& fan);

/// 1 if rays i and j span a cone, else 0.
long long surface_intersection(const Fan& fan, std::size_t i, std::size_t j);

/// Intersection number of two torus-invariant divisors on a smooth complete surface.
long long divisor_intersection(const Fan& fan, const TorusDivisor& a, const TorusDivisor& b);

/// Star subdivision of the given 2D cone by the sum of its rays.
Fan blow_up_surface(const Fan& fan, std::size_t cone_index);

}  // namespace fanocert::toric
