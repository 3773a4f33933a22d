#pragma once

#include <optional>
#include <vector>

#include "fanocert/exact/rational.hpp"

namespace fanocert::exact {

/// a . y >= b
struct Inequality {
  std::vector<Rational> a;
  Rational b;
};

/// Exact feasibility by Fourier-Motzkin elimination; returns a witness.
/// Intended for a handful of variables (desk-scale cones).
std::optional<std::vector<Rational>> solve_inequalities(const std::vector<Inequality>& system,
                                                        std::size_t nvars);

}  // namespace fanocert::exact
