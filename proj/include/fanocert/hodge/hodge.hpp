#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fanocert/exact/polynomial.hpp"

namespace fanocert::hodge {

using exact::Integer;
using exact::Rational;
using Poly = exact::Polynomial<Rational>;

/// chi(O_{P^N}(m)) = (m+1)...(m+N)/N!, valid for every integer m.
Integer chi_pn(long long m, unsigned N);

/// Complete intersection of hypersurfaces of the given degrees in P^N.
struct CIData {
  unsigned ambient_dim = 0;
  std::vector<unsigned> degrees;

  CIData(unsigned N, std::vector<unsigned> d);
  unsigned dimension() const { return ambient_dim - static_cast<unsigned>(degrees.size()); }
  std::string to_string() const;
};

/// chi(O_X(k)) by Koszul inclusion-exclusion.
Integer ci_chi_twist(const CIData& ci, long long k);

/// A section of Omega^p(d): wedge index set -> coefficient form in x0..xN.
using Section = std::map<std::vector<std::size_t>, Poly>;

exact::Variables projective_variables(unsigned N);
std::string to_string(const Section& s);

struct EulerContractionDims {
  std::size_t source = 0;  // sum_{|I|=p} S_{d-p} e_I
  std::size_t target = 0;  // sum_{|J|=p-1} S_{d-p+1} e_J
  std::size_t image = 0;
  std::size_t kernel = 0;
};

EulerContractionDims euler_contraction_dimensions(unsigned p, long long d, unsigned N);

/// Kernel of the Euler contraction on sum_{|I|=p} S_{d-p} e_I.
std::size_t h0_omega_p(unsigned p, long long d, unsigned N);

/// zeta_{ijk} = x_i e_j^e_k + x_j e_k^e_i + x_k e_i^e_j for i < j < k (0-based), ordered lexicographically.
std::vector<Section> zeta_basis(unsigned N);

/// Euler contraction of a section: e_I -> sum_k (-1)^k x_{i_k} e_{I minus i_k}.
Section euler_contraction(const Section& s, unsigned N);

/// Sections of Omega^2_{P^3}(3) whose coefficient forms vanish on the curve
/// [c0 : c1 : c2 : c3], each ci a binary form of one degree in (s, t). An empty curve imposes no condition.
std::size_t omega2_vanishing_on_curve(const std::vector<Poly>& curve);
exact::Variables curve_variables();

struct HodgeDiamond {
  std::array<std::array<Integer, 4>, 4> h{};  // h[i][j] = h^{i,j}

  bool serre_symmetric() const;
  Integer euler_number() const;
  std::string to_string() const;
};

/// chi(Omega^1_X) from the conormal and Euler sequences.
Integer ci_chi_omega1(const CIData& ci);

HodgeDiamond ci_hodge_diamond(const CIData& ci);

}  // namespace fanocert::hodge
