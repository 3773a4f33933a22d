#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fanocert/exact/polynomial.hpp"

namespace fanocert::veronese {

using exact::Rational;
using Poly = exact::Polynomial<Rational>;

/// x, y, z, s, t, u on P^5.
exact::Variables p5_variables();

/// xy - u^2, yz - s^2, zx - t^2, xs - tu, yt - us, zu - st
std::vector<Poly> veronese_ideal();
/// All 2x2 minors of [[x,u,t],[u,y,s],[t,s,z]].
std::vector<Poly> symmetric_matrix_minors();
Poly symmetric_matrix_det();
/// xyz + 2stu - xs^2 - yt^2 - zu^2
Poly secant_cubic();

/// [X^2 : Y^2 : Z^2 : YZ : ZX : XY]
std::vector<Rational> veronese_map(const std::vector<Rational>& p);

enum class SecantStratum { OnVeronese, OnSecantOnly, Generic };
std::string to_string(SecantStratum s);

SecantStratum secant_stratum(const std::vector<Rational>& point);

// --- projection from [1:0:0:0:0:0] -------------------------------------

/// Z, S, T, U
exact::Variables projection_source_variables();
/// t, u
exact::Variables projection_target_variables();
/// Z -> t^2/w, S -> tu/w, T -> t/w, U -> u/w with w = 1 - u^2.
std::map<std::string, exact::RationalFunction<Rational>> projection_map();
/// S^2 - TU, ST - UZ as stated for the kernel.
std::vector<Poly> stated_projection_kernel();

struct ProjectionDegreeRow {
  unsigned degree = 0;
  std::size_t ring_dim = 0;
  std::size_t ideal_dim = 0;
  std::size_t image_dim = 0;
  bool identity_holds = false;  // ideal + image == ring
};

struct ProjectionKernelReport {
  std::vector<std::pair<Poly, exact::RationalFunction<Rational>>> membership;  // generator, image
  std::vector<ProjectionDegreeRow> rows;
  bool all_members_vanish = false;
  bool identity_holds = false;
};

/// Membership of each generator in Ker(psi) and the degreewise identity
/// dim I_d + dim psi(R_d) = dim R_d for d = 1..degree_bound.
ProjectionKernelReport projection_kernel_certificate(unsigned degree_bound,
                                                     const std::vector<Poly>& generators = stated_projection_kernel());

/// Hilbert function of k[Z,S,T,U]/I against that of R S + R[T], R = k[Z,U].
struct HilbertComparisonRow {
  unsigned degree = 0;
  std::size_t quotient = 0;
  std::size_t module = 0;
};
std::vector<HilbertComparisonRow> primality_hilbert_comparison(unsigned degree_bound,
                                                               const std::vector<Poly>& generators =
                                                                   stated_projection_kernel());

// --- singular quadric pencil -----------------------------------------------

/// a, b, y, z, s, t, u
exact::Variables pencil_variables();

struct PencilReport {
  Poly form;                      // a q1 + b q2
  std::vector<Poly> point;        // coordinates as polynomials in a, b
  std::vector<Poly> partials_at;  // d/dy .. d/du at the point, polynomials in a, b
  Poly value_at;
  bool singular = false;  // all of the above vanish identically
};

/// q1, q2 are parsed in (y, z, s, t, u); point entries in (a, b).
PencilReport quadric_pencil_singularity_certificate(const std::string& q1 = "s^2 - tu",
                                                    const std::string& q2 = "st - uz",
                                                    const std::vector<std::string>& point = {"1", "0", "0", "0",
                                                                                             "0"});

// --- hyperplane splitting of a singular quadric ------------------------------

enum class QuadricChoice { X0X1PlusX2Squared, X0X1PlusX2X3 };

/// x0..x4
exact::Variables split_variables();

struct SplitDegreeCheck {
  unsigned degree = 0;
  std::size_t lhs_dim = 0;  // (q, h)_d
  std::size_t rhs_dim = 0;  // (I_D cap I_D')_d
  bool contained = false;   // (q, h)_d inside both I_D and I_D'
};

struct SplitReport {
  Poly quadric;
  Poly hyperplane;
  std::vector<Poly> d;        // linear generators of D
  std::vector<Poly> d_prime;  // linear generators of D'
  std::vector<SplitDegreeCheck> checks;
  bool verified = false;
};

/// `avoid` lists the coordinates cutting out a torus-invariant linear subspace
/// that neither D nor D' may equal.
SplitReport split_hyperplane_certificate(QuadricChoice choice, const std::vector<std::size_t>& avoid = {},
                                         unsigned degree_bound = 3);

}  // namespace fanocert::veronese
