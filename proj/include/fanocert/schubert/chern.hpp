#pragma once

#include <string>
#include <utility>
#include <vector>

#include "fanocert/exact/polynomial.hpp"
#include "fanocert/schubert/schubert.hpp"

namespace fanocert::schubert {

/// Polynomial in the special classes s1, s11, s2, ..., s_cap with powers left
/// unexpanded; weights: s_k has weight k, s11 has weight 2.
using FormalClass = exact::Polynomial<Rational>;

class FormalRing {
 public:
  explicit FormalRing(int cap = 3);

  int cap() const { return cap_; }
  const exact::Variables& variables() const { return vars_; }

  FormalClass zero() const { return FormalClass(vars_); }
  FormalClass constant(const Rational& c) const { return FormalClass::constant(vars_, c); }
  FormalClass s1() const { return special(1); }
  FormalClass s11() const { return FormalClass::variable(vars_, "s11"); }
  /// s_k for 1 <= k <= cap
  FormalClass special(int k) const;
  FormalClass parse(std::string_view text) const { return FormalClass::parse(vars_, text); }

  unsigned weight(const exact::Exponents& e) const;
  /// -1 for zero, -2 if mixed
  int weighted_degree(const FormalClass& x) const;
  FormalClass component(const FormalClass& x, unsigned w) const;
  FormalClass truncate(const FormalClass& x) const;

 private:
  int cap_;
  exact::Variables vars_;
  std::vector<unsigned> weights_;
};

struct ChernVector {
  int rank = 0;
  std::vector<FormalClass> c;  // c[0] = 1, ..., c[cap]
};

struct ChernCharacter {
  Rational rank;
  std::vector<FormalClass> ch;  // ch[0] = rank, ..., ch[cap]
};

/// c_t(S) = 1 - s1 t + s11 t^2, rank 2.
ChernVector tautological_sub_chern(const FormalRing& ring);
/// c_t(Q*) = 1 - s1 t + s2 t^2 - s3 t^3 ..., rank n-2 (truncated at cap).
ChernVector dual_quotient_chern(const FormalRing& ring, int n);
ChernVector trivial_chern(const FormalRing& ring, int rank);

ChernCharacter chern_to_character(const FormalRing& ring, const ChernVector& c);
ChernVector character_to_chern(const FormalRing& ring, const ChernCharacter& ch, int rank);
ChernCharacter character_mul(const FormalRing& ring, const ChernCharacter& a, const ChernCharacter& b);
/// exp(c1) truncated
ChernCharacter line_bundle_character(const FormalRing& ring, const FormalClass& c1);
/// c(E (x) L) for a line bundle L with first Chern class c1
ChernVector twist(const FormalRing& ring, const ChernVector& e, const FormalClass& c1);

/// Evaluate the formal class in the Schubert basis of Gr(2, n).
SchubertElement realize(const FormalRing& ring, const FormalClass& x, int n);

struct SeparabilityCertificate {
  ChernCharacter ch_sub;
  ChernCharacter ch_quotient_dual;
  ChernCharacter ch_omega;          // ch(S) ch(Q*)
  ChernCharacter ch_omega_twisted;  // times ch(O(2 s1))
  ChernVector c_omega;              // c(Omega_G), untwisted
  ChernVector c_twisted;            // c(Omega_G(2))
  std::vector<Rational> restriction_coefficients;  // coefficients of s1^3, s1^2, s1, 1
  FormalClass c3_restricted;
  std::vector<std::pair<FormalClass, Rational>> degree_table;  // monomial, degree on V
  exact::Integer value;
};

/// c3 of Omega_V(2) for V = Gr(2,5) cut by three hyperplanes, as a degree.
SeparabilityCertificate v5_separability_certificate(int cap = 3);

}  // namespace fanocert::schubert
