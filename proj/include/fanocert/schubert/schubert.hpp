#pragma once

#include <compare>
#include <map>
#include <string>

#include "fanocert/exact/rational.hpp"

namespace fanocert::schubert {

using exact::Rational;

/// Two-row partition (a, b), a >= b >= 0; sigma_i abbreviates (i, 0).
struct Partition2 {
  int a = 0;
  int b = 0;

  int codim() const { return a + b; }
  bool valid_in(int n) const { return b >= 0 && a >= b && a <= n - 2; }
  std::string to_string() const;

  friend auto operator<=>(const Partition2&, const Partition2&) = default;
};

/// Rational combination of Schubert classes in the Chow ring of Gr(2, n).
class SchubertElement {
 public:
  explicit SchubertElement(int n);
  static SchubertElement unit(int n) { return schubert_class(n, {0, 0}); }
  static SchubertElement schubert_class(int n, Partition2 p, const Rational& coeff = Rational(1));
  static SchubertElement point_class(int n) { return schubert_class(n, {n - 2, n - 2}); }

  int ambient() const { return n_; }
  const std::map<Partition2, Rational>& coeffs() const { return coeffs_; }
  Rational coefficient(Partition2 p) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// Codimension if homogeneous and nonzero, -1 otherwise.
  int homogeneous_codim() const;

  void add(Partition2 p, const Rational& c);
  SchubertElement& operator+=(const SchubertElement& o);
  SchubertElement& operator-=(const SchubertElement& o);
  friend SchubertElement operator+(SchubertElement x, const SchubertElement& y) { return x += y; }
  friend SchubertElement operator-(SchubertElement x, const SchubertElement& y) { return x -= y; }
  friend SchubertElement operator*(const Rational& s, const SchubertElement& x);
  friend bool operator==(const SchubertElement&, const SchubertElement&) = default;

  /// e.g. "3*s[3,3]", "s[2,0] + s[1,1]", "0"
  std::string to_string() const;

 private:
  void require_same(const SchubertElement& o) const;

  int n_;
  std::map<Partition2, Rational> coeffs_;
};

/// Horizontal-strip rule for sigma_lambda * sigma_k.
SchubertElement pieri(Partition2 lambda, int k, int n);

/// Littlewood-Richardson coefficient for two-row shapes (always 0 or 1).
int lr_coefficient(Partition2 lambda, Partition2 mu, Partition2 nu);

/// Product via the two-row LR rule.
SchubertElement mul(const SchubertElement& x, const SchubertElement& y);
SchubertElement operator*(const SchubertElement& x, const SchubertElement& y);

/// Independent product: sigma_{c,d} = sigma_{1,1}^d sigma_{c-d}, using Pieri and
/// sigma_{1,1} sigma_{a,b} = sigma_{a+1,b+1}.
SchubertElement mul_via_pieri(const SchubertElement& x, const SchubertElement& y);

SchubertElement power(const SchubertElement& x, unsigned k);

/// Coefficient of the point class; input must be zero or of top codimension.
Rational degree(const SchubertElement& x);

}  // namespace fanocert::schubert
