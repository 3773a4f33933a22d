#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace fanocert::exact {

using Integer = mpz_class;

std::string to_string(const Integer& z);

/// Arbitrary-precision rational in lowest terms with positive denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long long n) : q_(static_cast<long>(n)) {}  // NOLINT
  Rational(int n) : q_(n) {}                           // NOLINT
  Rational(const Integer& n) : q_(n) {}                // NOLINT
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  /// Accepts "p" or "p/q" with optional leading sign.
  static Rational parse(std::string_view text);

  Integer num() const { return q_.get_num(); }
  Integer den() const { return q_.get_den(); }
  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  Rational inverse() const;
  Rational abs() const { return Rational(::abs(q_)); }

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p" for integers, "p/q" otherwise.
  std::string to_string() const;
  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_{0};
};

inline std::string to_string(const Rational& r) { return r.to_string(); }

}  // namespace fanocert::exact
