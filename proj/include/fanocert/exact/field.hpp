#pragma once

#include <concepts>
#include <cstdint>
#include <string>
#include <vector>

#include "fanocert/error.hpp"
#include "fanocert/exact/rational.hpp"

namespace fanocert::exact {

template <class K>
concept Field = requires(K a, K b) {
  K(0);
  K(1);
  { a + b } -> std::convertible_to<K>;
  { a - b } -> std::convertible_to<K>;
  { a * b } -> std::convertible_to<K>;
  { a / b } -> std::convertible_to<K>;
  { -a } -> std::convertible_to<K>;
  { a == b } -> std::convertible_to<bool>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.to_string() } -> std::convertible_to<std::string>;
};

/// Prime field F_P, plain modular arithmetic.
template <unsigned P>
class Fp {
  static_assert(P >= 2 && P < 65536);

 public:
  Fp() = default;
  Fp(long long n) : v_(static_cast<unsigned>(((n % static_cast<long long>(P)) + P) % P)) {}  // NOLINT

  static constexpr unsigned characteristic() { return P; }
  static std::vector<Fp> elements() {
    std::vector<Fp> out;
    for (unsigned i = 0; i < P; ++i) out.emplace_back(i);
    return out;
  }

  unsigned value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp inverse() const {
    if (v_ == 0) throw Error("inverse of zero");
    // extended Euclid
    long long a = v_, b = P, x0 = 1, x1 = 0;
    while (b != 0) {
      long long q = a / b;
      long long t = a - q * b; a = b; b = t;
      t = x0 - q * x1; x0 = x1; x1 = t;
    }
    return Fp(x0);
  }

  friend Fp operator+(Fp a, Fp b) { return Fp(static_cast<long long>(a.v_) + b.v_); }
  friend Fp operator-(Fp a, Fp b) { return Fp(static_cast<long long>(a.v_) - b.v_); }
  friend Fp operator*(Fp a, Fp b) { return Fp(static_cast<long long>(a.v_) * b.v_); }
  friend Fp operator/(Fp a, Fp b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(-static_cast<long long>(v_)); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }
  Fp& operator/=(Fp o) { return *this = *this / o; }
  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

  std::string to_string() const { return std::to_string(v_); }

 private:
  unsigned v_ = 0;
};

namespace detail {
// x^k + (low bits); irreducible over F_2
constexpr unsigned gf2_modulus(unsigned k) {
  switch (k) {
    case 1: return 0b11;
    case 2: return 0b111;
    case 3: return 0b1011;
    case 4: return 0b10011;
    default: return 0;
  }
}
}  // namespace detail

/// F_{2^k} as F_2[w]/(irreducible of degree k); k = 2 uses w^2+w+1.
/// Element bits are the coordinates on 1, w, ..., w^{k-1}.
template <unsigned Kdeg>
class GF2 {
  static_assert(Kdeg >= 1 && Kdeg <= 4);

 public:
  static constexpr unsigned order = 1u << Kdeg;

  GF2() = default;
  GF2(long long n) : bits_(static_cast<unsigned>(n & 1)) {}  // NOLINT
  static GF2 from_bits(unsigned b) {
    GF2 g;
    g.bits_ = b & (order - 1);
    return g;
  }
  /// The class of w.
  static GF2 generator() { return from_bits(Kdeg == 1 ? 1u : 2u); }
  static std::vector<GF2> elements() {
    std::vector<GF2> out;
    for (unsigned b = 0; b < order; ++b) out.push_back(from_bits(b));
    return out;
  }
  static constexpr unsigned characteristic() { return 2; }

  unsigned bits() const { return bits_; }
  bool is_zero() const { return bits_ == 0; }

  friend GF2 operator+(GF2 a, GF2 b) { return from_bits(a.bits_ ^ b.bits_); }
  friend GF2 operator-(GF2 a, GF2 b) { return a + b; }
  GF2 operator-() const { return *this; }
  friend GF2 operator*(GF2 a, GF2 b) {
    unsigned r = 0, x = a.bits_, y = b.bits_;
    while (y != 0) {
      if (y & 1u) r ^= x;
      y >>= 1;
      x <<= 1;
      if (x & order) x ^= detail::gf2_modulus(Kdeg);
    }
    return from_bits(r);
  }
  GF2 inverse() const {
    if (bits_ == 0) throw Error("inverse of zero");
    // a^(q-2)
    GF2 r(1), base = *this;
    for (unsigned e = order - 2; e != 0; e >>= 1) {
      if (e & 1u) r = r * base;
      base = base * base;
    }
    return r;
  }
  friend GF2 operator/(GF2 a, GF2 b) { return a * b.inverse(); }
  GF2& operator+=(GF2 o) { return *this = *this + o; }
  GF2& operator-=(GF2 o) { return *this = *this - o; }
  GF2& operator*=(GF2 o) { return *this = *this * o; }
  GF2& operator/=(GF2 o) { return *this = *this / o; }
  friend bool operator==(GF2 a, GF2 b) { return a.bits_ == b.bits_; }

  /// Frobenius is bijective on a finite field of char 2.
  GF2 sqrt() const {
    GF2 r = *this;
    for (unsigned i = 1; i < Kdeg; ++i) r = r * r;
    return r;
  }

  std::string to_string() const {
    if (bits_ == 0) return "0";
    std::string s;
    for (int i = static_cast<int>(Kdeg) - 1; i >= 0; --i) {
      if (!(bits_ & (1u << i))) continue;
      if (!s.empty()) s += "+";
      s += i == 0 ? "1" : (i == 1 ? "w" : "w^" + std::to_string(i));
    }
    return s;
  }

 private:
  unsigned bits_ = 0;
};

using F2 = GF2<1>;
using F4 = GF2<2>;

static_assert(Field<Rational>);
static_assert(Field<Fp<7>>);
static_assert(Field<F4>);

}  // namespace fanocert::exact
