#pragma once

#include <array>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "fanocert/exact/field.hpp"

namespace fanocert::veronese {

/// a x^2 + b y^2 + c z^2 + d yz + e zx + f xy over a field of characteristic 2.
template <class K>
struct QuadraticForm3 {
  std::array<K, 6> c{};  // a, b, c, d, e, f

  static QuadraticForm3 from(const K& a, const K& b, const K& cc, const K& d, const K& e, const K& f) {
    return QuadraticForm3{{a, b, cc, d, e, f}};
  }
  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }
  K operator()(const K& x, const K& y, const K& z) const {
    return c[0] * x * x + c[1] * y * y + c[2] * z * z + c[3] * y * z + c[4] * z * x + c[5] * x * y;
  }
  friend QuadraticForm3 operator+(QuadraticForm3 a, const QuadraticForm3& b) {
    for (int i = 0; i < 6; ++i) a.c[i] = a.c[i] + b.c[i];
    return a;
  }
  friend QuadraticForm3 operator*(const K& s, QuadraticForm3 q) {
    for (auto& x : q.c) x = s * x;
    return q;
  }
  friend bool operator==(const QuadraticForm3&, const QuadraticForm3&) = default;

  std::string to_string() const;
};

/// Linearly independent quadratic forms.
template <class K>
struct ConicSubspace {
  std::vector<QuadraticForm3<K>> basis;

  explicit ConicSubspace(std::vector<QuadraticForm3<K>> b);
  std::size_t dimension() const { return basis.size(); }
  QuadraticForm3<K> combine(const std::vector<K>& coefficients) const;
};

template <class K>
bool is_smooth_conic(const QuadraticForm3<K>& q);

template <class K>
struct ConicSearchResult {
  std::optional<QuadraticForm3<K>> form;
  std::vector<K> combination;  // coefficients on the input basis
  std::string path;            // "case I".."case IV", "normalized xy-term", "exhaustive"
};

template <class K>
ConicSearchResult<K> find_smooth_conic(const ConicSubspace<K>& v);

/// First smooth member in enumeration order, or none.
template <class K>
ConicSearchResult<K> exhaustive_smooth_conic(const ConicSubspace<K>& v);

/// Uniform random independent forms, dim <= 6.
template <class K>
ConicSubspace<K> random_conic_subspace(std::mt19937_64& rng, std::size_t dim);

extern template struct ConicSubspace<exact::F2>;
extern template struct ConicSubspace<exact::F4>;

}  // namespace fanocert::veronese
