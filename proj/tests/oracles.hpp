#pragma once

// Independent reference computations, used only by tests.

#include <vector>

#include "fanocert/exact/rational.hpp"
#include "fanocert/hodge/hodge.hpp"
#include "fanocert/veronese/conic.hpp"

namespace oracles {

using fanocert::exact::Integer;
using fanocert::exact::Rational;

inline Integer binom(long long n, long long k) {
  if (k < 0 || n < k) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

// Bott: h^0(P^N, Omega^p(d)) = C(d+N-p, d) C(d-1, p) for 0 < p and d > p.
inline Integer bott(unsigned p, long long d, unsigned N) {
  if (p == 0) return d < 0 ? Integer(0) : binom(d + N, N);
  if (p > N || d <= static_cast<long long>(p)) return 0;
  return binom(d + N - p, d) * binom(d - 1, p);
}

// chi(O_X(k)) from the Hilbert series prod(1 - t^d_i)/(1 - t)^{N+1}: the coefficients agree with the
// Hilbert polynomial for large k, which is interpolated back to any k.
inline Rational koszul_chi(const fanocert::hodge::CIData& ci, long long k) {
  const int n = 40;
  std::vector<Integer> series(n, 0);
  for (int i = 0; i < n; ++i) series[i] = binom(i + ci.ambient_dim, ci.ambient_dim);
  for (unsigned d : ci.degrees)
    for (int i = n - 1; i >= static_cast<int>(d); --i) series[i] -= series[i - d];
  const unsigned deg = ci.dimension();
  const int base = n - 1 - static_cast<int>(deg);
  Rational total(0);
  for (unsigned i = 0; i <= deg; ++i) {
    Rational li(1);
    for (unsigned j = 0; j <= deg; ++j)
      if (j != i) li = li * Rational(Integer(static_cast<long>(k - base - j)), Integer(static_cast<long>(i) - j));
    total = total + li * Rational(series[base + i]);
  }
  return total;
}

// chi(Omega^1_X) from the Koszul oracle through the conormal and Euler sequences.
inline Rational koszul_chi_omega1(const fanocert::hodge::CIData& ci) {
  Rational chi = Rational(static_cast<long long>(ci.ambient_dim + 1)) * koszul_chi(ci, -1) - koszul_chi(ci, 0);
  for (unsigned d : ci.degrees) chi = chi - koszul_chi(ci, -static_cast<long long>(d));
  return chi;
}

// e(X) = deg X * [h^3] (1+h)^{N+1} / prod (1 + d_i h)
inline Integer chern_euler_number(const fanocert::hodge::CIData& ci) {
  std::vector<Integer> c(4, 0);
  for (int i = 0; i < 4; ++i) c[i] = binom(ci.ambient_dim + 1, i);
  for (unsigned d : ci.degrees)
    for (int i = 1; i < 4; ++i) c[i] -= Integer(d) * c[i - 1];
  Integer deg = 1;
  for (unsigned d : ci.degrees) deg *= d;
  return deg * c[3];
}

// Smoothness by brute force: a singular point is a common zero of q and its partials.
// Over a perfect field of char 2 such a point is always rational, so enumerating P^2(F_q) suffices.
template <class K>
bool conic_smooth(const fanocert::veronese::QuadraticForm3<K>& q) {
  const auto& c = q.c;
  auto els = K::elements();
  for (const auto& x : els)
    for (const auto& y : els)
      for (const auto& z : els) {
        if (x.is_zero() && y.is_zero() && z.is_zero()) continue;
        K dx = c[5] * y + c[4] * z, dy = c[5] * x + c[3] * z, dz = c[4] * x + c[3] * y;
        if (dx.is_zero() && dy.is_zero() && dz.is_zero() && q(x, y, z).is_zero()) return false;
      }
  return true;
}

template <class K>
bool smooth_member_exists(const fanocert::veronese::ConicSubspace<K>& v) {
  auto els = K::elements();
  std::vector<std::size_t> idx(v.dimension(), 0);
  for (;;) {
    std::size_t i = 0;
    while (i < idx.size() && ++idx[i] == els.size()) idx[i++] = 0;
    if (i == idx.size()) return false;
    std::vector<K> combo;
    for (auto k : idx) combo.push_back(els[k]);
    if (conic_smooth(v.combine(combo))) return true;
  }
}

}  // namespace oracles
