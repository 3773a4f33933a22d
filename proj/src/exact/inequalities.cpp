#include "fanocert/exact/inequalities.hpp"

#include <algorithm>

#include "fanocert/error.hpp"

namespace fanocert::exact {

namespace {

bool same(const Inequality& x, const Inequality& y) { return x.a == y.a && x.b == y.b; }

// scale so the first nonzero coefficient has absolute value 1; keeps duplicates detectable
Inequality normalize(Inequality q) {
  for (const auto& c : q.a) {
    if (c.is_zero()) continue;
    Rational s = c.abs().inverse();
    for (auto& x : q.a) x *= s;
    q.b *= s;
    break;
  }
  return q;
}

void push_unique(std::vector<Inequality>& v, Inequality q) {
  q = normalize(std::move(q));
  for (const auto& e : v)
    if (same(e, q)) return;
  v.push_back(std::move(q));
}

}  // namespace

std::optional<std::vector<Rational>> solve_inequalities(const std::vector<Inequality>& system,
                                                        std::size_t nvars) {
  for (const auto& q : system)
    if (q.a.size() != nvars) throw Error("inequality has wrong number of coefficients");

  // levels[k] holds the system in variables 0..k-1
  std::vector<std::vector<Inequality>> levels(nvars + 1);
  for (const auto& q : system) push_unique(levels[nvars], q);
  for (std::size_t k = nvars; k > 0; --k) {
    std::size_t j = k - 1;
    std::vector<Inequality> pos, neg;
    auto& next = levels[j];
    for (const auto& q : levels[k]) {
      int s = q.a[j].sign();
      if (s > 0) pos.push_back(q);
      else if (s < 0) neg.push_back(q);
      else push_unique(next, q);
    }
    for (const auto& p : pos) {
      for (const auto& n : neg) {
        Rational fp = -n.a[j], fn = p.a[j];  // both positive
        Inequality c;
        c.a.resize(nvars);
        for (std::size_t i = 0; i < nvars; ++i) c.a[i] = fp * p.a[i] + fn * n.a[i];
        c.a[j] = 0;
        c.b = fp * p.b + fn * n.b;
        push_unique(next, std::move(c));
      }
    }
  }
  for (const auto& q : levels[0])
    if (q.b > 0) return std::nullopt;

  std::vector<Rational> y(nvars, Rational(0));
  for (std::size_t j = 0; j < nvars; ++j) {
    std::optional<Rational> lo, hi;
    for (const auto& q : levels[j + 1]) {
      int s = q.a[j].sign();
      if (s == 0) continue;
      Rational rest = q.b;
      for (std::size_t i = 0; i < j; ++i) rest -= q.a[i] * y[i];
      Rational bound = rest / q.a[j];
      if (s > 0) {
        if (!lo || bound > *lo) lo = bound;
      } else {
        if (!hi || bound < *hi) hi = bound;
      }
    }
    if (lo && hi) y[j] = (*lo + *hi) / 2;
    else if (lo) y[j] = *lo;
    else if (hi) y[j] = *hi;
    if (lo && hi && *lo > *hi) throw Error("internal: Fourier-Motzkin back-substitution failed");
  }
  return y;
}

}  // namespace fanocert::exact
