#include "fanocert/schubert/schubert.hpp"

#include "fanocert/error.hpp"

namespace fanocert::schubert {

std::string Partition2::to_string() const {
  return "s[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

SchubertElement::SchubertElement(int n) : n_(n) {
  if (n < 2) throw Error("Gr(2,n) needs n >= 2");
}

SchubertElement SchubertElement::schubert_class(int n, Partition2 p, const Rational& coeff) {
  SchubertElement x(n);
  if (!p.valid_in(n)) throw Error("invalid partition " + p.to_string() + " for Gr(2," + std::to_string(n) + ")");
  x.add(p, coeff);
  return x;
}

Rational SchubertElement::coefficient(Partition2 p) const {
  auto it = coeffs_.find(p);
  return it == coeffs_.end() ? Rational(0) : it->second;
}

int SchubertElement::homogeneous_codim() const {
  if (coeffs_.empty()) return -1;
  int c = coeffs_.begin()->first.codim();
  for (const auto& [p, q] : coeffs_)
    if (p.codim() != c) return -1;
  return c;
}

void SchubertElement::add(Partition2 p, const Rational& c) {
  if (!p.valid_in(n_)) throw Error("invalid partition " + p.to_string());
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void SchubertElement::require_same(const SchubertElement& o) const {
  if (n_ != o.n_) throw Error("ambient mismatch: Gr(2," + std::to_string(n_) + ") vs Gr(2," + std::to_string(o.n_) + ")");
}

SchubertElement& SchubertElement::operator+=(const SchubertElement& o) {
  require_same(o);
  for (const auto& [p, c] : o.coeffs_) add(p, c);
  return *this;
}

SchubertElement& SchubertElement::operator-=(const SchubertElement& o) {
  require_same(o);
  for (const auto& [p, c] : o.coeffs_) add(p, -c);
  return *this;
}

SchubertElement operator*(const Rational& s, const SchubertElement& x) {
  SchubertElement r(x.n_);
  for (const auto& [p, c] : x.coeffs_) r.add(p, s * c);
  return r;
}

std::string SchubertElement::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  // codimension ascending, then larger first row first
  std::map<std::pair<int, int>, std::pair<Partition2, Rational>> ordered;
  for (const auto& [p, c] : coeffs_) ordered.emplace(std::make_pair(p.codim(), -p.a), std::make_pair(p, c));
  bool first = true;
  for (const auto& [key, pc] : ordered) {
    const auto& [p, c] = pc;
    bool neg = c.sign() < 0;
    if (first) out += neg ? "-" : "";
    else out += neg ? " - " : " + ";
    first = false;
    Rational m = c.abs();
    if (!m.is_one()) out += m.to_string() + "*";
    out += p.to_string();
  }
  return out;
}

SchubertElement pieri(Partition2 lambda, int k, int n) {
  if (!lambda.valid_in(n)) throw Error("invalid partition " + lambda.to_string());
  if (k < 1 || k > n - 2) throw Error("pieri needs 1 <= k <= n-2");
  SchubertElement r(n);
  for (int b = lambda.b; b <= lambda.a; ++b) {
    int a = lambda.a + lambda.b + k - b;
    if (a < lambda.a || a > n - 2) continue;
    r.add({a, b}, Rational(1));
  }
  return r;
}

int lr_coefficient(Partition2 lambda, Partition2 mu, Partition2 nu) {
  if (nu.codim() != lambda.codim() + mu.codim()) return 0;
  if (nu.a < lambda.a || nu.b < lambda.b || nu.b > nu.a) return 0;
  // first skew row holds only 1s; second row holds r 1s then mu.b 2s
  int p = nu.a - lambda.a;
  int r = mu.a - p;
  if (r < 0) return 0;
  if (nu.b - lambda.b - r != mu.b) return 0;
  if (lambda.b + r > lambda.a) return 0;  // column strictness
  if (mu.b > p) return 0;                 // lattice condition
  return 1;
}

SchubertElement mul(const SchubertElement& x, const SchubertElement& y) {
  if (x.ambient() != y.ambient()) throw Error("ambient mismatch in Schubert product");
  int n = x.ambient();
  SchubertElement r(n);
  for (const auto& [lam, cx] : x.coeffs()) {
    for (const auto& [mu, cy] : y.coeffs()) {
      int total = lam.codim() + mu.codim();
      for (int b = 0; b <= n - 2; ++b) {
        int a = total - b;
        if (a < b || a > n - 2) continue;
        if (lr_coefficient(lam, mu, {a, b}) == 1) r.add({a, b}, cx * cy);
      }
    }
  }
  return r;
}

SchubertElement operator*(const SchubertElement& x, const SchubertElement& y) { return mul(x, y); }

namespace {

SchubertElement times_sigma11(const SchubertElement& x) {
  SchubertElement r(x.ambient());
  for (const auto& [p, c] : x.coeffs())
    if (p.a + 1 <= x.ambient() - 2) r.add({p.a + 1, p.b + 1}, c);
  return r;
}

SchubertElement times_special(const SchubertElement& x, int k) {
  if (k == 0) return x;
  SchubertElement r(x.ambient());
  for (const auto& [p, c] : x.coeffs()) r += c * pieri(p, k, x.ambient());
  return r;
}

}  // namespace

SchubertElement mul_via_pieri(const SchubertElement& x, const SchubertElement& y) {
  if (x.ambient() != y.ambient()) throw Error("ambient mismatch in Schubert product");
  SchubertElement r(x.ambient());
  for (const auto& [mu, c] : y.coeffs()) {
    SchubertElement t = times_special(x, mu.a - mu.b);
    for (int i = 0; i < mu.b; ++i) t = times_sigma11(t);
    r += c * t;
  }
  return r;
}

SchubertElement power(const SchubertElement& x, unsigned k) {
  SchubertElement r = SchubertElement::unit(x.ambient());
  for (unsigned i = 0; i < k; ++i) r = mul(r, x);
  return r;
}

Rational degree(const SchubertElement& x) {
  if (x.is_zero()) return Rational(0);
  int top = 2 * (x.ambient() - 2);
  if (x.homogeneous_codim() != top) throw Error("degree of a class that is not of top codimension: " + x.to_string());
  return x.coefficient({x.ambient() - 2, x.ambient() - 2});
}

}  // namespace fanocert::schubert
