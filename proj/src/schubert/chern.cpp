#include "fanocert/schubert/chern.hpp"

#include "fanocert/error.hpp"
#include "fanocert/exact/graded.hpp"

namespace fanocert::schubert {

namespace {

exact::Variables formal_variables(int cap) {
  std::vector<std::string> names{"s1", "s11"};
  for (int k = 2; k <= cap; ++k) names.push_back("s" + std::to_string(k));
  return exact::make_variables(std::move(names));
}

Rational factorial(int k) {
  Rational r(1);
  for (int i = 2; i <= k; ++i) r *= Rational(i);
  return r;
}

}  // namespace

FormalRing::FormalRing(int cap) : cap_(cap), vars_(formal_variables(cap)) {
  if (cap < 1) throw Error("truncation cap must be positive");
  weights_ = {1, 2};
  for (int k = 2; k <= cap; ++k) weights_.push_back(static_cast<unsigned>(k));
}

FormalClass FormalRing::special(int k) const {
  if (k < 1 || k > cap_) throw Error("special class index out of range");
  return FormalClass::variable(vars_, "s" + std::to_string(k));
}

unsigned FormalRing::weight(const exact::Exponents& e) const {
  unsigned w = 0;
  for (std::size_t i = 0; i < e.size(); ++i) w += e[i] * weights_[i];
  return w;
}

int FormalRing::weighted_degree(const FormalClass& x) const {
  if (x.is_zero()) return -1;
  int w = -1;
  for (const auto& [e, c] : x.terms()) {
    int we = static_cast<int>(weight(e));
    if (w == -1) w = we;
    else if (w != we) return -2;
  }
  return w;
}

FormalClass FormalRing::component(const FormalClass& x, unsigned w) const {
  FormalClass r(vars_);
  for (const auto& [e, c] : x.terms())
    if (weight(e) == w) r.add_term(e, c);
  return r;
}

FormalClass FormalRing::truncate(const FormalClass& x) const {
  FormalClass r(vars_);
  for (const auto& [e, c] : x.terms())
    if (weight(e) <= static_cast<unsigned>(cap_)) r.add_term(e, c);
  return r;
}

ChernVector trivial_chern(const FormalRing& ring, int rank) {
  ChernVector v;
  v.rank = rank;
  v.c.assign(static_cast<std::size_t>(ring.cap()) + 1, ring.zero());
  v.c[0] = ring.constant(1);
  return v;
}

ChernVector tautological_sub_chern(const FormalRing& ring) {
  ChernVector v = trivial_chern(ring, 2);
  v.c[1] = -ring.s1();
  if (ring.cap() >= 2) v.c[2] = ring.s11();
  return v;
}

ChernVector dual_quotient_chern(const FormalRing& ring, int n) {
  ChernVector v = trivial_chern(ring, n - 2);
  for (int k = 1; k <= std::min(ring.cap(), n - 2); ++k)
    v.c[static_cast<std::size_t>(k)] = Rational(k % 2 == 0 ? 1 : -1) * ring.special(k);
  return v;
}

ChernCharacter chern_to_character(const FormalRing& ring, const ChernVector& cv) {
  std::size_t cap = static_cast<std::size_t>(ring.cap());
  if (cv.c.size() != cap + 1) throw Error("Chern vector length does not match the truncation cap");
  // Newton: k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
  std::vector<FormalClass> p(cap + 1, ring.zero());
  for (std::size_t k = 1; k <= cap; ++k) {
    FormalClass acc = Rational(static_cast<long long>(k)) * cv.c[k];
    for (std::size_t i = 1; i < k; ++i) {
      Rational sign((i - 1) % 2 == 0 ? 1 : -1);
      acc -= sign * (cv.c[k - i] * p[i]);
    }
    Rational sign((k - 1) % 2 == 0 ? 1 : -1);
    p[k] = sign * acc;
  }
  ChernCharacter ch;
  ch.rank = Rational(cv.rank);
  ch.ch.assign(cap + 1, ring.zero());
  ch.ch[0] = ring.constant(ch.rank);
  for (std::size_t k = 1; k <= cap; ++k)
    ch.ch[k] = ring.truncate(factorial(static_cast<int>(k)).inverse() * p[k]);
  return ch;
}

ChernVector character_to_chern(const FormalRing& ring, const ChernCharacter& ch, int rank) {
  std::size_t cap = static_cast<std::size_t>(ring.cap());
  if (ch.ch.size() != cap + 1) throw Error("Chern character length does not match the truncation cap");
  if (ch.rank != Rational(rank) || ch.ch[0] != ring.constant(Rational(rank)))
    throw Error("Chern character degree-0 part differs from the rank");
  std::vector<FormalClass> p(cap + 1, ring.zero());
  for (std::size_t k = 1; k <= cap; ++k) p[k] = factorial(static_cast<int>(k)) * ch.ch[k];
  ChernVector cv = trivial_chern(ring, rank);
  for (std::size_t k = 1; k <= cap; ++k) {
    FormalClass acc = ring.zero();
    for (std::size_t i = 1; i <= k; ++i) {
      Rational sign((i - 1) % 2 == 0 ? 1 : -1);
      acc += sign * (cv.c[k - i] * p[i]);
    }
    cv.c[k] = ring.truncate(Rational(static_cast<long long>(k)).inverse() * acc);
  }
  return cv;
}

ChernCharacter character_mul(const FormalRing& ring, const ChernCharacter& a, const ChernCharacter& b) {
  std::size_t cap = static_cast<std::size_t>(ring.cap());
  if (a.ch.size() != cap + 1 || b.ch.size() != cap + 1) throw Error("Chern character length mismatch");
  ChernCharacter r;
  r.rank = a.rank * b.rank;
  r.ch.assign(cap + 1, ring.zero());
  for (std::size_t i = 0; i <= cap; ++i)
    for (std::size_t j = 0; i + j <= cap; ++j) r.ch[i + j] += a.ch[i] * b.ch[j];
  return r;
}

ChernCharacter line_bundle_character(const FormalRing& ring, const FormalClass& c1) {
  if (!c1.is_zero() && ring.weighted_degree(c1) != 1) throw Error("line bundle class must have weight 1");
  std::size_t cap = static_cast<std::size_t>(ring.cap());
  ChernCharacter r;
  r.rank = 1;
  r.ch.assign(cap + 1, ring.zero());
  FormalClass pw = ring.constant(1);
  for (std::size_t k = 0; k <= cap; ++k) {
    r.ch[k] = factorial(static_cast<int>(k)).inverse() * pw;
    pw = pw * c1;
  }
  return r;
}

ChernVector twist(const FormalRing& ring, const ChernVector& e, const FormalClass& c1) {
  return character_to_chern(ring, character_mul(ring, chern_to_character(ring, e), line_bundle_character(ring, c1)),
                            e.rank);
}

SchubertElement realize(const FormalRing& ring, const FormalClass& x, int n) {
  const auto& names = *ring.variables();
  std::vector<SchubertElement> images;
  for (const auto& name : names) {
    if (name == "s11") {
      images.push_back(n >= 3 ? SchubertElement::schubert_class(n, {1, 1}) : SchubertElement(n));
    } else {
      int k = std::stoi(name.substr(1));
      images.push_back(k <= n - 2 ? SchubertElement::schubert_class(n, {k, 0}) : SchubertElement(n));
    }
  }
  SchubertElement out(n);
  for (const auto& [e, c] : x.terms()) {
    SchubertElement t = c * SchubertElement::unit(n);
    for (std::size_t i = 0; i < e.size(); ++i) t = mul(t, power(images[i], e[i]));
    out += t;
  }
  return out;
}

SeparabilityCertificate v5_separability_certificate(int cap) {
  if (cap < 3) throw Error("the separability certificate needs truncation cap >= 3");
  const int n = 5;
  FormalRing ring(cap);
  SeparabilityCertificate cert;
  cert.ch_sub = chern_to_character(ring, tautological_sub_chern(ring));
  cert.ch_quotient_dual = chern_to_character(ring, dual_quotient_chern(ring, n));
  cert.ch_omega = character_mul(ring, cert.ch_sub, cert.ch_quotient_dual);
  cert.c_omega = character_to_chern(ring, cert.ch_omega, 6);
  cert.ch_omega_twisted =
      character_mul(ring, cert.ch_omega, line_bundle_character(ring, Rational(2) * ring.s1()));
  cert.c_twisted = character_to_chern(ring, cert.ch_omega_twisted, 6);

  // c_t(Omega_V(2)) = c_t(Omega_G(2)|V) * (1 + s1 t)^{-3}
  std::vector<FormalClass> inv(4, ring.zero());
  for (std::size_t k = 0; k < 4; ++k) inv[k] = Rational(k % 2 == 0 ? 1 : -1) * ring.s1().pow(static_cast<unsigned>(k));
  std::vector<FormalClass> series{ring.constant(1), ring.zero(), ring.zero(), ring.zero()};
  for (int f = 0; f < 3; ++f) {
    std::vector<FormalClass> next(4, ring.zero());
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; i + j < 4; ++j) next[i + j] += series[i] * inv[j];
    series = next;
  }
  for (std::size_t k = 4; k-- > 0;) {
    exact::Exponents e(ring.variables()->size(), 0);
    e[0] = static_cast<unsigned>(k);
    cert.restriction_coefficients.push_back(series[k].coefficient(e));
  }

  cert.c3_restricted = ring.zero();
  for (std::size_t k = 0; k <= 3; ++k) cert.c3_restricted += cert.c_twisted.c[3 - k] * series[k];

  // V has class s1^3 in Gr(2,5)
  SchubertElement hyper3 = power(SchubertElement::schubert_class(n, {1, 0}), 3);
  Rational total(0);
  // every weight-3 monomial in term order, so zero coefficients still get a row
  FormalClass all3 = ring.zero();
  for (unsigned d = 1; d <= 3; ++d)
    for (const auto& m : exact::monomials_of_degree(ring.variables()->size(), d))
      if (ring.weight(m) == 3) all3.add_term(m, Rational(1));
  for (const auto& [e, one] : all3.terms()) {
    FormalClass mono = FormalClass::monomial(ring.variables(), e);
    Rational deg = degree(mul(realize(ring, mono, n), hyper3));
    cert.degree_table.emplace_back(mono, deg);
    total += cert.c3_restricted.coefficient(e) * deg;
  }
  if (!total.is_integer()) throw Error("separability degree is not an integer");
  cert.value = total.num();
  return cert;
}

}  // namespace fanocert::schubert
