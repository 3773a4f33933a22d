#include "fanocert/certify/suites.hpp"

#include <algorithm>
#include <functional>
#include <future>
#include <random>
#include <sstream>

#include "fanocert/error.hpp"
#include "fanocert/hodge/hodge.hpp"
#include "fanocert/numerology/numerology.hpp"
#include "fanocert/schubert/chern.hpp"
#include "fanocert/schubert/schubert.hpp"
#include "fanocert/toric/fan.hpp"
#include "fanocert/toric/surface.hpp"
#include "fanocert/veronese/conic.hpp"
#include "fanocert/veronese/veronese.hpp"

namespace fanocert::certify {

namespace {

using P = Provenance;
using Group = std::function<std::vector<Certificate>(const SuiteConfig&)>;
using schubert::SchubertElement;

std::string str(bool b) { return b ? "true" : "false"; }

template <class T>
std::string list(const std::vector<T>& xs) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) os << ", ";
    if constexpr (std::is_same_v<T, std::string>)
      os << xs[i];
    else if constexpr (requires { xs[i].to_string(); })
      os << xs[i].to_string();
    else
      os << xs[i];
  }
  os << "]";
  return os.str();
}

// --- schubert ----------------------------------------------------------------

std::vector<Certificate> schubert_golden(const SuiteConfig&) {
  using namespace schubert;
  std::vector<Certificate> out;
  auto cert = v5_separability_certificate();
  FormalRing R(3);
  auto canon = [&](const char* s) { return R.parse(s).to_string(); };

  out.push_back(check("ch-omega-g-1", "degree-1 part of ch(Omega_G), G = Gr(2,5)", canon("-5 s1"), P::Paper,
                      cert.ch_omega.ch[1].to_string()));
  out.push_back(check("ch-omega-g-2", "degree-2 part of ch(Omega_G)", canon("7/2 s1^2 - 3 s11 - 2 s2"), P::Paper,
                      cert.ch_omega.ch[2].to_string()));
  out.push_back(check("ch-omega-g-3", "degree-3 part of ch(Omega_G)", canon("-11/6 s1^3 + 5/2 s1 s11 + 2 s1 s2 - s3"),
                      P::Paper, cert.ch_omega.ch[3].to_string()));
  out.push_back(check("omega-g-twist-c1", "c1(Omega_G(2))", canon("7 s1"), P::Paper, cert.c_twisted.c[1].to_string()));
  out.push_back(check("omega-g-twist-c2", "c2(Omega_G(2))", canon("19 s1^2 + 3 s11 + 2 s2"), P::Paper,
                      cert.c_twisted.c[2].to_string()));
  out.push_back(check("omega-g-twist-c3", "c3(Omega_G(2))", canon("145 s1^3 + 14 s1 s11 + 10 s1 s2 - 2 s3"), P::Paper,
                      cert.c_twisted.c[3].to_string()));
  out.push_back(check("omega-g-twist-c3-newton", "c3(Omega_G(2)) against the Newton-identity inversion",
                      canon("25 s1^3 + 14 s1 s11 + 10 s1 s2 - 2 s3"), P::Derived, cert.c_twisted.c[3].to_string()));
  std::vector<std::string> coeffs;
  for (const auto& c : cert.restriction_coefficients) coeffs.push_back(c.to_string());
  out.push_back(check("c3-restriction-coefficients", "coefficients of s1^3, s1^2 c1, s1 c2, c3 in c3(Omega_V(2))",
                      "[-10, 6, -3, 1]", P::Paper, list(coeffs)));
  out.push_back(check("c3-omega-v5-restricted", "c3(Omega_V(2)) in restricted classes",
                      canon("120 s1^3 + 5 s1 s11 + 4 s1 s2 - 2 s3"), P::Paper, cert.c3_restricted.to_string()));

  auto s1 = SchubertElement::schubert_class(5, {1, 0});
  auto deg = [&](const SchubertElement& x) { return degree(x).to_string(); };
  std::vector<std::string> table = {deg(power(s1, 6)), deg(power(s1, 4) * SchubertElement::schubert_class(5, {1, 1})),
                                    deg(power(s1, 4) * SchubertElement::schubert_class(5, {2, 0})),
                                    deg(power(s1, 3) * SchubertElement::schubert_class(5, {3, 0}))};
  out.push_back(check("gr25-degree-table", "degrees of s1^6, s1^4 s11, s1^4 s2, s1^3 s3 on Gr(2,5)", "[5, 2, 3, 1]",
                      P::Paper, list(table)));
  out.push_back(check("c3-omega-v5-twist", "degree of c3(Omega_V(2)) on V5", "620", P::Paper,
                      exact::to_string(cert.value)));

  // V5: H^3 = 5, c1 = 2H, c2.H = 12, e = 4; c3(Omega(2)) = L^3 + c1(Omega) L^2 + c2 L + c3(Omega), L = 2H
  long long H3 = 5, c2H = 12, e = 4;
  long long invariants = 8 * H3 - 2 * 4 * H3 + 2 * c2H - e;
  out.push_back(check("c3-omega-v5-invariants", "same degree from the invariants of V5", std::to_string(invariants),
                      P::Derived, exact::to_string(cert.value)));
  return out;
}

std::vector<SchubertElement> random_elements(int n, std::mt19937_64& rng, std::size_t count) {
  using namespace schubert;
  std::vector<Partition2> parts;
  for (int a = 0; a <= n - 2; ++a)
    for (int b = 0; b <= a; ++b) parts.push_back({a, b});
  std::uniform_int_distribution<int> coef(-3, 3);
  std::vector<SchubertElement> out;
  for (std::size_t i = 0; i < count; ++i) {
    SchubertElement x(n);
    for (const auto& p : parts)
      if (rng() % 3 == 0) x.add(p, Rational(coef(rng)));
    out.push_back(std::move(x));
  }
  return out;
}


std::size_t pieri_disagreements(int n) {
  using namespace schubert;
  std::size_t bad = 0;
  for (int a = 0; a <= n - 2; ++a)
    for (int b = 0; b <= a; ++b)
      for (int k = 1; k <= n - 2; ++k) {
        auto lam = SchubertElement::schubert_class(n, {a, b});
        auto sk = SchubertElement::schubert_class(n, {k, 0});
        auto prod = mul(lam, sk);
        if (prod != pieri({a, b}, k, n) || prod != mul_via_pieri(lam, sk)) ++bad;
      }
  return bad;
}

std::size_t duality_failures(int n) {
  using namespace schubert;
  std::size_t bad = 0;
  int m = n - 2;
  for (int a = 0; a <= m; ++a)
    for (int b = 0; b <= a; ++b)
      for (int c = 0; c <= m; ++c)
        for (int d = 0; d <= c; ++d) {
          if (a + b + c + d != 2 * m) continue;
          bool dual = c == m - b && d == m - a;
          auto prod = SchubertElement::schubert_class(n, {a, b}) * SchubertElement::schubert_class(n, {c, d});
          if (degree(prod) != Rational(dual ? 1 : 0)) ++bad;
        }
  return bad;
}

std::size_t associativity_failures(int n, std::uint64_t seed, unsigned trials) {
  std::mt19937_64 rng(seed);
  std::size_t bad = 0;
  for (unsigned t = 0; t < trials; ++t) {
    auto xs = random_elements(n, rng, 3);
    using schubert::mul;
    if (mul(mul(xs[0], xs[1]), xs[2]) != mul(xs[0], mul(xs[1], xs[2])) || mul(xs[0], xs[1]) != mul(xs[1], xs[0])) ++bad;
  }
  return bad;
}


std::vector<Certificate> schubert_properties(const SuiteConfig& cfg) {
  std::vector<Certificate> out;
  out.push_back(check("gr25-mul-vs-pieri", "products s_lambda s_k in Gr(2,5) disagreeing with Pieri", "0", P::Derived,
                      std::to_string(pieri_disagreements(5))));
  out.push_back(check("gr25-duality", "complementary pairs failing to pair to 1 in Gr(2,5)", "0", P::Trivial,
                      std::to_string(duality_failures(5))));
  out.push_back(check("gr25-associativity", "random triples violating associativity or commutativity", "0",
                      P::Trivial, std::to_string(associativity_failures(5, cfg.seed, cfg.trials))));
  return out;
}

// --- toric -------------------------------------------------------------------

toric::Fan l014_bundle() { return toric::build_p1_bundle_fan(toric::fans::scroll_surface(1, 4), {1, 0, 0, 1}); }
toric::Fan l023_bundle() { return toric::build_p1_bundle_fan(toric::fans::scroll_surface(2, 3), {2, 0, 0, 1}); }

std::vector<long long> singular_multiplicities(const toric::Fan& f) {
  std::vector<long long> out;
  for (const auto& c : f.cones()) {
    auto s = toric::cone_is_smooth(f, c);
    if (!s.smooth) out.push_back(s.multiplicity.get_si());
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string fibration_string(const toric::Fan& f) {
  auto m = toric::fibration_to_p1(f);
  return m ? toric::to_string(*m) : "none";
}

std::vector<Certificate> toric_surfaces(const SuiteConfig& cfg) {
  using namespace toric;
  std::vector<Certificate> out;
  out.push_back(check("s14-self-intersections", "torus-invariant curve self-intersections on S(1,4)", "[0, -3, 0, 3]",
                      P::Paper, list(surface_self_intersections(fans::scroll_surface(1, 4)))));
  out.push_back(check("s23-self-intersections", "torus-invariant curve self-intersections on S(2,3)", "[0, -1, 0, 1]",
                      P::Paper, list(surface_self_intersections(fans::scroll_surface(2, 3)))));

  auto noether = [](const Fan& f) {
    long long s = 0;
    for (auto x : surface_self_intersections(f)) s += x;
    return s + 3 * static_cast<long long>(f.ray_count());
  };
  std::size_t bad = 0;
  for (const Fan& f : {fans::scroll_surface(1, 4), fans::scroll_surface(2, 3), fans::projective_plane()})
    if (noether(f) != 12) ++bad;
  std::mt19937_64 rng(cfg.seed);
  for (int t = 0; t < 50; ++t) {
    Fan f = fans::hirzebruch(static_cast<long long>(rng() % 6));
    int blowups = static_cast<int>(rng() % 5);
    for (int k = 0; k < blowups; ++k) f = blow_up_surface(f, rng() % f.cones().size());
    if (noether(f) != 12) ++bad;
  }
  out.push_back(check("noether-identity", "smooth complete surface fans violating sum D^2 + 3 #rays = 12", "0",
                      P::Trivial, std::to_string(bad)));

  Fan s14 = fans::scroll_surface(1, 4);
  std::size_t nonzero = 0;
  for (long long a = -3; a <= 3; ++a)
    for (long long b = -3; b <= 3; ++b) {
      auto p = principal_divisor(s14, {a, b});
      for (std::size_t j = 0; j < s14.ray_count(); ++j) {
        TorusDivisor dj(s14.ray_count(), 0);
        dj[j] = 1;
        if (divisor_intersection(s14, p, dj) != 0) ++nonzero;
      }
    }
  out.push_back(check("s14-principal-pairing", "principal divisor pairings on S(1,4) that are nonzero", "0",
                      P::Trivial, std::to_string(nonzero)));
  return out;
}

std::vector<Certificate> toric_l014(const SuiteConfig&) {
  using namespace toric;
  std::vector<Certificate> out;
  out.push_back(flag("l014-base-fan-typo", "base ray of S(1,4) printed as -e1+3e3", "(-1,0,3)", P::Paper, "(-1,3)",
                     "a surface fan lives in Z^2; the intersection numbers only work with -e1+3e2"));
  Fan b = l014_bundle();
  out.push_back(check("l014-bundle-cones", "maximal cones of the P1-bundle fan over S(1,4)", "8", P::Derived,
                      std::to_string(b.cones().size())));
  out.push_back(check("l014-bundle-complete", "the P1-bundle fan is complete and smooth", "true", P::Trivial,
                      str(b.is_complete() && fan_is_smooth(b))));
  std::string v5;
  try {
    contract_ray(b, 4);
    v5 = "contracted";
  } catch (const Error& e) {
    v5 = "not strongly convex";
  }
  out.push_back(check("l014-contract-v5", "contracting v5 leaves a cone that is not strongly convex",
                      "not strongly convex", P::Derived, v5));
  Fan d = contract_ray(b, 5);
  auto qs = enumerate_qfactorializations(d);
  out.push_back(check("l014-qfactorializations", "simplicial subdivisions after contracting v6", "2", P::Paper,
                      std::to_string(qs.size())));
  if (qs.size() == 2) {
    out.push_back(check("l014-delta1-smooth", "diagonal v1v3 gives a smooth fan", "false", P::Paper,
                        str(fan_is_smooth(qs[0].fan))));
    out.push_back(check("l014-delta1-multiplicities", "multiplicities of the singular cones, diagonal v1v3", "[4]",
                        P::Paper, list(singular_multiplicities(qs[0].fan))));
    out.push_back(check("l014-delta2-smooth", "diagonal v2v4 gives a smooth fan", "true", P::Paper,
                        str(fan_is_smooth(qs[1].fan))));
    out.push_back(check("l014-delta2-fibration", "first fibration covector, diagonal v2v4", "(1,0,0)", P::Derived,
                        fibration_string(qs[1].fan)));
  }
  return out;
}

std::vector<Certificate> toric_l023(const SuiteConfig&) {
  using namespace toric;
  std::vector<Certificate> out;
  Fan d = contract_ray(l023_bundle(), 5);
  auto qs = enumerate_qfactorializations(d);
  out.push_back(check("l023-qfactorializations", "simplicial subdivisions after contracting v6", "2", P::Paper,
                      std::to_string(qs.size())));
  if (qs.size() == 2) {
    out.push_back(check("l023-delta-v1v3-smooth", "diagonal v1v3 gives a smooth fan", "false", P::Derived,
                        str(fan_is_smooth(qs[0].fan))));
    out.push_back(check("l023-delta-v1v3-multiplicities", "multiplicities of the singular cones, diagonal v1v3",
                        "[2, 3]", P::Paper, list(singular_multiplicities(qs[0].fan))));
    out.push_back(check("l023-delta-v2v4-smooth", "diagonal v2v4 gives a smooth fan", "true", P::Derived,
                        str(fan_is_smooth(qs[1].fan))));
    out.push_back(check("l023-delta-v2v4-fibration", "first fibration covector, diagonal v2v4", "(1,0,0)",
                        P::Derived, fibration_string(qs[1].fan)));
    out.push_back(flag("l023-labeling-inconsistency", "which subdivision is smooth: statement against proof",
                       "statement: V1 singular, V2 smooth; proof: the opposite", P::Paper,
                       "v1v3 singular, v2v4 smooth", "verdicts above are keyed by diagonal, not by label"));
  }
  Fan p3 = fans::projective_space3();
  out.push_back(check("p3-fibration", "P3 admits no fibration to P1", "none", P::Trivial, fibration_string(p3)));
  return out;
}

// --- veronese ----------------------------------------------------------------

std::vector<Certificate> veronese_algebra(const SuiteConfig&) {
  using namespace veronese;
  std::vector<Certificate> out;
  std::vector<std::string> quoted, computed;
  for (const char* g : {"xy - u^2", "yz - s^2", "zx - t^2", "xs - tu", "yt - us", "zu - st"})
    quoted.push_back(Poly::parse(p5_variables(), g).to_string());
  for (const auto& g : veronese_ideal()) computed.push_back(g.to_string());
  out.push_back(check("veronese-ideal", "the six quadrics cutting out the Veronese surface", list(quoted), P::Paper,
                      list(computed)));
  bool minors = true;
  for (const auto& m : symmetric_matrix_minors()) {
    bool found = false;
    for (const auto& g : veronese_ideal()) found = found || m == g || m == -g;
    minors = minors && found;
  }
  out.push_back(check("veronese-minors", "2x2 minors of the symmetric matrix are the generators up to sign", "true",
                      P::Derived, str(minors)));
  out.push_back(check("veronese-secant-cubic", "xyz + 2stu - xs^2 - yt^2 - zu^2 is the determinant", "true", P::Paper,
                      str(secant_cubic() == symmetric_matrix_det())));
  auto pt = [](std::vector<int> v) {
    std::vector<Rational> r;
    for (int x : v) r.emplace_back(x);
    return r;
  };
  out.push_back(check("veronese-stratum-110000", "[1:1:0:0:0:0] lies on the secant variety only", "OnSecantOnly",
                      P::Paper, to_string(secant_stratum(pt({1, 1, 0, 0, 0, 0})))));
  out.push_back(check("veronese-stratum-100000", "[1:0:0:0:0:0] lies on the surface", "OnVeronese", P::Trivial,
                      to_string(secant_stratum(pt({1, 0, 0, 0, 0, 0})))));
  out.push_back(check("veronese-stratum-111000", "[1:1:1:0:0:0] is generic", "Generic", P::Trivial,
                      to_string(secant_stratum(pt({1, 1, 1, 0, 0, 0})))));
  out.push_back(flag("veronese-delta-genus-notation", "Delta-genus of the projected surface uses h0 of O_T",
                     "dim T + O_T(1)^2 - h0(T, O_T)", P::Paper, "dim T + O_T(1)^2 - h0(T, O_T(1))",
                     "h0(O_T) = 1 would not give the arithmetic 4/deg - 3; h0 of the polarization (5) does"));
  return out;
}

std::vector<Certificate> veronese_projection(const SuiteConfig& cfg) {
  using namespace veronese;
  std::vector<Certificate> out;
  unsigned bound = std::max(2u, cfg.degree_bound);
  auto r = projection_kernel_certificate(bound);
  out.push_back(check("veronese-kernel-S2-TU", "image of S^2 - TU under the projection", "0", P::Paper,
                      r.membership[0].second.to_string()));
  out.push_back(check("veronese-kernel-ST-UZ", "image of ST - UZ under the projection", "0", P::Paper,
                      r.membership[1].second.to_string()));
  auto sv = projection_source_variables();
  out.push_back(check("veronese-kernel-T2-S2-Z", "image of T^2 - S^2 - Z under the projection", "0", P::Derived,
                      exact::poly_substitute(Poly::parse(sv, "T^2 - S^2 - Z"), projection_map()).to_string()));

  auto rows = [](const ProjectionKernelReport& rep) {
    std::vector<std::string> out;
    for (const auto& row : rep.rows)
      out.push_back("d" + std::to_string(row.degree) + ":" + std::to_string(row.ideal_dim) + "+" +
                    std::to_string(row.image_dim) + "/" + std::to_string(row.ring_dim));
    return list(out);
  };
  auto c = check("veronese-hilbert-identity", "dim I_d + dim image_d = dim R_d for (S^2 - TU, ST - UZ), d <= bound",
                 "true", P::Paper, str(r.identity_holds));
  c.note = rows(r);
  out.push_back(c);
  auto p = projection_kernel_certificate(bound, {Poly::parse(sv, "ST - UZ")});
  c = check("veronese-hilbert-identity-principal", "the same identity for the principal ideal (ST - UZ)", "true",
            P::Derived, str(p.identity_holds));
  c.note = rows(p);
  out.push_back(c);

  auto r2 = projection_kernel_certificate(2);
  out.push_back(check("veronese-kernel-d2-dims", "ideal, image and ring dimensions in degree 2", "[2, 9, 10]",
                      P::Derived,
                      list(std::vector<std::size_t>{r2.rows[1].ideal_dim, r2.rows[1].image_dim, r2.rows[1].ring_dim})));

  auto hf = primality_hilbert_comparison(bound);
  bool equal = true;
  std::vector<std::string> detail;
  for (const auto& row : hf) {
    equal = equal && row.quotient == row.module;
    detail.push_back("d" + std::to_string(row.degree) + ":" + std::to_string(row.quotient) + "/" +
                     std::to_string(row.module));
  }
  c = check("veronese-primality-hilbert", "Hilbert function of the quotient equals that of R S + R[T], d <= bound",
            "true", P::Paper, str(equal));
  c.note = list(detail);
  out.push_back(c);
  return out;
}

std::vector<Certificate> veronese_quadrics(const SuiteConfig&) {
  using namespace veronese;
  std::vector<Certificate> out;
  auto pencil = quadric_pencil_singularity_certificate();
  out.push_back(check("veronese-pencil-singular", "a(s^2 - tu) + b(st - uz) is singular at [1:0:0:0:0] for all a, b",
                      "true", P::Paper, str(pencil.singular)));
  auto fixed = quadric_pencil_singularity_certificate("t^2 - s^2 - yz", "st - uz", {"b", "0", "0", "0", "-a"});
  out.push_back(check("veronese-pencil-corrected", "a(t^2 - s^2 - yz) + b(st - uz) is singular at [b:0:0:0:-a]",
                      "true", P::Derived, str(fixed.singular)));

  auto sq = split_hyperplane_certificate(QuadricChoice::X0X1PlusX2Squared);
  out.push_back(check("split-q1-hyperplane", "hyperplane splitting x0x1 + x2^2", "x2", P::Paper,
                      sq.hyperplane.to_string()));
  out.push_back(check("split-q1-components", "the two planes D, D'", "[(x0, x2), (x1, x2)]", P::Paper,
                      "[(" + sq.d[0].to_string() + ", " + sq.d[1].to_string() + "), (" + sq.d_prime[0].to_string() +
                          ", " + sq.d_prime[1].to_string() + ")]"));
  out.push_back(check("split-q1-ideal", "(q, h) = I_D cap I_D' in degrees <= 3", "true", P::Derived, str(sq.verified)));
  auto av = split_hyperplane_certificate(QuadricChoice::X0X1PlusX2Squared, {0, 2});
  out.push_back(check("split-q1-avoid", "hyperplane when D may not be {x0 = x2 = 0}", "x1 - x2", P::Paper, av.hyperplane.to_string()));
  out.push_back(check("split-q1-avoid-ideal", "ideal equality for that hyperplane", "true", P::Derived,
                      str(av.verified)));
  auto q2 = split_hyperplane_certificate(QuadricChoice::X0X1PlusX2X3, {0, 2});
  out.push_back(check("split-q2-avoid-ideal", "x0x1 + x2x3 avoiding {x0 = x2 = 0}: ideal equality", "true",
                      P::Derived, str(q2.verified)));
  return out;
}

std::vector<Certificate> veronese_conics(const SuiteConfig& cfg) {
  using namespace veronese;
  using exact::F2;
  using exact::F4;
  std::vector<Certificate> out;
  auto q = [](int a, int b, int c, int d, int e, int f) {
    return QuadraticForm3<F2>::from(F2(a), F2(b), F2(c), F2(d), F2(e), F2(f));
  };
  out.push_back(check("conic-xy-z2", "xy + z^2 is smooth over F2", "true", P::Derived,
                      str(is_smooth_conic(q(0, 0, 1, 0, 0, 1)))));
  out.push_back(check("conic-x2", "x^2 is singular over F2", "false", P::Trivial, str(is_smooth_conic(q(1, 0, 0, 0, 0, 0)))));
  out.push_back(check("conic-xy", "xy is singular over F2", "false", P::Derived, str(is_smooth_conic(q(0, 0, 0, 0, 0, 1)))));

  auto run = [&](auto tag, const char* name) {
    using K = decltype(tag);
    std::mt19937_64 rng(cfg.seed);
    std::size_t disagree = 0, bad = 0;
    for (unsigned t = 0; t < cfg.trials; ++t) {
      auto v = random_conic_subspace<K>(rng, 4);
      auto r = find_smooth_conic(v);
      bool exists = exhaustive_smooth_conic(v).form.has_value();
      if (r.form.has_value() != exists) ++disagree;
      if (r.form && (!(*r.form == v.combine(r.combination)) || !is_smooth_conic(*r.form))) ++bad;
    }
    out.push_back(check(std::string("conic-search-") + name, std::string("case analysis against exhaustive search on "
                                                                          "random 4-dim subspaces over ") + name,
                        "0", P::Derived, std::to_string(disagree + bad)));
  };
  run(F2{}, "F2");
  run(F4{}, "F4");
  return out;
}

// --- hodge -------------------------------------------------------------------

std::vector<Certificate> hodge_sections(const SuiteConfig&) {
  using namespace hodge;
  std::vector<Certificate> out;
  auto dims = euler_contraction_dimensions(2, 3, 3);
  out.push_back(check("omega2-p3-3-dims", "source, target and image of the Euler contraction for Omega^2(3) on P3",
                      "[24, 40, 20]", P::Paper, list(std::vector<std::size_t>{dims.source, dims.target, dims.image})));
  out.push_back(check("omega2-p3-3", "h0(P3, Omega^2(3))", "4", P::Paper, std::to_string(dims.kernel)));
  bool annihilated = true;
  for (const auto& z : zeta_basis(3)) annihilated = annihilated && euler_contraction(z, 3).empty();
  out.push_back(check("omega2-zeta-basis", "the four zeta sections are annihilated by the contraction", "true",
                      P::Paper, str(annihilated && zeta_basis(3).size() == 4)));
  out.push_back(check("omega1-p3-0", "h0(P3, Omega^1)", "0", P::Trivial, std::to_string(h0_omega_p(1, 0, 3))));
  out.push_back(check("omega1-p3-2", "h0(P3, Omega^1(2))", "6", P::Derived, std::to_string(h0_omega_p(1, 2, 3))));
  auto v = curve_variables();
  auto C = [&](const char* s) { return Poly::parse(v, s); };
  out.push_back(check("omega2-quartic-curve", "sections of Omega^2(3) vanishing on a rational quartic curve", "0",
                      P::Derived, std::to_string(omega2_vanishing_on_curve({C("s^4"), C("s^3t"), C("st^3"), C("t^4")}))));
  out.push_back(check("omega2-line", "sections of Omega^2(3) vanishing on a line", "0", P::Derived,
                      std::to_string(omega2_vanishing_on_curve({C("s"), C("t"), C("0"), C("0")}))));
  return out;
}

std::vector<Certificate> hodge_diamonds(const SuiteConfig&) {
  using namespace hodge;
  std::vector<Certificate> out;
  out.push_back(check("chi-p3-3", "chi(O_P3(3))", "20", P::Trivial, exact::to_string(chi_pn(3, 3))));
  out.push_back(check("chi-p4-minus5", "chi(O_P4(-5))", "1", P::Derived, exact::to_string(chi_pn(-5, 4))));
  out.push_back(check("chi-ci23", "chi(O_X) for X = (2,3) in P5", "1", P::Derived,
                      exact::to_string(ci_chi_twist(CIData(5, {2, 3}), 0))));
  struct Case {
    const char* id;
    CIData ci;
    const char* expected;
  };
  for (const auto& c : {Case{"cubic", CIData(4, {3}), "(1, 5)"}, Case{"quartic", CIData(4, {4}), "(1, 30)"}}) {
    auto d = ci_hodge_diamond(c.ci);
    out.push_back(check(std::string("diamond-") + c.id, std::string("(h11, h12) of the ") + c.id + " threefold",
                        c.expected, P::Derived,
                        "(" + exact::to_string(d.h[1][1]) + ", " + exact::to_string(d.h[1][2]) + ")"));
    bool shape = d.serre_symmetric() && d.h[0][0] == 1 && d.h[0][1] == 0 && d.h[0][2] == 0 && d.h[0][3] == 0;
    out.push_back(check(std::string("diamond-") + c.id + "-shape", "Serre symmetric with h00 = 1 and h0j = 0",
                        "true", P::Paper, str(shape)));
  }
  out.push_back(check("diamond-cubic-euler", "topological Euler number of the cubic threefold", "-6", P::Derived,
                      exact::to_string(ci_hodge_diamond(CIData(4, {3})).euler_number())));
  return out;
}

// --- numerology --------------------------------------------------------------

std::vector<Certificate> numerology_all(const SuiteConfig& cfg) {
  using namespace numerology;
  std::vector<Certificate> out;
  std::vector<std::string> sols;
  for (const auto& s : p_divisibility_solutions(cfg.genus_min, cfg.genus_max, cfg.excluded_genera))
    sols.push_back("(" + std::to_string(s.p) + ", " + std::to_string(s.g) + ", " + std::to_string(s.d) + ")");
  out.push_back(check("p-divisibility", "(p, g, d) with 2g - 2 = 2 d p^2 in the genus window", "[(2, 9, 2), (3, 10, 1)]",
                      P::Paper, list(sols)));
  std::vector<std::string> splits;
  for (auto [a, b] : scroll_splittings(5)) splits.push_back("(" + std::to_string(a) + ", " + std::to_string(b) + ")");
  out.push_back(check("scroll-splittings-5", "scroll types (a, b) with a + b = 5", "[(1, 4), (2, 3)]", P::Paper,
                      list(splits)));
  out.push_back(check("scroll-degree-014", "degree of S(0,1,4)", "5", P::Paper, std::to_string(scroll_degree({0, 1, 4}))));
  auto o = g10_obstruction();
  out.push_back(check("g10-obstruction", "(2g - 8) + 4 at g = 10 and whether 3 fails to divide it", "(16, true)",
                      P::Paper, "(" + std::to_string(o.value) + ", " + str(o.obstructed) + ")"));
  auto o9 = g10_obstruction(9, 2);
  out.push_back(check("g9-obstruction-variant", "the same count at g = 9 against 2", "(14, false)", P::Derived,
                      "(" + std::to_string(o9.value) + ", " + str(o9.obstructed) + ")"));
  out.push_back(check("delta-genus-g9", "Delta-genus of the g = 9 double-cover base", "0", P::Paper,
                      delta_genus({3, Rational(5), 8}).to_string()));
  out.push_back(check("delta-genus-veronese", "Delta-genus of the Veronese surface", "0", P::Trivial,
                      delta_genus({2, Rational(4), 6}).to_string()));
  out.push_back(check("projection-degree-forcing", "degrees with 4/deg - 3 >= 0", "[1]", P::Paper,
                      list(projection_degree_forcing(12))));
  out.push_back(check("rr-parity-4", "D^2 = 4 is allowed by Riemann-Roch parity", "true", P::Paper,
                      str(surface_rr_parity(4))));
  out.push_back(check("rr-parity-2", "D^2 = 2 is allowed by Riemann-Roch parity", "true", P::Paper,
                      str(surface_rr_parity(2))));
  return out;
}

const std::map<std::string, std::vector<Group>>& registry() {
  static const std::map<std::string, std::vector<Group>> r = {
      {"schubert", {schubert_golden, schubert_properties}},
      {"toric", {toric_surfaces, toric_l014, toric_l023}},
      {"veronese", {veronese_algebra, veronese_projection, veronese_quadrics, veronese_conics}},
      {"hodge", {hodge_sections, hodge_diamonds}},
      {"numerology", {numerology_all}},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"schubert", "toric", "veronese", "hodge", "numerology", "all"};
  return names;
}

Report run_suite(const std::string& name, const SuiteConfig& config) {
  std::vector<Group> groups;
  if (name == "all") {
    for (const auto& [n, gs] : registry()) groups.insert(groups.end(), gs.begin(), gs.end());
  } else {
    auto it = registry().find(name);
    if (it == registry().end()) throw Error("unknown suite '" + name + "'");
    groups = it->second;
  }
  std::vector<std::future<std::vector<Certificate>>> running;
  for (const auto& g : groups) running.push_back(std::async(std::launch::async, g, std::cref(config)));
  Report r;
  r.suite = name;
  r.config = config;
  for (auto& f : running) {
    auto part = f.get();
    r.certificates.insert(r.certificates.end(), part.begin(), part.end());
  }
  std::sort(r.certificates.begin(), r.certificates.end(),
            [](const Certificate& a, const Certificate& b) { return a.id < b.id; });
  return r;
}

}  // namespace fanocert::certify
