#include <doctest.h>

#include <random>
#include <set>

#include "fanocert/error.hpp"
#include "fanocert/veronese/conic.hpp"
#include "fanocert/veronese/veronese.hpp"
#include "oracles.hpp"

using namespace fanocert;
using namespace fanocert::veronese;
using exact::F2;
using exact::F4;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-20, 20), den(1, 9);
  return Rational(exact::Integer(static_cast<long>(num(rng))), exact::Integer(static_cast<long>(den(rng))));
}

template <class K>
QuadraticForm3<K> qf(int a, int b, int c, int d, int e, int f) {
  return QuadraticForm3<K>::from(K(a), K(b), K(c), K(d), K(e), K(f));
}

template <class K>
std::map<std::string, int> random_agreement(unsigned trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::map<std::string, int> paths;
  for (unsigned t = 0; t < trials; ++t) {
    auto v = random_conic_subspace<K>(rng, 4);
    auto r = find_smooth_conic(v);
    CHECK(r.form.has_value() == oracles::smooth_member_exists(v));
    if (r.form) {
      CHECK(*r.form == v.combine(r.combination));
      CHECK(oracles::conic_smooth(*r.form));
    }
    ++paths[r.path];
  }
  return paths;
}

}  // namespace

TEST_CASE("veronese ideal generators and the Veronese map") {
  auto gens = veronese_ideal();
  REQUIRE(gens.size() == 6);
  CHECK(gens[0] == Poly::parse(p5_variables(), "xy - u^2"));
  CHECK(gens[5] == Poly::parse(p5_variables(), "zu - st"));
  std::mt19937_64 rng(0);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> p = {random_rational(rng), random_rational(rng), random_rational(rng)};
    if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) continue;
    auto img = veronese_map(p);
    for (const auto& g : gens) CHECK(g.evaluate(img).is_zero());
    CHECK(secant_stratum(img) == SecantStratum::OnVeronese);
  }
}

TEST_CASE("minors of the symmetric matrix are the generators up to sign") {
  auto gens = veronese_ideal();
  auto minors = symmetric_matrix_minors();
  CHECK(minors.size() == 9);
  for (const auto& m : minors) {
    bool found = false;
    for (const auto& g : gens) found = found || m == g || m == -g;
    CHECK(found);
  }
  for (const auto& g : gens) {
    bool found = false;
    for (const auto& m : minors) found = found || m == g || m == -g;
    CHECK(found);
  }
  CHECK(symmetric_matrix_det() == secant_cubic());
}

TEST_CASE("secant stratification") {
  auto pt = [](std::vector<long> v) {
    std::vector<Rational> out;
    for (long x : v) out.emplace_back(exact::Integer(x));
    return out;
  };
  CHECK(secant_stratum(pt({1, 0, 0, 0, 0, 0})) == SecantStratum::OnVeronese);
  CHECK(secant_stratum(pt({1, 1, 0, 0, 0, 0})) == SecantStratum::OnSecantOnly);
  CHECK(secant_stratum(pt({1, 1, 1, 0, 0, 0})) == SecantStratum::Generic);
  CHECK_THROWS_AS(secant_stratum(pt({0, 0, 0, 0, 0, 0})), Error);
  CHECK_THROWS_AS(veronese_map(pt({1, 2})), Error);

  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    auto a = veronese_map({random_rational(rng), random_rational(rng), random_rational(rng)});
    auto b = veronese_map({random_rational(rng), random_rational(rng), random_rational(rng)});
    std::vector<Rational> s;
    bool zero = true;
    for (int i = 0; i < 6; ++i) {
      s.push_back(a[i] + b[i]);
      zero = zero && s.back().is_zero();
    }
    if (zero) continue;
    auto st = secant_stratum(s);
    CHECK(st != SecantStratum::Generic);
    // the cubic vanishes exactly off the generic stratum
    CHECK(secant_cubic().evaluate(s).is_zero());
  }
}

TEST_CASE("projection kernel: membership of the stated generators") {
  auto r = projection_kernel_certificate(2);
  REQUIRE(r.membership.size() == 2);
  // S^2 - TU does not map to zero; ST - UZ does.
  CHECK_FALSE(r.membership[0].second.is_zero());
  CHECK(r.membership[1].second.is_zero());
  CHECK_FALSE(r.all_members_vanish);

  auto sv = projection_source_variables();
  CHECK(exact::poly_substitute(Poly::parse(sv, "T^2 - S^2 - Z"), projection_map()).is_zero());
  CHECK_THROWS_AS(projection_kernel_certificate(1), Error);
}

TEST_CASE("projection kernel: degreewise dimension identity") {
  auto r = projection_kernel_certificate(6);
  REQUIRE(r.rows.size() == 6);
  const std::size_t ring[] = {4, 10, 20, 35, 56, 84};
  const std::size_t ideal[] = {0, 2, 8, 19, 36, 60};
  const std::size_t image[] = {4, 9, 16, 25, 36, 49};
  for (int d = 0; d < 6; ++d) {
    CHECK(r.rows[d].ring_dim == ring[d]);
    CHECK(r.rows[d].ideal_dim == ideal[d]);
    CHECK(r.rows[d].image_dim == image[d]);
  }
  CHECK(r.rows[0].identity_holds);
  CHECK_FALSE(r.rows[1].identity_holds);
  CHECK_FALSE(r.identity_holds);

  // The principal ideal (ST - UZ) is the whole kernel through degree 6.
  auto sv = projection_source_variables();
  auto p = projection_kernel_certificate(6, {Poly::parse(sv, "ST - UZ")});
  const std::size_t principal[] = {0, 1, 4, 10, 20, 35};
  for (int d = 0; d < 6; ++d) CHECK(p.rows[d].ideal_dim == principal[d]);
  CHECK(p.identity_holds);
}

TEST_CASE("Hilbert function against R S + R[T]") {
  auto rows = primality_hilbert_comparison(6);
  const std::size_t quotient[] = {4, 8, 12, 16, 20, 24};
  const std::size_t module[] = {4, 8, 13, 19, 26, 34};
  for (int d = 0; d < 6; ++d) {
    CHECK(rows[d].quotient == quotient[d]);
    CHECK(rows[d].module == module[d]);
  }
}

TEST_CASE("singular quadric pencil") {
  auto r = quadric_pencil_singularity_certificate();
  CHECK(r.singular);
  REQUIRE(r.partials_at.size() == 5);
  CHECK(r.partials_at[3].is_zero());  // d/dt
  CHECK(r.value_at.is_zero());
  CHECK(r.form.derivative("t") == Poly::parse(pencil_variables(), "-au + bs"));

  auto moved = quadric_pencil_singularity_certificate("t^2 - s^2 - yz", "st - uz");
  CHECK_FALSE(moved.singular);
  auto fixed = quadric_pencil_singularity_certificate("t^2 - s^2 - yz", "st - uz", {"b", "0", "0", "0", "-a"});
  CHECK(fixed.singular);
  CHECK_THROWS_AS(quadric_pencil_singularity_certificate("s^2", "t^2", {"0", "0", "0", "0", "0"}), Error);
  CHECK_THROWS_AS(quadric_pencil_singularity_certificate("s^2", "t^2", {"y", "0", "0", "0", "0"}), Error);
}

TEST_CASE("singular quadric hyperplane splitting") {
  auto v = split_variables();
  auto r = split_hyperplane_certificate(QuadricChoice::X0X1PlusX2Squared);
  CHECK(r.hyperplane == Poly::parse(v, "x2"));
  CHECK(r.d == std::vector<Poly>{Poly::parse(v, "x0"), Poly::parse(v, "x2")});
  CHECK(r.d_prime == std::vector<Poly>{Poly::parse(v, "x1"), Poly::parse(v, "x2")});
  CHECK(r.verified);
  REQUIRE(r.checks.size() == 3);
  CHECK(r.checks[1].lhs_dim == r.checks[1].rhs_dim);

  auto avoid = split_hyperplane_certificate(QuadricChoice::X0X1PlusX2Squared, {0, 2});
  CHECK(avoid.hyperplane == Poly::parse(v, "x1 - x2"));
  CHECK(avoid.verified);

  for (auto choice : {QuadricChoice::X0X1PlusX2Squared, QuadricChoice::X0X1PlusX2X3})
    for (std::vector<std::size_t> a : {std::vector<std::size_t>{}, {0, 2}, {1, 2}, {3}})
      CHECK(split_hyperplane_certificate(choice, a).verified);
  CHECK_THROWS_AS(split_hyperplane_certificate(QuadricChoice::X0X1PlusX2X3, {7}), Error);
}

TEST_CASE("is_smooth_conic examples") {
  CHECK(is_smooth_conic(qf<F2>(0, 0, 1, 0, 0, 1)));
  CHECK_FALSE(is_smooth_conic(qf<F2>(1, 0, 0, 0, 0, 0)));
  CHECK_FALSE(is_smooth_conic(qf<F2>(0, 0, 0, 0, 0, 1)));
  CHECK_THROWS_AS(is_smooth_conic(qf<F2>(0, 0, 0, 0, 0, 0)), Error);
  CHECK(qf<F2>(0, 0, 1, 0, 0, 1).to_string() == "z^2 + xy");
  auto w = F4::generator();
  CHECK(QuadraticForm3<F4>::from(w, F4(0), F4(0), w + F4(1), F4(0), F4(1)).to_string() == "w*x^2 + (w+1)*yz + xy");

  // agrees with the oracle on every nonzero form over F2 and F4
  for (unsigned bits = 1; bits < 64; ++bits) {
    QuadraticForm3<F2> q;
    for (int i = 0; i < 6; ++i) q.c[i] = F2((bits >> i) & 1);
    CHECK(is_smooth_conic(q) == oracles::conic_smooth(q));
  }
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<unsigned> pick(0, 3);
  for (int t = 0; t < 300; ++t) {
    QuadraticForm3<F4> q;
    for (auto& x : q.c) x = F4::from_bits(pick(rng));
    if (q.is_zero()) continue;
    CHECK(is_smooth_conic(q) == oracles::conic_smooth(q));
  }
}

TEST_CASE("find_smooth_conic examples") {
  ConicSubspace<F2> v1({qf<F2>(1, 0, 0, 0, 0, 0), qf<F2>(0, 1, 0, 0, 0, 0), qf<F2>(0, 0, 1, 0, 0, 0),
                        qf<F2>(0, 0, 1, 0, 0, 1)});
  auto r1 = find_smooth_conic(v1);
  REQUIRE(r1.form);
  CHECK(oracles::conic_smooth(*r1.form));
  CHECK(*r1.form == v1.combine(r1.combination));

  ConicSubspace<F2> v2({qf<F2>(1, 0, 0, 0, 0, 0), qf<F2>(0, 1, 0, 0, 0, 0), qf<F2>(0, 0, 1, 0, 0, 0),
                        qf<F2>(0, 0, 0, 0, 0, 1)});
  auto r2 = find_smooth_conic(v2);
  CHECK(r2.form.has_value() == oracles::smooth_member_exists(v2));
  CHECK(r2.path == "case I");

  ConicSubspace<F2> small({qf<F2>(1, 0, 0, 0, 0, 0), qf<F2>(0, 0, 0, 0, 0, 1)});
  CHECK_THROWS_AS(find_smooth_conic(small), Error);
  CHECK_THROWS_AS(ConicSubspace<F2>({qf<F2>(1, 0, 0, 0, 0, 0), qf<F2>(1, 0, 0, 0, 0, 0)}), Error);

  // a space without smooth members exists only below dimension 4
  ConicSubspace<F2> squares({qf<F2>(1, 0, 0, 0, 0, 0), qf<F2>(0, 1, 0, 0, 0, 0), qf<F2>(0, 0, 1, 0, 0, 0)});
  CHECK_FALSE(exhaustive_smooth_conic(squares).form);
}

TEST_CASE("find_smooth_conic agrees with the exhaustive oracle") {
  auto p2 = random_agreement<F2>(500, 0);
  auto p4 = random_agreement<F4>(500, 0);
  CHECK(p2.count("exhaustive") == 0);
  CHECK(p4.count("exhaustive") == 0);
  std::set<std::string> seen;
  for (const auto& [k, n] : p2) seen.insert(k);
  for (const auto& [k, n] : p4) seen.insert(k);
  CHECK(seen.size() >= 4);
  // higher dimensions exercise the same branches
  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto v = random_conic_subspace<F4>(rng, 5 + static_cast<std::size_t>(t % 2));
    auto r = find_smooth_conic(v);
    REQUIRE(r.form);
    CHECK(oracles::conic_smooth(*r.form));
  }
}
