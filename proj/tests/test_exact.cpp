#include <doctest.h>

#include <random>

#include "fanocert/exact/field.hpp"
#include "fanocert/exact/graded.hpp"
#include "fanocert/exact/inequalities.hpp"
#include "fanocert/exact/int_matrix.hpp"
#include "fanocert/exact/matrix.hpp"
#include "fanocert/exact/polynomial.hpp"

using namespace fanocert::exact;
using fanocert::Error;
using P = Polynomial<Rational>;
using RF = RationalFunction<Rational>;

namespace {

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long long> num(-50, 50), den(1, 30);
  return Rational(Integer(static_cast<long>(num(rng))), Integer(static_cast<long>(den(rng))));
}

P random_poly(const Variables& v, std::mt19937_64& rng, unsigned max_deg, int nterms) {
  P p(v);
  std::uniform_int_distribution<unsigned> ex(0, max_deg);
  for (int i = 0; i < nterms; ++i) {
    Exponents e(v->size());
    for (auto& x : e) x = ex(rng);
    p.add_term(e, random_rational(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("rational lowest terms and printing") {
  Rational r(Integer(14), Integer(-4));
  CHECK(r.num() == -7);
  CHECK(r.den() == 2);
  CHECK(r.to_string() == "-7/2");
  CHECK(Rational(0).to_string() == "0");
  CHECK(Rational::parse("-11/6") == Rational(Integer(-11), Integer(6)));
  CHECK(Rational::parse("22/-12").to_string() == "-11/6");
  CHECK_THROWS_AS(Rational(Integer(1), Integer(0)), Error);
  CHECK_THROWS_AS(Rational(0).inverse(), Error);
  CHECK_THROWS_AS(Rational::parse("x/2"), Error);
}

TEST_CASE("rational field axioms on random samples") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    if (!a.is_zero()) CHECK(a * a.inverse() == Rational(1));
  }
}

TEST_CASE("prime field and F4 arithmetic") {
  using F7 = Fp<7>;
  CHECK(F7(3) * F7(5) == F7(1));
  CHECK(F7(3).inverse() == F7(5));
  CHECK(F7(-1) == F7(6));
  F4 w = F4::generator();
  CHECK(w * w == w + F4(1));  // w^2 + w + 1 = 0
  for (auto x : F4::elements()) {
    if (!x.is_zero()) CHECK(x * x.inverse() == F4(1));
    CHECK(x + x == F4(0));
    CHECK(x.sqrt() * x.sqrt() == x);
  }
  CHECK(w.to_string() == "w");
  CHECK((w + F4(1)).to_string() == "w+1");
  CHECK_THROWS_AS(F4(0).inverse(), Error);
}

TEST_CASE("polynomial parse, order and printing") {
  auto v = make_variables({"x", "y", "z", "s", "t", "u"});
  P p = P::parse(v, "xy - u^2");
  CHECK(p.to_string() == "x*y - u^2");
  CHECK(P::parse(v, "zx - t^2").to_string() == "x*z - t^2");
  P cubic = P::parse(v, "xyz +2stu -xs^2 -yt^2 -zu^2");
  CHECK(cubic.total_degree() == 3);
  CHECK(cubic.is_homogeneous());
  CHECK(P::parse(v, "(x+y)^2") == P::parse(v, "x^2 + 2xy + y^2"));
  CHECK(P::parse(v, "7/2 x").to_string() == "7/2*x");
  CHECK(P::parse(v, "-x - -y") == P::parse(v, "y - x"));
  CHECK_THROWS_AS(P::parse(v, "x + q"), Error);
  CHECK_THROWS_AS(P::parse(v, "x / y"), Error);
  CHECK_THROWS_AS(P::parse(v, "(x"), Error);
}

TEST_CASE("derivative and evaluate") {
  auto v = make_variables({"x", "y"});
  P p = P::parse(v, "x^3 y + 2 y^2");
  CHECK(p.derivative("x") == P::parse(v, "3 x^2 y"));
  CHECK(p.derivative(1) == P::parse(v, "x^3 + 4y"));
  CHECK(p.evaluate({Rational(2), Rational(-1)}) == Rational(-6));
}

TEST_CASE("poly_substitute examples") {
  auto big = make_variables({"x", "y", "u"});
  auto small = make_variables({"X", "Y"});
  P q = P::parse(big, "xy - u^2");
  std::map<std::string, RF> img{{"x", RF(P::parse(small, "X^2"))},
                                {"y", RF(P::parse(small, "Y^2"))},
                                {"u", RF(P::parse(small, "XY"))}};
  CHECK(poly_substitute(q, img).is_zero());

  auto one = make_variables({"x"});
  P x = P::parse(one, "x");
  CHECK(poly_substitute(x, {{"x", RF(x)}}) == RF(x));

  std::map<std::string, RF> partial{{"x", RF(P::parse(small, "X"))}};
  CHECK_THROWS_WITH_AS(poly_substitute(q, partial), doctest::Contains("unmapped variable"), Error);
}

TEST_CASE("poly_substitute is a ring homomorphism") {
  std::mt19937_64 rng(11);
  auto src = make_variables({"a", "b", "c"});
  auto dst = make_variables({"t", "u"});
  RF w(P::parse(dst, "1 - u^2"));
  std::map<std::string, RF> img{{"a", RF(P::parse(dst, "t"), P::parse(dst, "1 - u^2"))},
                                {"b", RF(P::parse(dst, "t u + 3"))},
                                {"c", RF(P::parse(dst, "u"), P::parse(dst, "t + 2"))}};
  for (int i = 0; i < 40; ++i) {
    P p = random_poly(src, rng, 2, 3), q = random_poly(src, rng, 2, 3);
    CHECK(poly_substitute(p * q, img) == poly_substitute(p, img) * poly_substitute(q, img));
    CHECK(poly_substitute(p + q, img) == poly_substitute(p, img) + poly_substitute(q, img));
  }
}

TEST_CASE("rational function equality by cross multiplication") {
  auto v = make_variables({"t", "u"});
  RF a(P::parse(v, "t^2 - u^2"), P::parse(v, "t - u"));
  RF b(P::parse(v, "t + u"));
  CHECK(a == b);
  CHECK_THROWS_AS(RF(P::parse(v, "t"), P(v)), Error);
}

TEST_CASE("lattice_index examples") {
  CHECK(lattice_index(IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 1);
  CHECK(lattice_index(IntMatrix::from_rows({{1, 0, -1}, {-1, 3, 0}, {0, -1, -1}})) == 4);
  CHECK(determinant(IntMatrix::from_rows({{1, 0, -1}, {-1, 3, 0}, {0, -1, -1}})) == -4);
  CHECK(lattice_index(IntMatrix::from_rows({{0, 1, 0}, {0, -1, -1}, {1, 0, -2}})) == 1);
  CHECK_THROWS_AS(lattice_index(IntMatrix::from_rows({{1, 2, 3}})), Error);
  CHECK(maximal_minor_gcd(IntMatrix::from_rows({{2, 0, 0}, {0, 2, 0}})) == 4);
  CHECK(maximal_minor_gcd(IntMatrix::from_rows({{1, 0, 0}, {0, 1, 0}})) == 1);
}

TEST_CASE("lattice_index under row swaps and unimodular row operations") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long long> d(-5, 5);
  for (int t = 0; t < 200; ++t) {
    std::vector<std::vector<long long>> rows(3, std::vector<long long>(3));
    for (auto& r : rows)
      for (auto& x : r) x = d(rng);
    Integer base = lattice_index(IntMatrix::from_rows(rows));
    auto swapped = rows;
    std::swap(swapped[0], swapped[2]);
    CHECK(lattice_index(IntMatrix::from_rows(swapped)) == base);
    auto sheared = rows;
    long long k = d(rng);
    for (int j = 0; j < 3; ++j) sheared[1][j] += k * sheared[0][j];
    CHECK(lattice_index(IntMatrix::from_rows(sheared)) == base);
  }
}

TEST_CASE("kernel_dimension basics and rank-nullity") {
  Matrix<Rational> z(2, 3);
  CHECK(kernel_dimension(z).dimension == 3);
  CHECK(kernel_dimension(Matrix<Rational>::identity(4)).dimension == 0);

  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> d(-2, 2), sz(1, 6);
  for (int t = 0; t < 200; ++t) {
    Matrix<Rational> m(sz(rng), sz(rng));
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = d(rng);
    auto k = kernel_dimension(m);
    CHECK(k.dimension + k.rank == m.cols());
    CHECK(k.basis.size() == k.dimension);
    for (const auto& v : k.basis)
      for (const auto& x : m.apply(v)) CHECK(x.is_zero());
  }
}

TEST_CASE("kernel over F4") {
  F4 w = F4::generator();
  auto m = Matrix<F4>::from_rows({{F4(1), w}, {w, w * w}});
  auto k = kernel_dimension(m);
  CHECK(k.dimension == 1);
  for (const auto& x : m.apply(k.basis[0])) CHECK(x.is_zero());
}

TEST_CASE("ideal_graded_dimension examples") {
  auto xy = make_variables({"x", "y"});
  CHECK(ideal_graded_dimension<Rational>({P::parse(xy, "x")}, 2) == 2);

  auto zstu = make_variables({"Z", "S", "T", "U"});
  CHECK(ideal_graded_dimension<Rational>({P::parse(zstu, "S^2 - TU"), P::parse(zstu, "ST - UZ")}, 2) == 2);

  auto six = make_variables({"x", "y", "z", "s", "t", "u"});
  std::vector<P> ver;
  for (const char* g : {"xy - u^2", "yz - s^2", "zx - t^2", "xs - tu", "yt - us", "zu - st"})
    ver.push_back(P::parse(six, g));
  CHECK(ideal_graded_dimension(ver, 2) == 6);
  CHECK(ideal_graded_dimension(ver, 1) == 0);

  CHECK_THROWS_AS(ideal_graded_dimension<Rational>({P::parse(xy, "x + y^2")}, 2), Error);
}

TEST_CASE("monomial enumeration is grlex descending") {
  auto m = monomials_of_degree(3, 2);
  CHECK(m.size() == 6);
  CHECK(m.front() == Exponents{2, 0, 0});
  CHECK(m.back() == Exponents{0, 0, 2});
  for (std::size_t i = 0; i + 1 < m.size(); ++i) CHECK(grlex_less(m[i + 1], m[i]));
  CHECK(monomials_of_degree(4, 6).size() == 84);
}

TEST_CASE("Fourier-Motzkin feasibility") {
  // y0 >= 1, y1 >= 1, y0 + y1 <= 3
  std::vector<Inequality> sys{{{1, 0}, 1}, {{0, 1}, 1}, {{-1, -1}, -3}};
  auto w = solve_inequalities(sys, 2);
  REQUIRE(w);
  for (const auto& q : sys) CHECK(q.a[0] * (*w)[0] + q.a[1] * (*w)[1] >= q.b);
  sys.push_back({{-1, -1}, -1});
  sys.back().b = Rational(-1);  // y0 + y1 <= 1 contradicts
  CHECK_FALSE(solve_inequalities(sys, 2));
  CHECK(solve_inequalities({}, 3));
  // 0 >= 1 infeasible
  CHECK_FALSE(solve_inequalities({{{0}, 1}}, 1));
}
