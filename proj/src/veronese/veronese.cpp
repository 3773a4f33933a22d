#include "fanocert/veronese/veronese.hpp"

#include "fanocert/error.hpp"
#include "fanocert/exact/matrix.hpp"

namespace fanocert::veronese {

exact::Variables p5_variables() {
  static const exact::Variables v = exact::make_variables({"x", "y", "z", "s", "t", "u"});
  return v;
}

std::vector<Poly> veronese_ideal() {
  std::vector<Poly> out;
  for (const char* g : {"xy - u^2", "yz - s^2", "zx - t^2", "xs - tu", "yt - us", "zu - st"})
    out.push_back(Poly::parse(p5_variables(), g));
  return out;
}

namespace {

std::vector<std::vector<Poly>> symmetric_matrix() {
  auto v = [](const char* n) { return Poly::variable(p5_variables(), n); };
  return {{v("x"), v("u"), v("t")}, {v("u"), v("y"), v("s")}, {v("t"), v("s"), v("z")}};
}

}  // namespace

std::vector<Poly> symmetric_matrix_minors() {
  auto m = symmetric_matrix();
  std::vector<Poly> out;
  for (int r1 = 0; r1 < 3; ++r1)
    for (int r2 = r1 + 1; r2 < 3; ++r2)
      for (int c1 = 0; c1 < 3; ++c1)
        for (int c2 = c1 + 1; c2 < 3; ++c2) out.push_back(m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]);
  return out;
}

Poly symmetric_matrix_det() {
  auto m = symmetric_matrix();
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

Poly secant_cubic() { return Poly::parse(p5_variables(), "xyz + 2stu - xs^2 - yt^2 - zu^2"); }

std::vector<Rational> veronese_map(const std::vector<Rational>& p) {
  if (p.size() != 3) throw Error("veronese_map needs a point of P^2");
  const Rational &X = p[0], &Y = p[1], &Z = p[2];
  return {X * X, Y * Y, Z * Z, Y * Z, Z * X, X * Y};
}

std::string to_string(SecantStratum s) {
  switch (s) {
    case SecantStratum::OnVeronese: return "OnVeronese";
    case SecantStratum::OnSecantOnly: return "OnSecantOnly";
    case SecantStratum::Generic: return "Generic";
  }
  return "?";
}

SecantStratum secant_stratum(const std::vector<Rational>& p) {
  if (p.size() != 6) throw Error("secant_stratum needs a point of P^5");
  bool zero = true;
  for (const auto& c : p) zero = zero && c.is_zero();
  if (zero) throw Error("zero vector is not a projective point");
  // x y z s t u
  auto m = exact::Matrix<Rational>::from_rows({{p[0], p[5], p[4]}, {p[5], p[1], p[3]}, {p[4], p[3], p[2]}});
  switch (m.rank()) {
    case 1: return SecantStratum::OnVeronese;
    case 2: return SecantStratum::OnSecantOnly;
    default: return SecantStratum::Generic;
  }
}

}  // namespace fanocert::veronese
