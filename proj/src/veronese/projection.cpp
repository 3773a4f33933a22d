#include <map>

#include "fanocert/error.hpp"
#include "fanocert/exact/graded.hpp"
#include "fanocert/veronese/veronese.hpp"

namespace fanocert::veronese {

using RF = exact::RationalFunction<Rational>;

exact::Variables projection_source_variables() {
  static const exact::Variables v = exact::make_variables({"Z", "S", "T", "U"});
  return v;
}

exact::Variables projection_target_variables() {
  static const exact::Variables v = exact::make_variables({"t", "u"});
  return v;
}

std::map<std::string, RF> projection_map() {
  auto tv = projection_target_variables();
  Poly w = Poly::parse(tv, "1 - u^2");
  return {{"Z", RF(Poly::parse(tv, "t^2"), w)},
          {"S", RF(Poly::parse(tv, "tu"), w)},
          {"T", RF(Poly::parse(tv, "t"), w)},
          {"U", RF(Poly::parse(tv, "u"), w)}};
}

std::vector<Poly> stated_projection_kernel() {
  auto sv = projection_source_variables();
  return {Poly::parse(sv, "S^2 - TU"), Poly::parse(sv, "ST - UZ")};
}

namespace {

// A degree-d form maps to numerator / w^d, so the image span is the span of numerators.
std::size_t image_span_dimension(unsigned d) {
  auto tv = projection_target_variables();
  std::vector<Poly> numerators = {Poly::parse(tv, "t^2"), Poly::parse(tv, "tu"), Poly::parse(tv, "t"),
                                  Poly::parse(tv, "u")};
  std::map<exact::Exponents, std::size_t> index;
  std::vector<Poly> images;
  for (const auto& m : exact::monomials_of_degree(4, d)) {
    Poly img = exact::poly_compose(Poly::monomial(projection_source_variables(), m), numerators);
    for (const auto& [e, c] : img.terms()) index.emplace(e, index.size());
    images.push_back(std::move(img));
  }
  std::vector<std::vector<Rational>> rows;
  for (const auto& img : images) {
    std::vector<Rational> row(index.size(), Rational(0));
    for (const auto& [e, c] : img.terms()) row[index.at(e)] = c;
    rows.push_back(std::move(row));
  }
  return exact::span_dimension(rows);
}

std::size_t binomial(std::size_t n, std::size_t k) {
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

ProjectionKernelReport projection_kernel_certificate(unsigned degree_bound, const std::vector<Poly>& generators) {
  if (degree_bound < 2) throw Error("degree_bound must be at least 2");
  ProjectionKernelReport r;
  auto psi = projection_map();
  r.all_members_vanish = true;
  for (const auto& g : generators) {
    RF img = exact::poly_substitute(g, psi);
    r.all_members_vanish = r.all_members_vanish && img.is_zero();
    r.membership.emplace_back(g, std::move(img));
  }
  r.identity_holds = true;
  for (unsigned d = 1; d <= degree_bound; ++d) {
    ProjectionDegreeRow row;
    row.degree = d;
    row.ring_dim = binomial(d + 3, 3);
    row.ideal_dim = exact::ideal_graded_dimension(generators, d);
    row.image_dim = image_span_dimension(d);
    row.identity_holds = row.ideal_dim + row.image_dim == row.ring_dim;
    r.identity_holds = r.identity_holds && row.identity_holds;
    r.rows.push_back(row);
  }
  return r;
}

std::vector<HilbertComparisonRow> primality_hilbert_comparison(unsigned degree_bound,
                                                               const std::vector<Poly>& generators) {
  std::vector<HilbertComparisonRow> out;
  for (unsigned d = 1; d <= degree_bound; ++d) {
    HilbertComparisonRow row;
    row.degree = d;
    row.quotient = binomial(d + 3, 3) - exact::ideal_graded_dimension(generators, d);
    // R_d + R[T]_d with R = k[Z,U]: S R_{d-1} has dim d, R[T]_d has dim C(d+2,2)
    row.module = binomial(d + 2, 2) + d;
    out.push_back(row);
  }
  return out;
}

exact::Variables pencil_variables() {
  static const exact::Variables v = exact::make_variables({"a", "b", "y", "z", "s", "t", "u"});
  return v;
}

PencilReport quadric_pencil_singularity_certificate(const std::string& q1, const std::string& q2,
                                                    const std::vector<std::string>& point) {
  if (point.size() != 5) throw Error("pencil point needs 5 coordinates (y, z, s, t, u)");
  auto v = pencil_variables();
  PencilReport r;
  r.form = Poly::variable(v, "a") * Poly::parse(v, q1) + Poly::variable(v, "b") * Poly::parse(v, q2);
  std::vector<Poly> images = {Poly::variable(v, "a"), Poly::variable(v, "b")};
  for (const auto& c : point) {
    Poly p = Poly::parse(v, c);
    for (const auto& [e, coef] : p.terms())
      for (std::size_t i = 2; i < e.size(); ++i)
        if (e[i] != 0) throw Error("pencil point coordinate '" + c + "' uses a projective coordinate");
    r.point.push_back(p);
    images.push_back(p);
  }
  bool all_zero = true;
  for (const auto& p : r.point) all_zero = all_zero && p.is_zero();
  if (all_zero) throw Error("zero vector is not a projective point");
  r.singular = true;
  for (std::size_t i = 2; i < v->size(); ++i) {
    Poly d = exact::poly_compose(r.form.derivative(i), images);
    r.singular = r.singular && d.is_zero();
    r.partials_at.push_back(std::move(d));
  }
  r.value_at = exact::poly_compose(r.form, images);
  r.singular = r.singular && r.value_at.is_zero();
  return r;
}

exact::Variables split_variables() {
  static const exact::Variables v = exact::make_variables({"x0", "x1", "x2", "x3", "x4"});
  return v;
}

namespace {

struct SplitCandidate {
  const char* h;
  std::vector<const char*> d, d_prime;
};

std::vector<Poly> parse_all(const std::vector<const char*>& gens) {
  std::vector<Poly> out;
  for (const char* g : gens) out.push_back(Poly::parse(split_variables(), g));
  return out;
}

std::vector<Rational> linear_coordinates(const Poly& p) {
  std::vector<Rational> row(5, Rational(0));
  for (const auto& [e, c] : p.terms())
    for (std::size_t i = 0; i < 5; ++i)
      if (e[i] == 1) row[i] = c;
  return row;
}

bool same_linear_span(const std::vector<Poly>& a, const std::vector<Poly>& b) {
  std::vector<std::vector<Rational>> ra, rb;
  for (const auto& p : a) ra.push_back(linear_coordinates(p));
  for (const auto& p : b) rb.push_back(linear_coordinates(p));
  auto both = ra;
  both.insert(both.end(), rb.begin(), rb.end());
  std::size_t da = exact::span_dimension(ra), db = exact::span_dimension(rb);
  return da == db && exact::span_dimension(both) == da;
}

}  // namespace

SplitReport split_hyperplane_certificate(QuadricChoice choice, const std::vector<std::size_t>& avoid,
                                         unsigned degree_bound) {
  auto v = split_variables();
  for (std::size_t i : avoid)
    if (i >= 5) throw Error("avoided coordinate index out of range");
  std::vector<SplitCandidate> candidates;
  SplitReport r;
  if (choice == QuadricChoice::X0X1PlusX2Squared) {
    r.quadric = Poly::parse(v, "x0x1 + x2^2");
    candidates = {{"x2", {"x0", "x2"}, {"x1", "x2"}},
                  {"x1 - x2", {"x1", "x2"}, {"x1 - x2", "x0 + x2"}},
                  {"x0 - x2", {"x0", "x2"}, {"x0 - x2", "x1 + x2"}}};
  } else {
    r.quadric = Poly::parse(v, "x0x1 + x2x3");
    candidates = {{"x2", {"x0", "x2"}, {"x1", "x2"}},
                  {"x1 - x2", {"x1", "x2"}, {"x1 - x2", "x0 + x3"}},
                  {"x0 - x2", {"x0", "x2"}, {"x0 - x2", "x1 + x3"}}};
  }
  std::vector<Poly> avoided;
  for (std::size_t i : avoid) avoided.push_back(Poly::variable(v, i));

  const SplitCandidate* chosen = nullptr;
  for (const auto& c : candidates) {
    auto d = parse_all(c.d), dp = parse_all(c.d_prime);
    if (!avoided.empty() && (same_linear_span(d, avoided) || same_linear_span(dp, avoided))) continue;
    chosen = &c;
    break;
  }
  if (chosen == nullptr) throw Error("no splitting hyperplane avoids the given subspace");
  r.hyperplane = Poly::parse(v, chosen->h);
  r.d = parse_all(chosen->d);
  r.d_prime = parse_all(chosen->d_prime);

  std::vector<Poly> lhs = {r.quadric, r.hyperplane};
  std::vector<Poly> sum = r.d;
  sum.insert(sum.end(), r.d_prime.begin(), r.d_prime.end());
  r.verified = true;
  for (unsigned d = 1; d <= degree_bound; ++d) {
    SplitDegreeCheck chk;
    chk.degree = d;
    chk.lhs_dim = exact::ideal_graded_dimension(lhs, d);
    std::size_t a = exact::ideal_graded_dimension(r.d, d);
    std::size_t b = exact::ideal_graded_dimension(r.d_prime, d);
    chk.rhs_dim = a + b - exact::ideal_graded_dimension(sum, d);
    auto with = [&](std::vector<Poly> gens) {
      gens.insert(gens.end(), lhs.begin(), lhs.end());
      return exact::ideal_graded_dimension(gens, d);
    };
    chk.contained = with(r.d) == a && with(r.d_prime) == b;
    r.verified = r.verified && chk.contained && chk.lhs_dim == chk.rhs_dim;
    r.checks.push_back(chk);
  }
  return r;
}

}  // namespace fanocert::veronese
