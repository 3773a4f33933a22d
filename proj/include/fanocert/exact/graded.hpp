#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "fanocert/error.hpp"
#include "fanocert/exact/matrix.hpp"
#include "fanocert/exact/polynomial.hpp"

namespace fanocert::exact {

/// All exponent vectors of total degree d in n variables, grlex descending.
inline std::vector<Exponents> monomials_of_degree(std::size_t n, unsigned d) {
  std::vector<Exponents> out;
  if (n == 0) {
    if (d == 0) out.emplace_back();
    return out;
  }
  Exponents e(n, 0);
  // recursive fill: first variable gets the largest exponent first
  auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
    if (i + 1 == n) {
      e[i] = left;
      out.push_back(e);
      return;
    }
    for (unsigned k = left + 1; k-- > 0;) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  rec(rec, 0, d);
  return out;
}

/// Degree-d slice: a spanning set expressed in the monomial basis.
template <Field K>
struct GradedPiece {
  unsigned degree = 0;
  std::vector<Exponents> basis;
  Matrix<K> coordinates;  // one row per spanning element

  std::size_t dimension() const { return coordinates.rank(); }
};

template <Field K>
std::vector<K> coordinates_in(const Polynomial<K>& p, const std::vector<Exponents>& basis,
                              const std::map<Exponents, std::size_t>& index) {
  std::vector<K> row(basis.size(), K(0));
  for (const auto& [e, c] : p.terms()) {
    auto it = index.find(e);
    if (it == index.end()) throw Error("polynomial has a term outside the graded basis");
    row[it->second] = c;
  }
  return row;
}

/// Span of the given homogeneous polynomials of degree d.
template <Field K>
GradedPiece<K> span_piece(const std::vector<Polynomial<K>>& polys, std::size_t nvars, unsigned d) {
  GradedPiece<K> g;
  g.degree = d;
  g.basis = monomials_of_degree(nvars, d);
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < g.basis.size(); ++i) index[g.basis[i]] = i;
  g.coordinates = Matrix<K>(0, g.basis.size());
  for (const auto& p : polys) g.coordinates.append_row(coordinates_in(p, g.basis, index));
  return g;
}

/// Degree-d piece of the ideal spanned by {m*g : deg(m*g) = d}.
template <Field K>
GradedPiece<K> ideal_graded_piece(const std::vector<Polynomial<K>>& generators, unsigned d) {
  if (generators.empty()) throw Error("ideal needs at least one generator");
  const Variables& vars = generators.front().variables();
  std::vector<Polynomial<K>> spanning;
  for (const auto& g : generators) {
    if (!g.is_homogeneous()) throw Error("inhomogeneous generator " + g.to_string());
    if (g.is_zero()) continue;
    int gd = g.total_degree();
    if (gd > static_cast<int>(d)) continue;
    for (const auto& m : monomials_of_degree(vars->size(), d - static_cast<unsigned>(gd)))
      spanning.push_back(Polynomial<K>::monomial(vars, m) * g);
  }
  return span_piece(spanning, vars->size(), d);
}

template <Field K>
std::size_t ideal_graded_dimension(const std::vector<Polynomial<K>>& generators, unsigned d) {
  return ideal_graded_piece(generators, d).dimension();
}

/// Is p in the degree-d piece spanned by `piece`?
template <Field K>
bool piece_contains(const GradedPiece<K>& piece, const Polynomial<K>& p) {
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < piece.basis.size(); ++i) index[piece.basis[i]] = i;
  Matrix<K> m = piece.coordinates;
  std::size_t before = m.rank();
  m.append_row(coordinates_in(p, piece.basis, index));
  return m.rank() == before;
}

}  // namespace fanocert::exact
