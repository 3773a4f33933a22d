#include <algorithm>
#include <sstream>

#include "fanocert/error.hpp"
#include "fanocert/exact/graded.hpp"
#include "fanocert/hodge/hodge.hpp"

namespace fanocert::hodge {

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t n, std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

exact::Variables projective_variables(unsigned N) {
  std::vector<std::string> names;
  for (unsigned i = 0; i <= N; ++i) names.push_back("x" + std::to_string(i));
  return exact::make_variables(std::move(names));
}

std::string to_string(const Section& s) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : s) {
    if (c.is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*";
    for (std::size_t i = 0; i < idx.size(); ++i) os << (i ? "^" : "") << "e" << idx[i];
  }
  return first ? "0" : os.str();
}

std::size_t h0_omega_p(unsigned p, long long d, unsigned N) { return euler_contraction_dimensions(p, d, N).kernel; }

EulerContractionDims euler_contraction_dimensions(unsigned p, long long d, unsigned N) {
  EulerContractionDims dims;
  const std::size_t nv = N + 1;
  if (p > N || d - static_cast<long long>(p) < 0) return dims;
  const auto src_deg = static_cast<unsigned>(d - p);
  auto monos = exact::monomials_of_degree(nv, src_deg);
  dims.source = subsets(nv, p).size() * monos.size();
  if (p == 0) {
    dims.kernel = dims.source;
    return dims;
  }
  dims.target = subsets(nv, p - 1).size() * exact::monomials_of_degree(nv, src_deg + 1).size();

  // The contraction preserves the multidegree of monomial * e_I, so the matrix is block diagonal.
  using Key = std::vector<unsigned>;
  struct Block {
    std::vector<std::pair<std::vector<std::size_t>, exact::Exponents>> sources;
  };
  std::map<Key, Block> blocks;
  for (const auto& I : subsets(nv, p))
    for (const auto& m : monos) {
      Key key(m.begin(), m.end());
      for (auto i : I) ++key[i];
      blocks[key].sources.emplace_back(I, m);
    }

  for (const auto& [key, block] : blocks) {
    std::map<std::pair<std::vector<std::size_t>, exact::Exponents>, std::size_t> target_index;
    std::vector<std::vector<std::pair<std::size_t, int>>> images;
    for (const auto& [I, m] : block.sources) {
      std::vector<std::pair<std::size_t, int>> img;
      for (std::size_t k = 0; k < I.size(); ++k) {
        std::vector<std::size_t> J = I;
        J.erase(J.begin() + static_cast<std::ptrdiff_t>(k));
        exact::Exponents m2 = m;
        ++m2[I[k]];
        auto [it, fresh] = target_index.emplace(std::make_pair(J, m2), target_index.size());
        img.emplace_back(it->second, k % 2 == 0 ? 1 : -1);
      }
      images.push_back(std::move(img));
    }
    std::vector<std::vector<Rational>> rows;
    for (const auto& img : images) {
      std::vector<Rational> row(target_index.size(), Rational(0));
      for (auto [t, s] : img) row[t] = row[t] + Rational(s);
      rows.push_back(std::move(row));
    }
    dims.image += exact::span_dimension(rows);
  }
  dims.kernel = dims.source - dims.image;
  return dims;
}

Section euler_contraction(const Section& s, unsigned N) {
  auto vars = projective_variables(N);
  Section out;
  for (const auto& [I, c] : s) {
    if (c.nvars() != vars->size()) throw Error("section coefficients live in the wrong ring");
    for (std::size_t k = 0; k < I.size(); ++k) {
      std::vector<std::size_t> J = I;
      J.erase(J.begin() + static_cast<std::ptrdiff_t>(k));
      Poly term = Poly::variable(vars, I[k]) * c;
      auto it = out.find(J);
      if (it == out.end()) it = out.emplace(J, Poly(vars)).first;
      if (k % 2 == 0)
        it->second += term;
      else
        it->second -= term;
    }
  }
  std::erase_if(out, [](const auto& kv) { return kv.second.is_zero(); });
  return out;
}

std::vector<Section> zeta_basis(unsigned N) {
  auto vars = projective_variables(N);
  auto x = [&](std::size_t i) { return Poly::variable(vars, i); };
  std::vector<Section> out;
  for (const auto& t : subsets(N + 1, 3)) {
    std::size_t i = t[0], j = t[1], k = t[2];
    // e_k ^ e_i = -e_i ^ e_k
    out.push_back(Section{{{j, k}, x(i)}, {{i, k}, -x(j)}, {{i, j}, x(k)}});
  }
  return out;
}

exact::Variables curve_variables() {
  static const exact::Variables v = exact::make_variables({"s", "t"});
  return v;
}

std::size_t omega2_vanishing_on_curve(const std::vector<Poly>& curve) {
  auto zetas = zeta_basis(3);
  if (curve.empty()) return zetas.size();
  if (curve.size() != 4) throw Error("curve in P^3 needs 4 coordinate forms");
  int deg = -1;
  for (const auto& c : curve) {
    if (*c.variables() != *curve_variables()) throw Error("curve forms must be in (s, t)");
    if (c.is_zero()) continue;
    if (!c.is_homogeneous()) throw Error("curve form " + c.to_string() + " is not homogeneous");
    if (deg >= 0 && c.total_degree() != deg) throw Error("curve forms have different degrees");
    deg = c.total_degree();
  }
  if (deg <= 0) throw Error("degenerate curve parametrization");
  {
    auto basis = exact::monomials_of_degree(2, static_cast<unsigned>(deg));
    std::map<exact::Exponents, std::size_t> index;
    for (std::size_t i = 0; i < basis.size(); ++i) index[basis[i]] = i;
    std::vector<std::vector<Rational>> rows;
    for (const auto& c : curve) rows.push_back(exact::coordinates_in(c, basis, index));
    if (exact::span_dimension(rows) < 2) throw Error("curve coordinates are all proportional");
  }

  // one unknown per zeta; one equation per (wedge pair, monomial in s, t)
  std::map<std::pair<std::vector<std::size_t>, exact::Exponents>, std::vector<Rational>> equations;
  for (std::size_t z = 0; z < zetas.size(); ++z)
    for (const auto& [idx, coef] : zetas[z]) {
      Poly pulled = exact::poly_compose(coef, curve);
      for (const auto& [e, c] : pulled.terms()) {
        auto& row = equations.try_emplace({idx, e}, zetas.size(), Rational(0)).first->second;
        row[z] = row[z] + c;
      }
    }
  std::vector<std::vector<Rational>> rows;
  for (auto& [k, row] : equations) rows.push_back(std::move(row));
  return zetas.size() - (rows.empty() ? 0 : exact::span_dimension(rows));
}

}  // namespace fanocert::hodge
