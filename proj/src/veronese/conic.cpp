#include "fanocert/veronese/conic.hpp"

#include "fanocert/error.hpp"
#include "fanocert/exact/matrix.hpp"

namespace fanocert::veronese {

namespace {

template <class K>
using QF = QuadraticForm3<K>;

enum { XX, YY, ZZ, YZ, ZX, XY };

template <class K>
std::string coefficient_prefix(const K& c) {
  if (c == K(1)) return "";
  std::string s = c.to_string();
  return s.find('+') == std::string::npos ? s + "*" : "(" + s + ")*";
}

template <class K>
std::size_t span_rank(const std::vector<QF<K>>& forms) {
  std::vector<std::vector<K>> rows;
  for (const auto& q : forms) rows.emplace_back(q.c.begin(), q.c.end());
  return exact::span_dimension(rows);
}

// Product of two linear forms (coefficients on x, y, z).
template <class K>
QF<K> linear_product(const std::array<K, 3>& l, const std::array<K, 3>& m) {
  return QF<K>::from(l[0] * m[0], l[1] * m[1], l[2] * m[2], l[1] * m[2] + l[2] * m[1], l[2] * m[0] + l[0] * m[2],
                     l[0] * m[1] + l[1] * m[0]);
}

// q(L0, L1, L2) where x, y, z are replaced by the given linear forms.
template <class K>
QF<K> substitute(const QF<K>& q, const std::array<std::array<K, 3>, 3>& img) {
  QF<K> r;
  for (auto& x : r.c) x = K(0);
  const int pairs[6][2] = {{0, 0}, {1, 1}, {2, 2}, {1, 2}, {2, 0}, {0, 1}};
  for (int i = 0; i < 6; ++i)
    if (!q.c[i].is_zero()) r = r + q.c[i] * linear_product(img[pairs[i][0]], img[pairs[i][1]]);
  return r;
}

// A form in the working coordinates together with its coefficients on the input basis.
template <class K>
struct Tracked {
  QF<K> q;
  std::vector<K> combo;

  Tracked& add(const K& s, const Tracked& o) {
    q = q + s * o.q;
    for (std::size_t i = 0; i < combo.size(); ++i) combo[i] = combo[i] + s * o.combo[i];
    return *this;
  }
  Tracked& scale(const K& s) {
    q = s * q;
    for (auto& x : combo) x = s * x;
    return *this;
  }
};

template <class K>
Tracked<K> sum(Tracked<K> a, const Tracked<K>& b) {
  return a.add(K(1), b);
}

template <class K>
class CaseAnalysis {
 public:
  explicit CaseAnalysis(const ConicSubspace<K>& v) {
    for (std::size_t i = 0; i < v.dimension(); ++i) {
      Tracked<K> t{v.basis[i], std::vector<K>(v.dimension(), K(0))};
      t.combo[i] = K(1);
      elems_.push_back(std::move(t));
    }
  }

  std::optional<std::pair<Tracked<K>, std::string>> run() {
    // an element with a cross term, moved to xy and normalized
    std::size_t fi = elems_.size();
    for (std::size_t i = 0; i < elems_.size() && fi == elems_.size(); ++i)
      if (!elems_[i].q.c[XY].is_zero() || !elems_[i].q.c[YZ].is_zero() || !elems_[i].q.c[ZX].is_zero()) fi = i;
    if (fi == elems_.size()) return std::nullopt;
    Tracked<K> f = take(fi);
    if (f.q.c[XY].is_zero()) {
      if (!f.q.c[ZX].is_zero())
        swap_vars(1, 2, f);
      else
        swap_vars(0, 2, f);
    }
    f.scale(K(1) / f.q.c[XY]);

    // (x + alpha z)(y + beta z) - alpha beta z^2
    K alpha = f.q.c[YZ], beta = f.q.c[ZX];
    change({{{K(1), K(0), alpha}, {K(0), K(1), beta}, {K(0), K(0), K(1)}}}, f);
    if (!f.q.c[YZ].is_zero() || !f.q.c[ZX].is_zero()) return std::nullopt;
    if (!f.q.c[ZZ].is_zero()) return std::make_pair(f, std::string("normalized xy-term"));

    for (auto& e : elems_) e.add(-e.q.c[XY], f);
    std::size_t gi = elems_.size();
    for (std::size_t i = 0; i < elems_.size() && gi == elems_.size(); ++i)
      if (!elems_[i].q.c[YZ].is_zero() || !elems_[i].q.c[ZX].is_zero()) gi = i;
    if (gi == elems_.size()) {
      // (I): V is spanned by x^2, y^2, z^2, f, so z^2 + f lies in V
      if (elems_.size() < 3) return std::nullopt;
      Tracked<K> z2 = solve_square(ZZ);
      if (z2.combo.empty()) return std::nullopt;
      return std::make_pair(sum(f, z2), std::string("case I"));
    }

    // (II)
    Tracked<K> g = take(gi);
    if (g.q.c[YZ].is_zero()) {
      swap_vars(0, 1, f, g);
      f.scale(K(1) / f.q.c[XY]);
    }
    g.scale(K(1) / g.q.c[YZ]);
    if (!g.q.c[ZX].is_zero()) {
      K b2 = g.q.c[ZX];
      change({{{K(1), K(0), K(0)}, {b2, K(1), K(0)}, {K(0), K(0), K(1)}}}, f, g);
    }
    g.add(-g.q.c[XY], f);
    if (!g.q.c[ZX].is_zero() || !f.q.c[YZ].is_zero() || !f.q.c[ZX].is_zero()) return std::nullopt;
    if (!g.q.c[XX].is_zero()) return std::make_pair(g, std::string("case II"));

    for (auto& e : elems_) {
      e.add(-e.q.c[XY], f);
      e.add(-e.q.c[YZ], g);
    }
    if (elems_.empty()) return std::nullopt;
    std::size_t hi = elems_.size();
    for (std::size_t i = 0; i < elems_.size() && hi == elems_.size(); ++i)
      if (!elems_[i].q.c[ZX].is_zero()) hi = i;
    if (hi != elems_.size()) {
      // (III)
      Tracked<K> h = take(hi);
      h.scale(K(1) / h.q.c[ZX]);
      h.add(-h.q.c[XY], f);
      h.add(-h.q.c[YZ], g);
      if (!h.q.c[YY].is_zero()) return std::make_pair(h, std::string("case III"));
      if (elems_.empty()) return std::nullopt;
      Tracked<K> phi = elems_.front();
      phi.add(-phi.q.c[ZX], h);
      if (!phi.q.c[ZZ].is_zero()) return std::make_pair(sum(f, phi), std::string("case III"));
      if (!phi.q.c[XX].is_zero()) return std::make_pair(sum(g, phi), std::string("case III"));
      return std::make_pair(sum(h, phi), std::string("case III"));
    }

    // (IV): nothing in V has a zx-term
    Tracked<K> h = take(0);
    if (!h.q.c[ZZ].is_zero()) return std::make_pair(sum(f, h), std::string("case IV"));
    if (!h.q.c[XX].is_zero()) return std::make_pair(sum(g, h), std::string("case IV"));
    if (elems_.empty()) return std::nullopt;
    Tracked<K> phi = elems_.front();
    phi.add(-(phi.q.c[YY] / h.q.c[YY]), h);
    if (!phi.q.c[ZZ].is_zero()) return std::make_pair(sum(f, phi), std::string("case IV"));
    return std::make_pair(sum(g, phi), std::string("case IV"));
  }

 private:
  Tracked<K> take(std::size_t i) {
    Tracked<K> t = elems_[i];
    elems_.erase(elems_.begin() + static_cast<std::ptrdiff_t>(i));
    return t;
  }

  template <class... Extra>
  void change(const std::array<std::array<K, 3>, 3>& img, Extra&... extra) {
    for (auto& e : elems_) e.q = substitute(e.q, img);
    ((extra.q = substitute(extra.q, img)), ...);
  }

  template <class... Extra>
  void swap_vars(int i, int j, Extra&... extra) {
    std::array<std::array<K, 3>, 3> img{};
    for (int r = 0; r < 3; ++r)
      for (int c = 0; c < 3; ++c) img[r][c] = K(0);
    for (int r = 0; r < 3; ++r) img[r][r == i ? j : (r == j ? i : r)] = K(1);
    change(img, extra...);
  }

  // The pure square with index `which` as a combination of the remaining elements, if any.
  Tracked<K> solve_square(int which) {
    // remaining elements are pure squares here: eliminate on the x^2, y^2, z^2 coordinates
    std::vector<Tracked<K>> rows = elems_;
    std::size_t r = 0;
    std::array<int, 3> pivot_row{-1, -1, -1};
    for (int col = XX; col <= ZZ && r < rows.size(); ++col) {
      std::size_t p = r;
      while (p < rows.size() && rows[p].q.c[col].is_zero()) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[r], rows[p]);
      rows[r].scale(K(1) / rows[r].q.c[col]);
      for (std::size_t k = 0; k < rows.size(); ++k)
        if (k != r && !rows[k].q.c[col].is_zero()) rows[k].add(-rows[k].q.c[col], rows[r]);
      pivot_row[col] = static_cast<int>(r);
      ++r;
    }
    if (pivot_row[which] < 0) return {};
    Tracked<K> t = rows[static_cast<std::size_t>(pivot_row[which])];
    for (int col = XX; col <= ZZ; ++col)
      if (col != which && !t.q.c[col].is_zero()) return {};
    return t;
  }

  std::vector<Tracked<K>> elems_;
};

}  // namespace

template <class K>
std::string QuadraticForm3<K>::to_string() const {
  static const char* names[6] = {"x^2", "y^2", "z^2", "yz", "zx", "xy"};
  std::string s;
  for (int i = 0; i < 6; ++i) {
    if (c[i].is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += coefficient_prefix(c[i]) + names[i];
  }
  return s.empty() ? "0" : s;
}

template <class K>
ConicSubspace<K>::ConicSubspace(std::vector<QuadraticForm3<K>> b) : basis(std::move(b)) {
  if (basis.empty()) throw Error("conic subspace needs at least one basis form");
  if (span_rank(basis) != basis.size()) throw Error("conic subspace basis is linearly dependent");
}

template <class K>
QuadraticForm3<K> ConicSubspace<K>::combine(const std::vector<K>& coefficients) const {
  if (coefficients.size() != basis.size()) throw Error("combination length does not match the basis");
  QuadraticForm3<K> r;
  for (auto& x : r.c) x = K(0);
  for (std::size_t i = 0; i < basis.size(); ++i) r = r + coefficients[i] * basis[i];
  return r;
}

template <class K>
bool is_smooth_conic(const QuadraticForm3<K>& q) {
  if (q.is_zero()) throw Error("zero quadratic form is not a conic");
  const auto& c = q.c;
  // partials in char 2: (f y + e z, f x + d z, e x + d y)
  auto m = exact::Matrix<K>::from_rows({{K(0), c[XY], c[ZX]}, {c[XY], K(0), c[YZ]}, {c[ZX], c[YZ], K(0)}});
  auto ker = exact::kernel_dimension(m);
  // alternating 3x3: kernel has dimension 1 or 3. In the latter case q is the square of a
  // linear form and vanishes along a line.
  if (ker.dimension != 1) return false;
  const auto& p = ker.basis.front();
  return !q(p[0], p[1], p[2]).is_zero();
}

template <class K>
ConicSearchResult<K> exhaustive_smooth_conic(const ConicSubspace<K>& v) {
  const auto elems = K::elements();
  const std::size_t n = v.dimension();
  std::vector<std::size_t> idx(n, 0);
  ConicSearchResult<K> r;
  r.path = "exhaustive";
  for (;;) {
    std::size_t i = 0;
    while (i < n && ++idx[i] == elems.size()) idx[i++] = 0;
    if (i == n) return r;
    std::vector<K> combo;
    for (auto k : idx) combo.push_back(elems[k]);
    auto q = v.combine(combo);
    if (is_smooth_conic(q)) {
      r.form = q;
      r.combination = std::move(combo);
      return r;
    }
  }
}

template <class K>
ConicSearchResult<K> find_smooth_conic(const ConicSubspace<K>& v) {
  if (v.dimension() < 4) throw Error("smooth conic search needs a subspace of dimension at least 4");
  CaseAnalysis<K> analysis(v);
  if (auto found = analysis.run()) {
    auto q = v.combine(found->first.combo);
    if (!q.is_zero() && is_smooth_conic(q)) return {q, found->first.combo, found->second};
  }
  return exhaustive_smooth_conic(v);
}

template <class K>
ConicSubspace<K> random_conic_subspace(std::mt19937_64& rng, std::size_t dim) {
  if (dim == 0 || dim > 6) throw Error("conic subspace dimension must be in 1..6");
  const auto elems = K::elements();
  std::uniform_int_distribution<std::size_t> pick(0, elems.size() - 1);
  std::vector<QuadraticForm3<K>> basis;
  while (basis.size() < dim) {
    QuadraticForm3<K> q;
    for (auto& x : q.c) x = elems[pick(rng)];
    basis.push_back(q);
    if (span_rank(basis) != basis.size()) basis.pop_back();
  }
  return ConicSubspace<K>(std::move(basis));
}

#define FANOCERT_CONIC_INSTANTIATE(K)                                                  \
  template struct QuadraticForm3<K>;                                                  \
  template struct ConicSubspace<K>;                                                   \
  template bool is_smooth_conic<K>(const QuadraticForm3<K>&);                         \
  template ConicSearchResult<K> find_smooth_conic<K>(const ConicSubspace<K>&);        \
  template ConicSearchResult<K> exhaustive_smooth_conic<K>(const ConicSubspace<K>&);  \
  template ConicSubspace<K> random_conic_subspace<K>(std::mt19937_64&, std::size_t);

FANOCERT_CONIC_INSTANTIATE(exact::F2)
FANOCERT_CONIC_INSTANTIATE(exact::F4)

}  // namespace fanocert::veronese
