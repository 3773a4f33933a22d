#include "fanocert/exact/int_matrix.hpp"

#include <algorithm>
#include <functional>

#include "fanocert/error.hpp"
#include "fanocert/exact/matrix.hpp"

namespace fanocert::exact {

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  std::size_t c = rows.empty() ? 0 : rows.front().size();
  IntMatrix m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != c) throw Error("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = static_cast<long>(rows[i][j]);
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::select_rows(const std::vector<std::size_t>& which) const {
  IntMatrix s(which.size(), cols_);
  for (std::size_t i = 0; i < which.size(); ++i) {
    if (which[i] >= rows_) throw Error("row index out of range");
    for (std::size_t j = 0; j < cols_; ++j) s(i, j) = (*this)(which[i], j);
  }
  return s;
}

Integer determinant(const IntMatrix& in) {
  if (in.rows() != in.cols()) throw Error("determinant of a non-square matrix");
  std::size_t n = in.rows();
  if (n == 0) return 1;
  IntMatrix a = in;
  int sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

Integer lattice_index(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw Error("lattice_index needs a square matrix");
  Integer d = determinant(m);
  return abs(d);
}

std::size_t rank(const IntMatrix& m) {
  Matrix<Rational> q(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) q(i, j) = Rational(m(i, j));
  return q.rank();
}

Integer maximal_minor_gcd(const IntMatrix& m) {
  // minors of size min(rows, cols), taken over the longer side
  IntMatrix a = m.rows() <= m.cols() ? m.transpose() : m;
  std::size_t k = a.cols();
  Integer g = 0;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (pick.size() == k) {
      Integer d = determinant(a.select_rows(pick));
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      return;
    }
    for (std::size_t i = start; i < a.rows(); ++i) {
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
    }
  };
  rec(0);
  return g;
}

}  // namespace fanocert::exact
