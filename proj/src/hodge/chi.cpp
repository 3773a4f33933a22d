#include <sstream>

#include "fanocert/error.hpp"
#include "fanocert/hodge/hodge.hpp"

namespace fanocert::hodge {

Integer chi_pn(long long m, unsigned N) {
  Integer num = 1, den = 1;
  for (unsigned i = 1; i <= N; ++i) {
    num *= Integer(static_cast<long>(m + i));
    den *= i;
  }
  return num / den;
}

CIData::CIData(unsigned N, std::vector<unsigned> d) : ambient_dim(N), degrees(std::move(d)) {
  if (degrees.size() >= ambient_dim) throw Error("complete intersection needs fewer equations than the ambient dimension");
  for (unsigned x : degrees)
    if (x == 0) throw Error("hypersurface degree must be positive");
}

std::string CIData::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < degrees.size(); ++i) os << (i ? "," : "") << degrees[i];
  os << ") in P^" << ambient_dim;
  return os.str();
}

Integer ci_chi_twist(const CIData& ci, long long k) {
  const std::size_t n = ci.degrees.size();
  Integer total = 0;
  for (unsigned long mask = 0; mask < (1ul << n); ++mask) {
    long long shift = 0;
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1ul << i)) {
        shift += ci.degrees[i];
        sign = -sign;
      }
    Integer c = chi_pn(k - shift, ci.ambient_dim);
    total += sign > 0 ? c : Integer(-c);
  }
  return total;
}

}  // namespace fanocert::hodge
