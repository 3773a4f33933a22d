#include <sstream>

#include "fanocert/error.hpp"
#include "fanocert/hodge/hodge.hpp"

namespace fanocert::hodge {

bool HodgeDiamond::serre_symmetric() const {
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (h[i][j] != h[3 - i][3 - j]) return false;
  return true;
}

Integer HodgeDiamond::euler_number() const {
  Integer e = 0;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) e += (i + j) % 2 == 0 ? h[i][j] : Integer(-h[i][j]);
  return e;
}

std::string HodgeDiamond::to_string() const {
  std::ostringstream os;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) os << (j ? " " : "") << exact::to_string(h[i][j]);
    os << "\n";
  }
  return os.str();
}

Integer ci_chi_omega1(const CIData& ci) {
  // Euler: 0 -> Omega_P|X -> O_X(-1)^{N+1} -> O_X -> 0
  Integer chi = Integer(ci.ambient_dim + 1) * ci_chi_twist(ci, -1) - ci_chi_twist(ci, 0);
  // conormal: 0 -> sum O_X(-d_i) -> Omega_P|X -> Omega_X -> 0
  for (unsigned d : ci.degrees) chi -= ci_chi_twist(ci, -static_cast<long long>(d));
  return chi;
}

HodgeDiamond ci_hodge_diamond(const CIData& ci) {
  if (ci.dimension() != 3) throw Error("Hodge diamond needs a threefold, got dimension " + std::to_string(ci.dimension()));
  HodgeDiamond d;
  // below the middle row X looks like P^N
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      if (i + j < 3) {
        d.h[i][j] = i == j ? 1 : 0;
        d.h[3 - i][3 - j] = d.h[i][j];
      }
  // chi(O_X) = 1 - h^{0,3}
  d.h[0][3] = 1 - ci_chi_twist(ci, 0);
  d.h[3][0] = d.h[0][3];
  // chi(Omega^1) = h10 - h11 + h12 - h13, with h13 = h20 by duality
  d.h[1][2] = ci_chi_omega1(ci) - d.h[1][0] + d.h[1][1] + d.h[2][0];
  d.h[2][1] = d.h[1][2];
  return d;
}

}  // namespace fanocert::hodge
