#include "fanocert/exact/rational.hpp"

#include "fanocert/error.hpp"

namespace fanocert::exact {

std::string to_string(const Integer& z) { return z.get_str(); }

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error("zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s, 10));
    return Rational(Integer(s.substr(0, slash), 10), Integer(s.substr(slash + 1), 10));
  } catch (const std::invalid_argument&) {
    throw Error("malformed rational '" + s + "'");
  }
}

Rational Rational::inverse() const {
  if (is_zero()) throw Error("inverse of zero");
  mpq_class r;
  mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
  return Rational(r);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::to_string() const {
  if (is_integer()) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

}  // namespace fanocert::exact
