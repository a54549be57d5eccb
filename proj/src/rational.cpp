#include "algebroid/rational.hpp"

namespace algebroid {

Rational::Rational(long n, long d) {
  if (d == 0) throw parse_error("rational with zero denominator");
  v_ = mpq_class(n, d);
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::from_string(std::string_view s) {
  if (s.empty()) throw parse_error("empty rational literal");
  std::string str(s);
  auto slash = str.find('/');
  try {
    if (slash == std::string::npos) {
      mpz_class n(str);
      return Rational(mpq_class(n));
    }
    mpz_class n(str.substr(0, slash));
    mpz_class d(str.substr(slash + 1));
    if (sgn(d) == 0) throw parse_error("rational with zero denominator: " + str);
    mpq_class q(n);
    q /= mpq_class(d);
    return Rational(q);
  } catch (const std::invalid_argument&) {
    throw parse_error("bad rational literal: " + str);
  }
}

std::string Rational::to_string() const {
  return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

}  // namespace algebroid
