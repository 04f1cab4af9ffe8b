#include "bgsys/rational.hpp"

#include <ostream>

namespace bgsys {

Rational::Rational(long num, long den) {
  if (den == 0) throw error("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const std::string& s) {
  if (s.empty()) throw error("empty rational literal");
  try {
    v_ = mpq_class(s);
  } catch (const std::invalid_argument&) {
    throw error("malformed rational literal: '" + s + "'");
  }
  if (v_.get_den() == 0) throw error("rational with zero denominator: '" + s + "'");
  v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw error("rational division by zero");
  v_ /= o.v_;
  return *this;
}

long Rational::to_long() const {
  if (!is_integer()) throw error("rational " + str() + " is not an integer");
  mpz_class n = numerator();
  if (!n.fits_slong_p()) throw error("integer " + str() + " out of long range");
  return n.get_si();
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational::from_mpq(mpq_class(f));
}

Rational binomial_general(long j, unsigned m) {
  if (m == 0) return Rational(1);
  mpz_class num = 1;
  for (unsigned i = 0; i < m; ++i) num *= mpz_class(j) - i;
  mpz_class den;
  mpz_fac_ui(den.get_mpz_t(), m);
  return Rational::from_mpq(mpq_class(num, den));
}

}  // namespace bgsys
