#ifndef BGSYS_RATIONAL_HPP
#define BGSYS_RATIONAL_HPP

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace bgsys {

class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Exact rational scalar. Canonical form is maintained by every operation:
/// lowest terms, denominator > 0. No floating point anywhere.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor): scalars mix freely
  Rational(long num, long den);
  explicit Rational(const std::string& s);

  static Rational from_mpq(mpq_class q) {
    Rational r;
    q.canonicalize();
    r.v_ = std::move(q);
    return r;
  }

  const mpq_class& raw() const { return v_; }
  mpz_class numerator() const { return v_.get_num(); }
  mpz_class denominator() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  /// Exact conversion; throws unless the value is an integer fitting a long.
  long to_long() const;

  std::string str() const;

  Rational operator-() const { return from_mpq(-v_); }
  Rational& operator+=(const Rational& o) {
    v_ += o.v_;
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    v_ -= o.v_;
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    v_ *= o.v_;
    return *this;
  }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) == 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return cmp(a.v_, b.v_) >= 0; }

 private:
  mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

Rational factorial(unsigned n);

/// Generalized binomial coefficient j(j-1)...(j-m+1)/m!, defined for every
/// integer j (negative included); equals the usual binomial for j >= 0.
Rational binomial_general(long j, unsigned m);

}  // namespace bgsys

#endif
