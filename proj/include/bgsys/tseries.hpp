#ifndef BGSYS_TSERIES_HPP
#define BGSYS_TSERIES_HPP

#include <string>
#include <vector>

#include "bgsys/rational.hpp"

namespace bgsys {

/// Power series in t truncated at a fixed order T: coefficients 0..T are
/// stored and exact. Products only consume coefficients <= k to produce
/// coefficient k, so truncation is consistent.
class TSeries {
 public:
  explicit TSeries(int trunc);

  static TSeries one(int trunc);
  static TSeries monomial(int k, int trunc, const Rational& c = Rational(1));

  int trunc() const { return static_cast<int>(c_.size()) - 1; }
  const Rational& coeff(int k) const { return c_.at(k); }
  void set_coeff(int k, const Rational& v) { c_.at(k) = v; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;

  TSeries truncated(int new_trunc) const;

  TSeries operator-() const;
  TSeries& operator+=(const TSeries& o);
  TSeries& operator-=(const TSeries& o);
  TSeries& operator*=(const TSeries& o);
  TSeries& operator*=(const Rational& c);

  friend TSeries operator+(TSeries a, const TSeries& b) { return a += b; }
  friend TSeries operator-(TSeries a, const TSeries& b) { return a -= b; }
  friend TSeries operator*(TSeries a, const TSeries& b) { return a *= b; }
  friend TSeries operator*(const Rational& c, TSeries s) { return s *= c; }
  friend bool operator==(const TSeries& a, const TSeries& b) { return a.c_ == b.c_; }
  friend bool operator!=(const TSeries& a, const TSeries& b) { return !(a == b); }

  std::string str() const;

 private:
  void check_trunc(const TSeries& o) const;

  std::vector<Rational> c_;
};

/// Expansion of 1/(1 - t^d) to order T. Requires d >= 1.
TSeries geometric_series(int d, int trunc);

std::ostream& operator<<(std::ostream& os, const TSeries& s);

}  // namespace bgsys

#endif
