#ifndef BGSYS_MULTIPOLY_HPP
#define BGSYS_MULTIPOLY_HPP

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "bgsys/rational.hpp"

namespace bgsys {

/// Fixed, named variable set shared by all polynomials of one ring instance.
class PolyRing {
 public:
  explicit PolyRing(std::vector<std::string> vars);

  int arity() const { return static_cast<int>(vars_.size()); }
  const std::string& var_name(int i) const { return vars_.at(i); }
  const std::vector<std::string>& var_names() const { return vars_; }
  int var_index(const std::string& name) const;  // throws on unknown name
  bool has_var(const std::string& name) const;

 private:
  std::vector<std::string> vars_;
  std::map<std::string, int> index_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

/// Multivariate polynomial with exact rational coefficients over a fixed ring.
/// Exponent vectors are dense (one slot per ring variable); zero coefficients
/// are never stored.
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, Rational>;

  MultiPoly() = default;
  explicit MultiPoly(PolyRingPtr ring) : ring_(std::move(ring)) {}

  static MultiPoly zero(PolyRingPtr ring) { return MultiPoly(std::move(ring)); }
  static MultiPoly constant(PolyRingPtr ring, const Rational& c);
  static MultiPoly var(PolyRingPtr ring, int i, int exponent = 1);

  const PolyRingPtr& ring() const { return ring_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }
  int total_degree() const;  // -1 for the zero polynomial

  Rational coeff(const Exponents& e) const;
  void add_term(const Exponents& e, const Rational& c);

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(MultiPoly a, const MultiPoly& b) { return a *= b; }
  friend MultiPoly operator*(const Rational& c, MultiPoly p) { return p *= c; }
  friend MultiPoly operator*(MultiPoly p, const Rational& c) { return p *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned k) const;

  /// Formal partial derivative with respect to ring variable i.
  MultiPoly partial(int i) const;
  MultiPoly partial(const std::string& var) const;

  /// Exact evaluation. Every variable occurring in the polynomial must be
  /// assigned; a missing assignment is an error.
  Rational eval(const std::map<std::string, Rational>& point) const;
  Rational eval_full(const std::vector<Rational>& point) const;

  std::string str() const;

 private:
  void check_same_ring(const MultiPoly& o) const;

  PolyRingPtr ring_;
  TermMap terms_;
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

}  // namespace bgsys

#endif
