#ifndef BGSYS_LINALG_HPP
#define BGSYS_LINALG_HPP

#include <string>
#include <vector>

#include "bgsys/rational.hpp"

namespace bgsys {

/// Dense matrix over the exact rationals. Small sizes only; all algorithms
/// are plain fraction-exact Gaussian elimination.
class QMatrix {
 public:
  QMatrix() : rows_(0), cols_(0) {}
  QMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

  static QMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Rational& at(int i, int j) { return a_[i * cols_ + j]; }
  const Rational& at(int i, int j) const { return a_[i * cols_ + j]; }

  bool is_zero() const;
  bool is_symmetric() const;

  QMatrix transpose() const;
  Rational trace() const;

  QMatrix operator-() const;
  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rational& c);
  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& c, QMatrix m) { return m *= c; }
  friend bool operator==(const QMatrix& a, const QMatrix& b);
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  int rank() const;
  int kernel_dim() const { return cols_ - rank(); }

  /// Exact inverse; throws for a singular matrix.
  QMatrix inverse() const;
  bool is_invertible() const;

  Rational det() const;

  /// Coefficients of det(xI - A), ascending in x (Faddeev-LeVerrier).
  std::vector<Rational> char_poly() const;

  std::string str() const;

 private:
  int rows_, cols_;
  std::vector<Rational> a_;
};

/// Integer roots of the characteristic polynomial together with algebraic
/// multiplicities, found by bounded search (Gershgorin) plus deflation.
/// Returns false if the polynomial does not split over the integers.
bool integer_eigenvalues(const QMatrix& m, std::vector<std::pair<long, int>>& out);

}  // namespace bgsys

#endif
