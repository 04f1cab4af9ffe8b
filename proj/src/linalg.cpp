#include "bgsys/linalg.hpp"

#include <sstream>
#include <utility>

namespace bgsys {

QMatrix QMatrix::identity(int n) {
  QMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

bool QMatrix::is_zero() const {
  for (const auto& x : a_)
    if (!x.is_zero()) return false;
  return true;
}

bool QMatrix::is_symmetric() const {
  if (rows_ != cols_) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

QMatrix QMatrix::transpose() const {
  QMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

Rational QMatrix::trace() const {
  if (rows_ != cols_) throw error("trace of a non-square matrix");
  Rational s(0);
  for (int i = 0; i < rows_; ++i) s += at(i, i);
  return s;
}

QMatrix QMatrix::operator-() const {
  QMatrix m(rows_, cols_);
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] = -a_[k];
  return m;
}

QMatrix& QMatrix::operator+=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix shape mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
  return *this;
}

QMatrix& QMatrix::operator-=(const QMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw error("matrix shape mismatch");
  for (size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
  return *this;
}

QMatrix& QMatrix::operator*=(const Rational& c) {
  for (auto& x : a_) x *= c;
  return *this;
}

QMatrix operator*(const QMatrix& a, const QMatrix& b) {
  if (a.cols_ != b.rows_) throw error("matrix shape mismatch in product");
  QMatrix m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      if (a.at(i, k).is_zero()) continue;
      for (int j = 0; j < b.cols_; ++j) m.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return m;
}

bool operator==(const QMatrix& a, const QMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

namespace {

// In-place row echelon; returns rank. Pivots are chosen among the first
// pivot_cols columns only; row operations apply to the full width.
int echelon(QMatrix& m, int pivot_cols = -1) {
  if (pivot_cols < 0) pivot_cols = m.cols();
  int rank = 0;
  for (int col = 0; col < pivot_cols && rank < m.rows(); ++col) {
    int pivot = -1;
    for (int r = rank; r < m.rows(); ++r) {
      if (!m.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = col; j < m.cols(); ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    Rational inv = Rational(1) / m.at(rank, col);
    for (int j = col; j < m.cols(); ++j) m.at(rank, j) *= inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == rank || m.at(r, col).is_zero()) continue;
      Rational f = m.at(r, col);
      for (int j = col; j < m.cols(); ++j) m.at(r, j) -= f * m.at(rank, j);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

int QMatrix::rank() const {
  QMatrix work = *this;
  return echelon(work);
}

bool QMatrix::is_invertible() const { return rows_ == cols_ && rank() == rows_; }

QMatrix QMatrix::inverse() const {
  if (rows_ != cols_) throw error("inverse of a non-square matrix");
  QMatrix work(rows_, 2 * cols_);
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) work.at(i, j) = at(i, j);
    work.at(i, cols_ + i) = Rational(1);
  }
  int r = echelon(work, cols_);
  if (r != rows_) throw error("matrix is singular");
  QMatrix inv(rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) inv.at(i, j) = work.at(i, cols_ + j);
  return inv;
}

Rational QMatrix::det() const {
  if (rows_ != cols_) throw error("determinant of a non-square matrix");
  QMatrix work = *this;
  Rational d(1);
  for (int col = 0; col < cols_; ++col) {
    int pivot = -1;
    for (int r = col; r < rows_; ++r) {
      if (!work.at(r, col).is_zero()) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) return Rational(0);
    if (pivot != col) {
      for (int j = col; j < cols_; ++j) std::swap(work.at(pivot, j), work.at(col, j));
      d = -d;
    }
    d *= work.at(col, col);
    Rational inv = Rational(1) / work.at(col, col);
    for (int r = col + 1; r < rows_; ++r) {
      if (work.at(r, col).is_zero()) continue;
      Rational f = work.at(r, col) * inv;
      for (int j = col; j < cols_; ++j) work.at(r, j) -= f * work.at(col, j);
    }
  }
  return d;
}

std::vector<Rational> QMatrix::char_poly() const {
  if (rows_ != cols_) throw error("characteristic polynomial of a non-square matrix");
  const int n = rows_;
  // Faddeev-LeVerrier: M_1 = A, c_{n-1} = -tr(M_1), M_{k+1} = A(M_k + c_{n-k} I).
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  QMatrix m = *this;
  for (int k = 1; k <= n; ++k) {
    Rational ck = -(m.trace() / Rational(k));
    c[n - k] = ck;
    if (k < n) {
      QMatrix shifted = m;
      for (int i = 0; i < n; ++i) shifted.at(i, i) += ck;
      m = (*this) * shifted;
    }
  }
  return c;
}

std::string QMatrix::str() const {
  std::ostringstream os;
  for (int i = 0; i < rows_; ++i) {
    os << "[";
    for (int j = 0; j < cols_; ++j) {
      if (j) os << ", ";
      os << at(i, j).str();
    }
    os << "]";
    if (i + 1 < rows_) os << "\n";
  }
  return os.str();
}

bool integer_eigenvalues(const QMatrix& m, std::vector<std::pair<long, int>>& out) {
  out.clear();
  const int n = m.rows();
  if (n == 0) return true;
  std::vector<Rational> p = m.char_poly();

  // Gershgorin bound on every eigenvalue.
  Rational bound(0);
  for (int i = 0; i < n; ++i) {
    Rational row(0);
    for (int j = 0; j < n; ++j) {
      Rational v = m.at(i, j);
      row += (v.sign() < 0 ? -v : v);
    }
    if (row > bound) bound = row;
  }
  long limit = 0;
  {
    mpz_class num = bound.numerator(), den = bound.denominator();
    mpz_class q = num / den + 1;
    if (!q.fits_slong_p()) throw error("eigenvalue bound out of range");
    limit = q.get_si();
  }

  auto eval = [](const std::vector<Rational>& poly, long x) {
    Rational v(0);
    for (int k = static_cast<int>(poly.size()) - 1; k >= 0; --k) v = v * Rational(x) + poly[k];
    return v;
  };
  auto deflate = [](std::vector<Rational>& poly, long r) {
    // poly /= (x - r), exact by construction
    std::vector<Rational> q(poly.size() - 1, Rational(0));
    Rational carry(0);
    for (int k = static_cast<int>(poly.size()) - 1; k >= 1; --k) {
      q[k - 1] = poly[k] + carry;
      carry = q[k - 1] * Rational(r);
    }
    poly.swap(q);
  };

  for (long cand = -limit; cand <= limit; ++cand) {
    int mult = 0;
    while (p.size() > 1 && eval(p, cand).is_zero()) {
      deflate(p, cand);
      ++mult;
    }
    if (mult > 0) out.emplace_back(cand, mult);
  }
  return p.size() == 1;  // fully split iff only the leading 1 remains
}

}  // namespace bgsys
