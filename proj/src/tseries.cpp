#include "bgsys/tseries.hpp"

#include <ostream>
#include <sstream>

namespace bgsys {

TSeries::TSeries(int trunc) {
  if (trunc < 0) throw error("negative truncation order");
  c_.assign(trunc + 1, Rational(0));
}

TSeries TSeries::one(int trunc) {
  TSeries s(trunc);
  s.c_[0] = Rational(1);
  return s;
}

TSeries TSeries::monomial(int k, int trunc, const Rational& c) {
  TSeries s(trunc);
  if (k < 0) throw error("negative series exponent");
  if (k <= trunc) s.c_[k] = c;
  return s;
}

bool TSeries::is_zero() const {
  for (const auto& x : c_)
    if (!x.is_zero()) return false;
  return true;
}

TSeries TSeries::truncated(int new_trunc) const {
  TSeries s(new_trunc);
  for (int k = 0; k <= new_trunc && k <= trunc(); ++k) s.c_[k] = c_[k];
  return s;
}

void TSeries::check_trunc(const TSeries& o) const {
  if (c_.size() != o.c_.size()) throw error("series truncation order mismatch");
}

TSeries TSeries::operator-() const {
  TSeries s(trunc());
  for (size_t k = 0; k < c_.size(); ++k) s.c_[k] = -c_[k];
  return s;
}

TSeries& TSeries::operator+=(const TSeries& o) {
  check_trunc(o);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

TSeries& TSeries::operator-=(const TSeries& o) {
  check_trunc(o);
  for (size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

TSeries& TSeries::operator*=(const TSeries& o) {
  check_trunc(o);
  std::vector<Rational> out(c_.size(), Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    for (size_t j = 0; i + j < c_.size(); ++j) {
      if (o.c_[j].is_zero()) continue;
      out[i + j] += c_[i] * o.c_[j];
    }
  }
  c_.swap(out);
  return *this;
}

TSeries& TSeries::operator*=(const Rational& c) {
  for (auto& x : c_) x *= c;
  return *this;
}

std::string TSeries::str() const {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= trunc(); ++k) {
    if (c_[k].is_zero()) continue;
    Rational a = c_[k];
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    if (k == 0) {
      os << a.str();
    } else {
      if (a != Rational(1)) os << a.str() << "*";
      os << "t";
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  if (first) os << "0";
  os << " + O(t^" << trunc() + 1 << ")";
  return os.str();
}

TSeries geometric_series(int d, int trunc) {
  if (d < 1) throw error("geometric series requires d >= 1");
  TSeries s(trunc);
  for (int k = 0; k * d <= trunc; ++k) s.set_coeff(k * d, Rational(1));
  return s;
}

std::ostream& operator<<(std::ostream& os, const TSeries& s) { return os << s.str(); }

}  // namespace bgsys
