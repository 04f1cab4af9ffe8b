#include "bgsys/multipoly.hpp"

#include <ostream>
#include <sstream>

namespace bgsys {

PolyRing::PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {
  for (int i = 0; i < static_cast<int>(vars_.size()); ++i) {
    auto [it, fresh] = index_.emplace(vars_[i], i);
    if (!fresh) throw error("duplicate ring variable '" + vars_[i] + "'");
  }
}

int PolyRing::var_index(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) throw error("unknown ring variable '" + name + "'");
  return it->second;
}

bool PolyRing::has_var(const std::string& name) const { return index_.count(name) != 0; }

MultiPoly MultiPoly::constant(PolyRingPtr ring, const Rational& c) {
  MultiPoly p(std::move(ring));
  if (!c.is_zero()) p.terms_.emplace(Exponents(p.ring_->arity(), 0), c);
  return p;
}

MultiPoly MultiPoly::var(PolyRingPtr ring, int i, int exponent) {
  MultiPoly p(std::move(ring));
  if (i < 0 || i >= p.ring_->arity()) throw error("ring variable index out of range");
  if (exponent < 0) throw error("negative exponent");
  Exponents e(p.ring_->arity(), 0);
  e[i] = exponent;
  p.terms_.emplace(std::move(e), Rational(1));
  return p;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int s = 0;
    for (int x : e) s += x;
    if (s > d) d = s;
  }
  return d;
}

Rational MultiPoly::coeff(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
  if (c.is_zero()) return;
  if (static_cast<int>(e.size()) != ring_->arity()) throw error("exponent vector arity mismatch");
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_same_ring(const MultiPoly& o) const {
  if (ring_ == o.ring_) return;
  if (ring_ && o.ring_ && ring_->var_names() == o.ring_->var_names()) return;
  throw error("polynomial ring mismatch");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_same_ring(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  check_same_ring(o);
  MultiPoly r(ring_);
  const int n = ring_->arity();
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exponents e(n);
      for (int i = 0; i < n; ++i) e[i] = ea[i] + eb[i];
      r.add_term(e, ca * cb);
    }
  }
  terms_.swap(r.terms_);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  a.check_same_ring(b);
  return a.terms_ == b.terms_;
}

MultiPoly MultiPoly::pow(unsigned k) const {
  MultiPoly r = constant(ring_, Rational(1));
  for (unsigned i = 0; i < k; ++i) r *= *this;
  return r;
}

MultiPoly MultiPoly::partial(int i) const {
  if (i < 0 || i >= ring_->arity()) throw error("ring variable index out of range");
  MultiPoly r(ring_);
  for (const auto& [e, c] : terms_) {
    if (e[i] == 0) continue;
    Exponents d = e;
    d[i] -= 1;
    r.add_term(d, c * Rational(e[i]));
  }
  return r;
}

MultiPoly MultiPoly::partial(const std::string& var) const { return partial(ring_->var_index(var)); }

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const {
  std::vector<const Rational*> assign(ring_->arity(), nullptr);
  for (const auto& [name, val] : point) {
    if (ring_->has_var(name)) assign[ring_->var_index(name)] = &val;
  }
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < ring_->arity(); ++i) {
      if (e[i] == 0) continue;
      if (assign[i] == nullptr)
        throw error("evaluation point misses variable '" + ring_->var_name(i) + "'");
      for (int k = 0; k < e[i]; ++k) term *= *assign[i];
    }
    total += term;
  }
  return total;
}

Rational MultiPoly::eval_full(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != ring_->arity())
    throw error("evaluation point arity mismatch");
  Rational total(0);
  for (const auto& [e, c] : terms_) {
    Rational term = c;
    for (int i = 0; i < ring_->arity(); ++i)
      for (int k = 0; k < e[i]; ++k) term *= point[i];
    total += term;
  }
  return total;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a.sign() < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
      if (a.sign() < 0) a = -a;
    }
    bool has_vars = false;
    std::ostringstream mono;
    for (int i = 0; i < ring_->arity(); ++i) {
      if (e[i] == 0) continue;
      if (has_vars) mono << "*";
      mono << ring_->var_name(i);
      if (e[i] > 1) mono << "^" << e[i];
      has_vars = true;
    }
    if (!has_vars) {
      os << a.str();
    } else if (a == Rational(1)) {
      os << mono.str();
    } else {
      os << a.str() << "*" << mono.str();
    }
    first = false;
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

}  // namespace bgsys
