#include "bgsys/fock.hpp"

#include <algorithm>
#include <sstream>

namespace bgsys {

long mode_weight(const GenMode& g) {
  return g.kind == ModeKind::beta ? -static_cast<long>(g.mode)
                                  : -static_cast<long>(g.mode) - 1;
}

FockMonomial::FockMonomial(std::vector<GenMode> modes) : modes_(std::move(modes)) {
  for (const auto& g : modes_)
    if (g.mode >= 0) throw error("Fock monomials admit creation modes only (mode <= -1)");
  std::sort(modes_.begin(), modes_.end());
}

long FockMonomial::weight() const {
  long w = 0;
  for (const auto& g : modes_) w += mode_weight(g);
  return w;
}

long FockMonomial::depth() const {
  long d = 0;
  for (const auto& g : modes_) d = std::max(d, -static_cast<long>(g.mode));
  return d;
}

FockMonomial FockMonomial::with_inserted(const GenMode& g) const {
  if (g.mode >= 0) throw error("cannot insert an annihilation mode into a monomial");
  FockMonomial m;
  m.modes_.reserve(modes_.size() + 1);
  auto it = std::lower_bound(modes_.begin(), modes_.end(), g);
  m.modes_.insert(m.modes_.end(), modes_.begin(), it);
  m.modes_.push_back(g);
  m.modes_.insert(m.modes_.end(), it, modes_.end());
  return m;
}

FockMonomial FockMonomial::without(int pos) const {
  FockMonomial m;
  m.modes_ = modes_;
  m.modes_.erase(m.modes_.begin() + pos);
  return m;
}

FockState FockState::vacuum() {
  FockState s;
  s.terms_.emplace(FockMonomial::vacuum(), Rational(1));
  return s;
}

FockState FockState::single(ModeKind kind, int index, int mode) {
  FockState s;
  s.add_term(FockMonomial({GenMode{kind, index, mode}}), Rational(1));
  return s;
}

void FockState::add_term(const FockMonomial& m, const Rational& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    terms_.emplace(m, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

long FockState::max_weight() const {
  long w = 0;
  for (const auto& [m, c] : terms_) w = std::max(w, m.weight());
  return w;
}

long FockState::max_depth() const {
  long d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.depth());
  return d;
}

int FockState::max_degree() const {
  int d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool FockState::is_homogeneous(long* weight_out) const {
  bool first = true;
  long w = 0;
  for (const auto& [m, c] : terms_) {
    if (first) {
      w = m.weight();
      first = false;
    } else if (m.weight() != w) {
      return false;
    }
  }
  if (weight_out) *weight_out = w;
  return true;
}

FockState FockState::operator-() const {
  FockState s;
  for (const auto& [m, c] : terms_) s.terms_.emplace(m, -c);
  return s;
}

FockState& FockState::operator+=(const FockState& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

FockState& FockState::operator-=(const FockState& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

FockState& FockState::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

std::string FockState::str(const std::vector<std::string>& v_names) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
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
    std::ostringstream mono;
    for (const auto& g : m.modes()) {
      std::string name = g.index < static_cast<int>(v_names.size())
                             ? v_names[g.index]
                             : "x" + std::to_string(g.index + 1);
      if (g.kind == ModeKind::beta)
        mono << "b[" << name << "](" << g.mode << ")";
      else
        mono << "g[" << name << "'](" << g.mode << ")";
    }
    if (m.is_vacuum()) {
      os << a.str();
    } else if (a == Rational(1)) {
      os << mono.str();
    } else {
      os << a.str() << " " << mono.str();
    }
    first = false;
  }
  return os.str();
}

FockState mode_action(const GenMode& g, const FockState& s) {
  FockState out;
  if (g.mode <= -1) {
    for (const auto& [m, c] : s.terms()) out.add_term(m.with_inserted(g), c);
    return out;
  }
  // Nonnegative mode: one contraction term per complementary creation mode
  // with matching index and m + k + 1 = 0; the leftover vacuum action is zero.
  for (const auto& [m, c] : s.terms()) {
    const auto& modes = m.modes();
    for (int p = 0; p < static_cast<int>(modes.size()); ++p) {
      const GenMode& t = modes[p];
      if (t.kind == g.kind || t.index != g.index) continue;
      if (g.mode + t.mode + 1 != 0) continue;
      out.add_term(m.without(p), g.kind == ModeKind::beta ? c : -c);
    }
  }
  return out;
}

namespace {

// a o_n b for one monomial a = modes[pos..]. The first creation mode in
// canonical order is split off as G(-m-1), whose field is (1/m!) d^m G(z),
// and the normally ordered mode expansion
//   (:u v:)(n) = sum_{j<=-1} u(j) v(n-1-j) + sum_{j>=0} v(n-1-j) u(j)
// is applied with u(j) = (-1)^m C(j,m) G(j-m) and v(k) = (rest) o_k (.).
// Any fixed splitting is valid; identity tests pin the convention.
FockState nth_mon(const std::vector<GenMode>& modes, size_t pos, long n, const FockState& b) {
  if (pos == modes.size()) {
    if (n == -1) return b;
    return FockState::zero();
  }
  const GenMode& g = modes[pos];
  const long m = -static_cast<long>(g.mode) - 1;
  const Rational sign = (m % 2 == 0) ? Rational(1) : Rational(-1);

  FockState acc;

  // Annihilation side: G(j-m) with j >= m hits b first. Terms die once the
  // mode is deeper than anything in b.
  const long jmax = m + b.max_depth() - 1;
  for (long j = m; j <= jmax; ++j) {
    GenMode ann{g.kind, g.index, static_cast<int>(j - m)};
    FockState gb = mode_action(ann, b);
    if (gb.is_zero()) continue;
    FockState rec = nth_mon(modes, pos + 1, n - 1 - j, gb);
    if (rec.is_zero()) continue;
    acc += (sign * binomial_general(j, static_cast<unsigned>(m))) * rec;
  }

  // Creation side: the recursion vanishes once n-1-j >= wt(rest) + wt(b),
  // since no state has negative weight.
  long rest_weight = 0;
  for (size_t q = pos + 1; q < modes.size(); ++q) rest_weight += mode_weight(modes[q]);
  const long jmin = n - (rest_weight + b.max_weight());
  for (long j = -1; j >= jmin; --j) {
    FockState rec = nth_mon(modes, pos + 1, n - 1 - j, b);
    if (rec.is_zero()) continue;
    GenMode cre{g.kind, g.index, static_cast<int>(j - m)};
    acc += (sign * binomial_general(j, static_cast<unsigned>(m))) * mode_action(cre, rec);
  }
  return acc;
}

}  // namespace

FockState nth_product(const FockState& a, long n, const FockState& b) {
  FockState out;
  if (a.is_zero() || b.is_zero()) return out;
  for (const auto& [mon, c] : a.terms()) {
    FockState part = nth_mon(mon.modes(), 0, n, b);
    part *= c;
    out += part;
  }
  return out;
}

FockState wick(const FockState& a, const FockState& b) { return nth_product(a, -1, b); }

FockState derivative(const FockState& a) {
  FockState out;
  for (const auto& [mon, c] : a.terms()) {
    const auto& modes = mon.modes();
    for (int p = 0; p < static_cast<int>(modes.size()); ++p) {
      GenMode g = modes[p];
      FockMonomial rest = mon.without(p);
      g.mode -= 1;
      out.add_term(rest.with_inserted(g), c * Rational(-(modes[p].mode)));
    }
  }
  return out;
}

std::map<long, FockState> ope_singular(const FockState& a, const FockState& b) {
  std::map<long, FockState> out;
  const long bound = a.max_weight() + b.max_weight();
  for (long n = 0; n < bound; ++n) {
    FockState p = nth_product(a, n, b);
    if (!p.is_zero()) out.emplace(n, std::move(p));
  }
  return out;
}

}  // namespace bgsys
