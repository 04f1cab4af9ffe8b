#include "bgsys/hilbert.hpp"

#include <cctype>
#include <sstream>

namespace bgsys {

QTSeries QTSeries::one(int trunc) {
  QTSeries s(trunc);
  s.slots_.emplace(0, TSeries::one(trunc));
  return s;
}

TSeries QTSeries::slot(long m) const {
  auto it = slots_.find(m);
  return it == slots_.end() ? TSeries(trunc_) : it->second;
}

void QTSeries::add(long m, const TSeries& s) {
  if (s.trunc() != trunc_) throw error("slot truncation mismatch");
  auto it = slots_.find(m);
  if (it == slots_.end()) {
    if (!s.is_zero()) slots_.emplace(m, s);
  } else {
    it->second += s;
    if (it->second.is_zero()) slots_.erase(it);
  }
}

QTSeries QTSeries::operator*(const QTSeries& o) const {
  if (trunc_ != o.trunc_) throw error("q-series truncation mismatch");
  QTSeries out(trunc_);
  for (const auto& [ma, sa] : slots_)
    for (const auto& [mb, sb] : o.slots_) out.add(ma + mb, sa * sb);
  return out;
}

bool operator==(const QTSeries& a, const QTSeries& b) {
  return a.trunc_ == b.trunc_ && a.slots_ == b.slots_;
}

QTSeries q_hilbert(const std::vector<long>& weights, int trunc) {
  if (trunc < 0) throw error("negative truncation order");
  QTSeries out = QTSeries::one(trunc);
  for (long a : weights) {
    QTSeries factor(trunc);
    for (int k = 0; k <= trunc; ++k) factor.add(a * k, TSeries::monomial(k, trunc));
    out = out * factor;
  }
  return out;
}

TSeries residue_extract(const QTSeries& s) { return s.slot(0) - s.slot(-2); }

SeriesComparison compare_series(const TSeries& p, const std::vector<Rational>& numerator,
                                const std::vector<int>& degrees) {
  const int T = p.trunc();
  TSeries target(T);
  for (int k = 0; k <= T && k < static_cast<int>(numerator.size()); ++k)
    target.set_coeff(k, numerator[k]);
  for (int d : degrees) target *= geometric_series(d, T);
  SeriesComparison cmp;
  for (int k = 0; k <= T; ++k) {
    if (p.coeff(k) != target.coeff(k)) {
      cmp.equal = false;
      cmp.first_mismatch = k;
      cmp.got = p.coeff(k);
      cmp.want = target.coeff(k);
      break;
    }
  }
  return cmp;
}

std::vector<Rational> numerator_coeffs(const MultiPoly& numerator, int trunc) {
  std::vector<Rational> out(trunc + 1, Rational(0));
  if (numerator.is_zero()) return out;
  if (numerator.ring()->arity() != 1) throw error("closed-form numerator must be univariate in t");
  for (const auto& [e, c] : numerator.terms()) {
    if (e[0] > trunc) throw error("numerator degree exceeds the truncation order");
    out[e[0]] = c;
  }
  return out;
}

Report compare_closed_form(const TSeries& p, const MultiPoly& numerator,
                           const std::vector<int>& degrees) {
  Report rep;
  rep.suite = "closed-form";
  SeriesComparison cmp = compare_series(p, numerator_coeffs(numerator, p.trunc()), degrees);
  std::ostringstream ref;
  ref << "series equals " << numerator.str() << " / prod(1 - t^d) for d in (";
  for (size_t i = 0; i < degrees.size(); ++i) {
    if (i) ref << ",";
    ref << degrees[i];
  }
  ref << ") up to t^" << p.trunc();
  std::string wit;
  if (!cmp.equal) {
    std::ostringstream os;
    os << "first mismatch at t^" << cmp.first_mismatch << ": " << cmp.got.str() << " vs "
       << cmp.want.str();
    wit = os.str();
  }
  rep.add("coefficients", ref.str(), cmp.equal, wit);
  return rep;
}

std::optional<MultiPoly> fit_denominator(const TSeries& p, const std::vector<int>& degrees,
                                         int max_num_degree) {
  const int T = p.trunc();
  TSeries f = p;
  for (int d : degrees) {
    // multiply by the exact polynomial (1 - t^d)
    TSeries poly(T);
    poly.set_coeff(0, Rational(1));
    if (d <= T) poly.set_coeff(d, Rational(-1));
    f *= poly;
  }
  for (int k = max_num_degree + 1; k <= T; ++k)
    if (!f.coeff(k).is_zero()) return std::nullopt;
  MultiPoly out(t_ring());
  for (int k = 0; k <= max_num_degree && k <= T; ++k)
    out.add_term({k}, f.coeff(k));
  return out;
}

PolyRingPtr t_ring() {
  static PolyRingPtr ring = std::make_shared<const PolyRing>(std::vector<std::string>{"t"});
  return ring;
}

namespace {

// Minimal polynomial-in-t parser for closed forms: terms like 3t^4, -t, 1/2.
MultiPoly parse_t_poly(const std::string& text) {
  MultiPoly p(t_ring());
  size_t i = 0;
  auto skip = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip();
  bool first = true;
  while (i < text.size()) {
    int sign = 1;
    skip();
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip();
    } else if (!first) {
      throw error("expected '+' or '-' in numerator polynomial");
    }
    first = false;
    std::string num;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/'))
      num.push_back(text[i++]);
    Rational coeff = num.empty() ? Rational(1) : Rational(num);
    if (sign < 0) coeff = -coeff;
    int exp = 0;
    skip();
    if (i < text.size() && (text[i] == 't' || text[i] == 'T')) {
      ++i;
      exp = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::string e;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
          e.push_back(text[i++]);
        if (e.empty()) throw error("missing exponent after '^'");
        exp = std::stoi(e);
      }
    } else if (num.empty()) {
      throw error("empty term in numerator polynomial");
    }
    p.add_term({exp}, coeff);
    skip();
  }
  return p;
}

}  // namespace

void parse_closed_form(const std::string& text, std::vector<Rational>& numerator,
                       std::vector<int>& degrees) {
  // split at the '/' introducing the denominator list, so rational
  // coefficients inside F (their own slashes) survive
  auto open = text.find('(');
  if (open == std::string::npos) throw error("closed form must look like F/(d1,d2,...)");
  auto slash = text.rfind('/', open);
  if (slash == std::string::npos) throw error("closed form must look like F/(d1,d2,...)");
  std::string fpart = text.substr(0, slash);
  auto close = text.rfind(')');
  if (close == std::string::npos || close < open)
    throw error("closed form must look like F/(d1,d2,...)");
  std::string inner = text.substr(open + 1, close - open - 1);
  degrees.clear();
  std::istringstream in(inner);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    size_t b = tok.find_last_not_of(" \t");
    int d = std::stoi(tok.substr(a, b - a + 1));
    if (d < 1) throw error("denominator degrees must be positive");
    degrees.push_back(d);
  }
  MultiPoly f = parse_t_poly(fpart);
  int maxdeg = f.total_degree();
  numerator.assign(std::max(maxdeg + 1, 1), Rational(0));
  for (const auto& [e, c] : f.terms()) numerator[e[0]] = c;
}

}  // namespace bgsys
