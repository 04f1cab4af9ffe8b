#ifndef BGSYS_HILBERT_HPP
#define BGSYS_HILBERT_HPP

#include <map>
#include <optional>
#include <vector>

#include "bgsys/multipoly.hpp"
#include "bgsys/report.hpp"
#include "bgsys/tseries.hpp"

namespace bgsys {

/// Laurent polynomial in q whose coefficients are truncated power series in
/// t. Slot m holds c_(m)(t); the t^k coefficient of slot m counts degree-k
/// monomials of weight m in the weighted polynomial ring.
class QTSeries {
 public:
  explicit QTSeries(int trunc) : trunc_(trunc) {}

  static QTSeries one(int trunc);

  int trunc() const { return trunc_; }
  const std::map<long, TSeries>& slots() const { return slots_; }
  /// c_(m)(t); all-zero series when the slot is absent.
  TSeries slot(long m) const;

  void add(long m, const TSeries& s);

  QTSeries operator*(const QTSeries& o) const;

  friend bool operator==(const QTSeries& a, const QTSeries& b);
  friend bool operator!=(const QTSeries& a, const QTSeries& b) { return !(a == b); }

 private:
  int trunc_;
  std::map<long, TSeries> slots_;  // nonzero slots only
};

/// Product over the weights a of sum_k q^{ak} t^k, truncated at t^T: the
/// weight-refined Hilbert series of the weighted polynomial ring.
QTSeries q_hilbert(const std::vector<long>& weights, int trunc);

/// Invariant Hilbert series for a rank-1 weight multiset: c_(0) - c_(-2).
TSeries residue_extract(const QTSeries& s);

struct SeriesComparison {
  bool equal = true;
  int first_mismatch = -1;
  Rational got, want;
};

/// Expand numerator / prod (1 - t^{d_i}) to the truncation of p and compare
/// coefficientwise.
SeriesComparison compare_series(const TSeries& p, const std::vector<Rational>& numerator,
                                const std::vector<int>& degrees);

/// Same comparison reported as a verification suite. The numerator is a
/// univariate polynomial in t.
Report compare_closed_form(const TSeries& p, const MultiPoly& numerator,
                           const std::vector<int>& degrees);

/// Multiply p by prod (1 - t^{d_i}); if every coefficient above
/// max_num_degree vanishes (up to the truncation), return the numerator as a
/// polynomial in t, else nothing. Truncated arithmetic cannot prove
/// rationality; this is a fit, not a proof.
std::optional<MultiPoly> fit_denominator(const TSeries& p, const std::vector<int>& degrees,
                                         int max_num_degree);

/// Ring C[t] used for closed-form numerators.
PolyRingPtr t_ring();

/// Parse "F / (d1,d2,...)" where F is a polynomial in t, e.g. "1/(2,2,2)".
void parse_closed_form(const std::string& text, std::vector<Rational>& numerator,
                       std::vector<int>& degrees);

std::vector<Rational> numerator_coeffs(const MultiPoly& numerator, int trunc);

}  // namespace bgsys

#endif
