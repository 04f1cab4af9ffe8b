#ifndef BGSYS_GRDRING_HPP
#define BGSYS_GRDRING_HPP

#include <cstdint>
#include <vector>

#include "bgsys/chiral.hpp"
#include "bgsys/fock.hpp"
#include "bgsys/liereps.hpp"
#include "bgsys/multipoly.hpp"
#include "bgsys/report.hpp"

namespace bgsys {

/// The associated graded ring of the mode filtration: a polynomial ring on
/// variables b<k>_<x> and g<k>_<x'> for 0 <= k <= kmax. Each variable has
/// polynomial degree 1; conformal weight is k+1 for b-variables and k for
/// g-variables.
class GradedRing {
 public:
  GradedRing(LieRepData rep, int kmax);

  const LieRepData& rep() const { return rep_; }
  int kmax() const { return kmax_; }
  const PolyRingPtr& ring() const { return ring_; }

  int var(ModeKind kind, int i, int k) const;
  long var_weight(int v) const;

  /// Symbol map at filtration degree d: keeps monomials of length exactly d,
  /// sending beta(-k-1) to (1/k!) b<k> and gamma(-k-1) to (1/k!) g<k>.
  /// States of filtration degree > d are rejected.
  MultiPoly symbol(const FockState& a, int d) const;

  /// Induced derivation of the current u^ at mode n >= 0:
  ///   b<k>_x  ->  C(k,n) b<k-n>_{rho(u)x}
  ///   g<k>_x' ->  C(k,n) g<k-n>_{rho*(u)x'}
  /// with the falling factorial C(k,n) = k(k-1)...(k-n+1).
  MultiPoly derivation(int u, int n, const MultiPoly& p) const;

  /// Degree-preserving derivation raising k by one on every variable.
  MultiPoly del(const MultiPoly& p) const;

  /// Total conformal weight (bigrading component) of a weight-homogeneous
  /// polynomial; throws if mixed.
  long weight_of(const MultiPoly& p) const;

 private:
  MultiPoly var_image(int u, int n, int v) const;  // derivation on one variable

  LieRepData rep_;
  int kmax_;
  PolyRingPtr ring_;
};

enum class InvariantSpace { p0_full, sym_v_star };

/// Brute-force dimension of the degree-d invariants of the classical ring:
/// the joint kernel of all basis derivations on the span of degree-d
/// monomials, computed by exact linear algebra.
int invariant_dimension(const LieRepData& rep, InvariantSpace space, int d);

/// Compatibility of the induced derivations with the symbol map on a set of
/// homogeneous samples: der(u,n)(symbol(w)) = symbol(u^ o_n w) for n <= nmax.
Report verify_compatibility(const GradedRing& gr, const CurrentSet& cs,
                            const std::vector<FockState>& samples, int nmax);

/// The sample family used by the acceptance run: single-mode states with
/// k <= kmax_modes plus all their pairwise Wick products.
std::vector<FockState> compatibility_samples(const LieRepData& rep, int kmax_modes);

/// Degreewise generation of the classical invariant ring by the three
/// degree-2 symbols: invariance of each symbol, and for every even d <= dmax
/// a span-dimension match against the kernel oracle.
Report verify_generators_p0(const GradedRing& gr, const Sl2Triple& tr, int dmax);

struct JacobianResult {
  int target = 0;        // number of polynomials
  int max_rank = 0;
  bool certified = false;
  int points_tried = 0;
  std::vector<long> witness_point;  // point achieving max_rank
};

/// Jacobian criterion for algebraic independence: evaluates the Jacobian at
/// pseudo-random integer points in [-10,10]^vars (deterministic seed) until
/// full rank is found or `trials` points are exhausted. Full rank certifies
/// independence; exhaustion is inconclusive, never a failure claim.
JacobianResult jacobian_independence(const GradedRing& gr, const std::vector<MultiPoly>& polys,
                                     int trials, std::uint64_t seed);

Report jacobian_report(const GradedRing& gr, const Sl2Triple& tr, int trials, std::uint64_t seed);

/// The weight-zero story: the quadratic g0_e' g0_f' + g0_h' g0_h' is
/// invariant in Sym(V*), and its powers span the full invariant space in
/// every even degree <= dmax (odd degrees vanish).
Report verify_weight_zero_generator(const LieRepData& rep, int dmax);

}  // namespace bgsys

#endif
