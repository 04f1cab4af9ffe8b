#ifndef BGSYS_COMMUTANT_HPP
#define BGSYS_COMMUTANT_HPP

#include <string>
#include <utility>
#include <vector>

#include "bgsys/chiral.hpp"
#include "bgsys/fock.hpp"
#include "bgsys/report.hpp"

namespace bgsys {

struct MembershipWitness {
  std::string generator;
  long n;
  FockState value;  // the nonzero product u o_n v
};

/// member is true exactly when witnesses is empty. Each failing generator
/// contributes one witness at its smallest failing n.
struct MembershipResult {
  bool member = true;
  std::vector<MembershipWitness> witnesses;
};

/// Commutant membership: u o_n v = 0 for every generator u and every
/// 0 <= n < wt(u) + wt(v); higher n vanish by the grading bound.
MembershipResult is_in_commutant(const FockState& v,
                                 const std::vector<std::pair<std::string, FockState>>& gens);

/// Current OPE closure: for all basis pairs, u^ o_0 v^ = [u,v]^,
/// u^ o_1 v^ = B(u,v) vacuum, and u^ o_n v^ = 0 for n = 2, 3.
Report verify_current_ope(const CurrentSet& cs);

/// Triple OPE: v_x o_0 v_y = v_[x,y] and v_x o_1 v_y = -(dimV/8) K(x,y) vacuum
/// over the abstract sl(2) basis {e, f, h}.
Report verify_level(const Sl2Triple& tr);

/// Both commutation inclusions behind the Howe pair: every triple element
/// commutes with every current, and symmetrically every current commutes with
/// every triple element (checked independently, not via skew symmetry).
Report verify_howe_inclusion(const CurrentSet& cs, const Sl2Triple& tr);

}  // namespace bgsys

#endif
