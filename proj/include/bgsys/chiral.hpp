#ifndef BGSYS_CHIRAL_HPP
#define BGSYS_CHIRAL_HPP

#include <optional>
#include <vector>

#include "bgsys/fock.hpp"
#include "bgsys/liereps.hpp"

namespace bgsys {

/// The current embedding: one weight-1 state per algebra basis element,
///   u^ = -sum_i :beta^{rho(u)(x_i)} gamma^{x'_i}: ,
/// together with the level form B = -Tr(rho rho).
struct CurrentSet {
  LieRepData rep;
  std::vector<FockState> hat;
  BilinearForm level_form;
};

CurrentSet build_currents(const LieRepData& rep);

/// The sl(2) triple inside the commutant, built basis-independently from an
/// invariant form B' so that every coefficient stays rational:
///   v_h = sum_a :beta^{x_a} gamma^{x'_a}:
///   v_e = 1/2 sum_{a,b} B'(x_a,x_b)      :gamma^{x'_a} gamma^{x'_b}:
///   v_f = -1/2 sum_{a,b} (B'^{-1})_{a,b} :beta^{x_a} beta^{x_b}:
/// Its current algebra closes at level -(dim V / 8) K.
struct Sl2Triple {
  FockState v_e, v_f, v_h;
  int module_dim = 0;
  Rational level_scale;  // -(dim V)/8, the multiple of K appearing at o_1
};

Sl2Triple build_sl2_triple(const LieRepData& rep, const QMatrix& bprime);
Sl2Triple build_sl2_triple(const LieRepData& rep);  // uses rep.bform

enum class ConformalKind { free_field, current, total };

struct ConformalElement {
  FockState state;
  std::optional<Rational> lambda;
};

/// free_field: L = sum_i :beta^{x_i} d gamma^{x'_i}: (weight grading source).
/// current:    the image of the current-algebra conformal element,
///             1/(2 lambda + 1) sum_{a,b} (K^{-1})_{a,b} :u_a^ u_b^:,
///             lambda determined by B = lambda K (override allowed).
/// total:      free_field minus current.
ConformalElement build_conformal(const LieRepData& rep, ConformalKind kind,
                                 std::optional<Rational> lambda_override = std::nullopt);

}  // namespace bgsys

#endif
