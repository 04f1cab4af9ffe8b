#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bgsys/expr.hpp"
#include "bgsys/grdring.hpp"
#include "bgsys/hilbert.hpp"
#include "test_support.hpp"

using namespace bgsys;
using testsupport::random_monomial_state;
using testsupport::rng_int;

namespace {

const LieRepData& adjoint() {
  static LieRepData rep = builtin_rep("sl2-adjoint");
  return rep;
}

const GradedRing& ring() {
  static GradedRing gr(adjoint(), 4);
  return gr;
}

MultiPoly pvar(ModeKind kind, int i, int k) {
  return MultiPoly::var(ring().ring(), ring().var(kind, i, k));
}

// index shorthands for the adjoint basis order (e, f, h)
constexpr int E = 0, F = 1, H = 2;

}  // namespace

TEST_CASE("symbols of the triple") {
  Sl2Triple tr = build_sl2_triple(adjoint());

  MultiPoly vh = ring().symbol(tr.v_h, 2);
  MultiPoly expect_h = pvar(ModeKind::beta, H, 0) * pvar(ModeKind::gamma, H, 0) +
                       pvar(ModeKind::beta, E, 0) * pvar(ModeKind::gamma, E, 0) +
                       pvar(ModeKind::beta, F, 0) * pvar(ModeKind::gamma, F, 0);
  CHECK(vh == expect_h);

  MultiPoly ve = ring().symbol(tr.v_e, 2);
  MultiPoly expect_e =
      Rational(4) * (pvar(ModeKind::gamma, H, 0) * pvar(ModeKind::gamma, H, 0) +
                     pvar(ModeKind::gamma, E, 0) * pvar(ModeKind::gamma, F, 0));
  CHECK(ve == expect_e);

  MultiPoly vf = ring().symbol(tr.v_f, 2);
  MultiPoly expect_f =
      Rational(-1, 16) * (pvar(ModeKind::beta, H, 0) * pvar(ModeKind::beta, H, 0)) +
      Rational(-1, 4) * (pvar(ModeKind::beta, E, 0) * pvar(ModeKind::beta, F, 0));
  CHECK(vf == expect_f);
}

TEST_CASE("symbol basics") {
  CHECK(ring().symbol(FockState::vacuum(), 0) ==
        MultiPoly::constant(ring().ring(), Rational(1)));

  // d beta^e corresponds to b1_e with the 1/k! normalization
  FockState dbe = derivative(FockState::single(ModeKind::beta, E, -1));
  CHECK(ring().symbol(dbe, 1) == pvar(ModeKind::beta, E, 1));

  // deeper modes pick up 1/k!
  FockState b3 = FockState::single(ModeKind::beta, E, -4);  // (1/3!) b3_e
  CHECK(ring().symbol(b3, 1) == Rational(1, 6) * pvar(ModeKind::beta, E, 3));

  // filtration degree is enforced
  Sl2Triple tr = build_sl2_triple(adjoint());
  CHECK_THROWS_AS(ring().symbol(tr.v_h, 1), error);

  // lower-degree monomials project away
  FockState mixed = tr.v_h + FockState::vacuum();
  CHECK(ring().symbol(mixed, 2) == ring().symbol(tr.v_h, 2));
}

TEST_CASE("symbol evaluation at the all-ones point") {
  Sl2Triple tr = build_sl2_triple(adjoint());
  std::map<std::string, Rational> ones;
  for (const auto& name : ring().ring()->var_names()) ones[name] = Rational(1);
  CHECK(ring().symbol(tr.v_h, 2).eval(ones) == Rational(3));
  CHECK(ring().symbol(tr.v_e, 2).eval(ones) == Rational(8));
  CHECK(ring().symbol(tr.v_f, 2).eval(ones) == Rational(-5, 16));
}

TEST_CASE("partial of the v_e symbol") {
  Sl2Triple tr = build_sl2_triple(adjoint());
  MultiPoly ve = ring().symbol(tr.v_e, 2);
  MultiPoly d = ve.partial(ring().var(ModeKind::gamma, H, 0));
  CHECK(d == Rational(8) * pvar(ModeKind::gamma, H, 0));
}

TEST_CASE("induced derivation on single variables") {
  // u = h, n = 1 on b1_e: C(1,1) b0_{ad h e} = 2 b0_e
  MultiPoly lhs = ring().derivation(H, 1, pvar(ModeKind::beta, E, 1));
  CHECK(lhs == Rational(2) * pvar(ModeKind::beta, E, 0));

  // n > k kills the variable
  CHECK(ring().derivation(E, 1, pvar(ModeKind::gamma, E, 0)).is_zero());
  CHECK(ring().derivation(F, 3, pvar(ModeKind::beta, E, 2)).is_zero());

  // gamma variables transform by the dual action
  MultiPoly g = ring().derivation(H, 0, pvar(ModeKind::gamma, E, 0));
  CHECK(g == Rational(-2) * pvar(ModeKind::gamma, E, 0));
}

TEST_CASE("compatibility with the engine on explicit states") {
  CurrentSet cs = build_currents(adjoint());

  // w = beta^e(-2)|0>, u = h, n = 1: both sides 2 b0_e
  FockState w = FockState::single(ModeKind::beta, E, -2);
  MultiPoly lhs = ring().derivation(H, 1, ring().symbol(w, 1));
  MultiPoly rhs = ring().symbol(nth_product(cs.hat[H], 1, w), 1);
  CHECK(lhs == rhs);
  CHECK(lhs == Rational(2) * pvar(ModeKind::beta, E, 0));

  // w = gamma^e'(-1)|0>, any u, n = 1: both sides vanish (C(0,1) = 0)
  FockState g = FockState::single(ModeKind::gamma, E, -1);
  for (int u = 0; u < 3; ++u) {
    CHECK(ring().derivation(u, 1, ring().symbol(g, 1)).is_zero());
    CHECK(ring().symbol(nth_product(cs.hat[u], 1, g), 1).is_zero());
  }

  // the vacuum gives zero on both sides
  CHECK(ring().derivation(E, 0, ring().symbol(FockState::vacuum(), 0)).is_zero());
}

TEST_CASE("compatibility suite over the full sample family") {
  CurrentSet cs = build_currents(adjoint());
  Report r = verify_compatibility(ring(), cs, compatibility_samples(adjoint(), 3), 3);
  CHECK(r.checks.size() == 12);
  CHECK(r.all_pass());
}

TEST_CASE("derivations represent g tensor C[t] on variables") {
  const auto& rep = adjoint();
  for (int u = 0; u < 3; ++u)
    for (int v = 0; v < 3; ++v)
      for (int m = 0; m <= 2; ++m)
        for (int n = 0; n <= 2; ++n)
          for (int var = 0; var < ring().ring()->arity(); ++var) {
            MultiPoly x = MultiPoly::var(ring().ring(), var);
            if (m + n > ring().kmax()) continue;
            MultiPoly lhs = ring().derivation(u, m, ring().derivation(v, n, x)) -
                            ring().derivation(v, n, ring().derivation(u, m, x));
            MultiPoly rhs(ring().ring());
            for (int w = 0; w < 3; ++w) {
              if (rep.c(u, v, w).is_zero()) continue;
              rhs += rep.c(u, v, w) * ring().derivation(w, m + n, x);
            }
            CHECK(lhs == rhs);
          }
}

TEST_CASE("derivations are del-equivariant on variables") {
  // der(u,n) o del - del o der(u,n) = n der(u,n-1)
  for (int u = 0; u < 3; ++u)
    for (int n = 1; n <= 3; ++n)
      for (int var = 0; var < ring().ring()->arity(); ++var) {
        MultiPoly x = MultiPoly::var(ring().ring(), var);
        // stay below kmax so del is defined
        bool too_deep = false;
        try {
          ring().del(x);
        } catch (const error&) {
          too_deep = true;
        }
        if (too_deep) continue;
        MultiPoly lhs = ring().derivation(u, n, ring().del(x)) - ring().del(ring().derivation(u, n, x));
        MultiPoly rhs = Rational(n) * ring().derivation(u, n - 1, x);
        CHECK(lhs == rhs);
      }
}

TEST_CASE("del intertwines the symbol map with the engine derivative") {
  std::mt19937_64 gen(32);
  for (int trial = 0; trial < 25; ++trial) {
    FockState a = random_monomial_state(gen, 3, 3, 3);  // depth <= 3 keeps del within kmax
    if (a.is_zero()) continue;
    int d = a.max_degree();
    CHECK(ring().del(ring().symbol(a, d)) == ring().symbol(derivative(a), d));
  }
}

TEST_CASE("bigrading: del raises weight by one and preserves degree") {
  Sl2Triple tr = build_sl2_triple(adjoint());
  MultiPoly se = ring().symbol(tr.v_e, 2);
  MultiPoly sf = ring().symbol(tr.v_f, 2);
  MultiPoly sh = ring().symbol(tr.v_h, 2);
  CHECK(ring().weight_of(se) == 0);
  CHECK(ring().weight_of(sf) == 2);
  CHECK(ring().weight_of(sh) == 1);
  CHECK(ring().weight_of(ring().del(sh)) == 2);
  CHECK(ring().del(sh).total_degree() == 2);
}

TEST_CASE("symbol is multiplicative on top-degree parts") {
  std::mt19937_64 gen(31);
  for (int trial = 0; trial < 25; ++trial) {
    FockState a = random_monomial_state(gen, 2, 4, 3);
    FockState b = random_monomial_state(gen, 2, 4, 3);
    if (a.is_zero() || b.is_zero()) continue;
    int da = a.max_degree(), db = b.max_degree();
    MultiPoly lhs = ring().symbol(wick(a, b), da + db);
    MultiPoly rhs = ring().symbol(a, da) * ring().symbol(b, db);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("invariant dimensions from the kernel oracle") {
  CHECK(invariant_dimension(adjoint(), InvariantSpace::p0_full, 0) == 1);
  CHECK(invariant_dimension(adjoint(), InvariantSpace::p0_full, 1) == 0);
  CHECK(invariant_dimension(adjoint(), InvariantSpace::p0_full, 2) == 3);
  CHECK(invariant_dimension(adjoint(), InvariantSpace::p0_full, 4) == 6);
  CHECK(invariant_dimension(adjoint(), InvariantSpace::sym_v_star, 2) == 1);
  CHECK(invariant_dimension(adjoint(), InvariantSpace::sym_v_star, 3) == 0);
}

TEST_CASE("blocked and generic kernel paths agree") {
  // relabeling h forces the generic stacked-matrix path; dimensions must match
  LieRepData relabeled = adjoint();
  relabeled.basis = {"e", "f", "t3"};
  for (int d = 0; d <= 5; ++d) {
    CHECK(invariant_dimension(relabeled, InvariantSpace::p0_full, d) ==
          invariant_dimension(adjoint(), InvariantSpace::p0_full, d));
    CHECK(invariant_dimension(relabeled, InvariantSpace::sym_v_star, d) ==
          invariant_dimension(adjoint(), InvariantSpace::sym_v_star, d));
  }
}

TEST_CASE("kernel oracle agrees with the residue series for every degree") {
  std::vector<long> full = {2, 2, 0, 0, -2, -2};
  TSeries p0 = residue_extract(q_hilbert(full, 8));
  TSeries sym = residue_extract(q_hilbert({2, 0, -2}, 8));
  for (int d = 0; d <= 8; ++d) {
    CHECK(Rational(invariant_dimension(adjoint(), InvariantSpace::p0_full, d)) == p0.coeff(d));
    CHECK(Rational(invariant_dimension(adjoint(), InvariantSpace::sym_v_star, d)) ==
          sym.coeff(d));
  }
}

TEST_CASE("generator suite passes") {
  Sl2Triple tr = build_sl2_triple(adjoint());
  Report r = verify_generators_p0(ring(), tr, 8);
  CHECK(r.all_pass());
}

TEST_CASE("jacobian independence is certified, repeated rows are not") {
  Sl2Triple tr = build_sl2_triple(adjoint());
  MultiPoly se = ring().symbol(tr.v_e, 2), sf = ring().symbol(tr.v_f, 2),
            sh = ring().symbol(tr.v_h, 2);

  JacobianResult pos = jacobian_independence(ring(), {se, sf, sh}, 20, 20240001);
  CHECK(pos.certified);
  CHECK(pos.max_rank == 3);

  JacobianResult neg = jacobian_independence(ring(), {se, se, sh}, 20, 20240001);
  CHECK_FALSE(neg.certified);
  CHECK(neg.max_rank <= 2);
  CHECK(neg.points_tried == 20);

  Report r = jacobian_report(ring(), tr, 20, 20240001);
  CHECK(r.all_pass());
}

TEST_CASE("weight-zero generator suite passes") {
  Report r = verify_weight_zero_generator(adjoint(), 8);
  CHECK(r.all_pass());
}
