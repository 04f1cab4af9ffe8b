#include "bgsys/chiral.hpp"

namespace bgsys {

namespace {

FockState beta_state(int index) { return FockState::single(ModeKind::beta, index, -1); }
FockState gamma_state(int index) { return FockState::single(ModeKind::gamma, index, -1); }

}  // namespace

CurrentSet build_currents(const LieRepData& rep) {
  CurrentSet cs{rep, {}, trace_form(rep)};
  const int n = rep.v_dim;
  for (int u = 0; u < rep.g_dim; ++u) {
    FockState cur;
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const Rational& coef = rep.rho[u].at(k, j);  // rho(u) x_j = sum_k rho_kj x_k
        if (coef.is_zero()) continue;
        cur -= coef * wick(beta_state(k), gamma_state(j));
      }
    }
    long w = 0;
    if (!cur.is_homogeneous(&w) || (!cur.is_zero() && w != 1))
      throw error("current for basis element " + rep.basis[u] + " is not weight-1 homogeneous");
    cs.hat.push_back(std::move(cur));
  }
  return cs;
}

Sl2Triple build_sl2_triple(const LieRepData& rep, const QMatrix& bprime) {
  const int n = rep.v_dim;
  if (bprime.rows() != n || bprime.cols() != n) throw error("B' has wrong shape");
  if (!bprime.is_symmetric()) throw error("B' is not symmetric");
  QMatrix binv;
  try {
    binv = bprime.inverse();
  } catch (const error&) {
    throw error("B' is singular; the sl(2) triple requires a nondegenerate form");
  }

  Sl2Triple tr;
  tr.module_dim = n;
  tr.level_scale = Rational(-n, 8);
  const Rational half(1, 2);
  for (int a = 0; a < n; ++a) tr.v_h += wick(beta_state(a), gamma_state(a));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      if (!bprime.at(a, b).is_zero())
        tr.v_e += (half * bprime.at(a, b)) * wick(gamma_state(a), gamma_state(b));
      if (!binv.at(a, b).is_zero())
        tr.v_f -= (half * binv.at(a, b)) * wick(beta_state(a), beta_state(b));
    }
  return tr;
}

Sl2Triple build_sl2_triple(const LieRepData& rep) {
  if (!rep.bform) throw error("representation carries no invariant form B'");
  return build_sl2_triple(rep, *rep.bform);
}

ConformalElement build_conformal(const LieRepData& rep, ConformalKind kind,
                                 std::optional<Rational> lambda_override) {
  if (kind == ConformalKind::free_field) {
    FockState ls;
    for (int i = 0; i < rep.v_dim; ++i)
      ls += wick(beta_state(i), derivative(gamma_state(i)));
    return {ls, std::nullopt};
  }

  QMatrix k = killing_form(rep).matrix;
  QMatrix kinv;
  try {
    kinv = k.inverse();
  } catch (const error&) {
    throw error("Killing form is degenerate; conformal element needs a simple algebra");
  }

  Rational lambda;
  if (lambda_override) {
    lambda = *lambda_override;
  } else {
    // B = lambda K must hold exactly (it does for a simple algebra).
    QMatrix b = trace_form(rep).matrix;
    bool found = false;
    for (int i = 0; i < rep.g_dim && !found; ++i)
      for (int j = 0; j < rep.g_dim && !found; ++j)
        if (!k.at(i, j).is_zero()) {
          lambda = b.at(i, j) / k.at(i, j);
          found = true;
        }
    if (!found) throw error("Killing form vanishes");
    QMatrix scaled = k;
    scaled *= lambda;
    if (scaled != b) throw error("trace form is not proportional to the Killing form");
  }
  if (lambda == Rational(-1, 2)) throw error("lambda = -1/2 is excluded");

  CurrentSet cs = build_currents(rep);
  FockState lo;
  const Rational scale = Rational(1) / (Rational(2) * lambda + Rational(1));
  for (int a = 0; a < rep.g_dim; ++a)
    for (int b = 0; b < rep.g_dim; ++b) {
      if (kinv.at(a, b).is_zero()) continue;
      lo += (scale * kinv.at(a, b)) * wick(cs.hat[a], cs.hat[b]);
    }

  if (kind == ConformalKind::current) return {lo, lambda};
  ConformalElement total = build_conformal(rep, ConformalKind::free_field);
  total.state -= lo;
  total.lambda = lambda;
  return total;
}

}  // namespace bgsys
