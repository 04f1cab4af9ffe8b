#include "bgsys/commutant.hpp"

#include <sstream>

namespace bgsys {

MembershipResult is_in_commutant(const FockState& v,
                                 const std::vector<std::pair<std::string, FockState>>& gens) {
  MembershipResult res;
  for (const auto& [label, u] : gens) {
    const long bound = u.max_weight() + v.max_weight();
    for (long n = 0; n < bound; ++n) {
      FockState p = nth_product(u, n, v);
      if (!p.is_zero()) {
        res.member = false;
        res.witnesses.push_back({label, n, std::move(p)});
        break;  // smallest failing n per generator
      }
    }
  }
  return res;
}

namespace {

std::string state_str(const FockState& s, const LieRepData& rep) { return s.str(rep.v_basis); }

std::string mismatch(const FockState& got, const FockState& want, const LieRepData& rep) {
  return "got " + state_str(got, rep) + ", want " + state_str(want, rep);
}

// Abstract sl(2) data for the triple checks: basis order (e, f, h).
const char* kSl2Names[3] = {"e", "f", "h"};

Rational sl2_bracket(int x, int y, int z) {
  // [e,f]=h, [h,e]=2e, [h,f]=-2f
  static const long c[3][3][3] = {
      {{0, 0, 0}, {0, 0, 1}, {-2, 0, 0}},
      {{0, 0, -1}, {0, 0, 0}, {0, 2, 0}},
      {{2, 0, 0}, {0, -2, 0}, {0, 0, 0}},
  };
  return Rational(c[x][y][z]);
}

Rational sl2_killing(int x, int y) {
  static const long k[3][3] = {{0, 4, 0}, {4, 0, 0}, {0, 0, 8}};
  return Rational(k[x][y]);
}

}  // namespace

Report verify_current_ope(const CurrentSet& cs) {
  Report rep;
  rep.suite = "current-ope";
  const auto& lie = cs.rep;
  const FockState vac = FockState::vacuum();
  for (int i = 0; i < lie.g_dim; ++i) {
    for (int j = 0; j < lie.g_dim; ++j) {
      const std::string pair = lie.basis[i] + "," + lie.basis[j];

      FockState got0 = nth_product(cs.hat[i], 0, cs.hat[j]);
      FockState want0;
      for (int k = 0; k < lie.g_dim; ++k)
        if (!lie.c(i, j, k).is_zero()) want0 += lie.c(i, j, k) * cs.hat[k];
      rep.add("o0[" + pair + "]", "u^ o_0 v^ equals the bracket current [u,v]^", got0 == want0,
              got0 == want0 ? "" : mismatch(got0, want0, lie));

      FockState got1 = nth_product(cs.hat[i], 1, cs.hat[j]);
      FockState want1 = cs.level_form.matrix.at(i, j) * vac;
      rep.add("o1[" + pair + "]", "u^ o_1 v^ equals B(u,v) vacuum, B = -Tr(rho rho)",
              got1 == want1, got1 == want1 ? "" : mismatch(got1, want1, lie));

      for (long n = 2; n <= 3; ++n) {
        FockState gotn = nth_product(cs.hat[i], n, cs.hat[j]);
        rep.add("o" + std::to_string(n) + "[" + pair + "]",
                "u^ o_" + std::to_string(n) + " v^ vanishes", gotn.is_zero(),
                gotn.is_zero() ? "" : "got " + state_str(gotn, lie));
      }
    }
  }
  rep.sort_checks();
  return rep;
}

Report verify_level(const Sl2Triple& tr) {
  Report rep;
  rep.suite = "level";
  const FockState* v[3] = {&tr.v_e, &tr.v_f, &tr.v_h};
  const FockState vac = FockState::vacuum();
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) {
      const std::string pair = std::string(kSl2Names[x]) + "," + kSl2Names[y];

      FockState got0 = nth_product(*v[x], 0, *v[y]);
      FockState want0;
      for (int z = 0; z < 3; ++z) {
        Rational c = sl2_bracket(x, y, z);
        if (!c.is_zero()) want0 += c * (*v[z]);
      }
      rep.add("o0[" + pair + "]", "v_x o_0 v_y equals v_[x,y]", got0 == want0);

      FockState got1 = nth_product(*v[x], 1, *v[y]);
      FockState want1 = (tr.level_scale * sl2_killing(x, y)) * vac;
      rep.add("o1[" + pair + "]", "v_x o_1 v_y equals -(dimV/8) K(x,y) vacuum", got1 == want1);
    }
  }
  rep.sort_checks();
  return rep;
}

Report verify_howe_inclusion(const CurrentSet& cs, const Sl2Triple& tr) {
  Report rep;
  rep.suite = "howe";
  const auto& lie = cs.rep;
  const std::vector<std::pair<std::string, FockState>> triple = {
      {"v_e", tr.v_e}, {"v_f", tr.v_f}, {"v_h", tr.v_h}};

  // (a) the triple lies in the commutant of the currents
  for (const auto& [vlabel, vstate] : triple) {
    std::vector<std::pair<std::string, FockState>> gens;
    for (int i = 0; i < lie.g_dim; ++i) gens.emplace_back(lie.basis[i] + "^", cs.hat[i]);
    MembershipResult m = is_in_commutant(vstate, gens);
    std::string wit;
    if (!m.member) {
      std::ostringstream os;
      os << m.witnesses[0].generator << " o_" << m.witnesses[0].n << " " << vlabel << " = "
         << state_str(m.witnesses[0].value, lie);
      wit = os.str();
    }
    rep.add("a[" + vlabel + "]", "all nonnegative products of currents with " + vlabel + " vanish",
            m.member, wit);
  }

  // (b) the currents lie in the commutant of the triple, checked directly
  for (int i = 0; i < lie.g_dim; ++i) {
    MembershipResult m = is_in_commutant(cs.hat[i], triple);
    std::string wit;
    if (!m.member) {
      std::ostringstream os;
      os << m.witnesses[0].generator << " o_" << m.witnesses[0].n << " " << lie.basis[i]
         << "^ = " << state_str(m.witnesses[0].value, lie);
      wit = os.str();
    }
    rep.add("b[" + lie.basis[i] + "^]",
            "all nonnegative products of the triple with " + lie.basis[i] + "^ vanish", m.member,
            wit);
  }
  rep.sort_checks();
  return rep;
}

}  // namespace bgsys
