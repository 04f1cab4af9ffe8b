#include "bgsys/suites.hpp"

#include <algorithm>
#include <sstream>

#include "bgsys/chiral.hpp"
#include "bgsys/commutant.hpp"
#include "bgsys/expr.hpp"
#include "bgsys/grdring.hpp"
#include "bgsys/hilbert.hpp"

namespace bgsys {

namespace {

Report commutant_suite(const LieRepData& rep, const SuiteOptions& opt) {
  Report r;
  r.suite = "commutant";
  CurrentSet cs = build_currents(rep);
  std::vector<std::pair<std::string, FockState>> gens;
  for (int i = 0; i < rep.g_dim; ++i) gens.emplace_back(rep.basis[i] + "^", cs.hat[i]);

  auto membership_check = [&](const std::string& id, const std::string& what,
                              const FockState& v) {
    MembershipResult m = is_in_commutant(v, gens);
    std::string wit;
    if (!m.member) {
      std::ostringstream os;
      os << m.witnesses[0].generator << " o_" << m.witnesses[0].n << " gives "
         << m.witnesses[0].value.str(rep.v_basis);
      wit = os.str();
    }
    r.add(id, what + " lies in the commutant of the currents", m.member, wit);
  };

  if (opt.membership_expr) {
    FockState v = parse_operator_expr(*opt.membership_expr, rep);
    membership_check("member[expr]", "'" + *opt.membership_expr + "'", v);
  } else {
    Sl2Triple tr = build_sl2_triple(rep);
    membership_check("member[v_e]", "v_e", tr.v_e);
    membership_check("member[v_f]", "v_f", tr.v_f);
    membership_check("member[v_h]", "v_h", tr.v_h);
    membership_check("member[vacuum]", "the vacuum", FockState::vacuum());
  }
  r.sort_checks();
  return r;
}

Report hilbert_suite(const LieRepData& rep, const RunConfig& cfg, const SuiteOptions& opt) {
  Report r;
  r.suite = "hilbert";
  const int T = cfg.trunc;
  const int dmax = std::min(cfg.dmax, T);

  std::vector<long> vweights = weight_multiset(rep);
  std::vector<long> rep_full = vweights;
  for (long w : vweights) rep_full.push_back(-w);
  std::sort(rep_full.rbegin(), rep_full.rend());

  std::vector<long> full = opt.weights ? *opt.weights : rep_full;
  // The kernel-oracle comparison is only meaningful for the rep's own weights.
  bool own_weights = true;
  if (opt.weights) {
    std::vector<long> sorted = *opt.weights;
    std::sort(sorted.rbegin(), sorted.rend());
    own_weights = sorted == rep_full;
  }

  TSeries p0_series = residue_extract(q_hilbert(full, T));
  TSeries sym_series = residue_extract(q_hilbert(vweights, T));

  if (own_weights) {
    bool ok = true;
    std::string wit;
    for (int d = 0; d <= dmax; ++d) {
      int dim = invariant_dimension(rep, InvariantSpace::p0_full, d);
      if (p0_series.coeff(d) != Rational(dim)) {
        ok = false;
        std::ostringstream os;
        os << "t^" << d << ": series " << p0_series.coeff(d).str() << ", kernel oracle " << dim;
        wit = os.str();
        break;
      }
    }
    r.add("oracle[p0]",
          "residue series of the full weight multiset matches the kernel-oracle invariant "
          "dimensions up to degree " +
              std::to_string(dmax),
          ok, wit);
  }
  {
    bool ok = true;
    std::string wit;
    for (int d = 0; d <= dmax; ++d) {
      int dim = invariant_dimension(rep, InvariantSpace::sym_v_star, d);
      if (sym_series.coeff(d) != Rational(dim)) {
        ok = false;
        std::ostringstream os;
        os << "t^" << d << ": series " << sym_series.coeff(d).str() << ", kernel oracle " << dim;
        wit = os.str();
        break;
      }
    }
    r.add("oracle[symv*]",
          "residue series of the module weights matches the Sym(V*) kernel-oracle dimensions up "
          "to degree " +
              std::to_string(dmax),
          ok, wit);
  }
  auto add_closed = [&](const std::string& id, const TSeries& s, const std::string& closed) {
    std::vector<Rational> numerator;
    std::vector<int> degrees;
    parse_closed_form(closed, numerator, degrees);
    SeriesComparison cmp = compare_series(s, numerator, degrees);
    std::string wit;
    if (!cmp.equal) {
      std::ostringstream os;
      os << "first mismatch at t^" << cmp.first_mismatch << ": " << cmp.got.str() << " vs "
         << cmp.want.str();
      wit = os.str();
    }
    r.add(id, "series equals the closed form " + closed + " up to t^" + std::to_string(T),
          cmp.equal, wit);
  };

  if (opt.closed_form) {
    add_closed("closed-form", p0_series, *opt.closed_form);
  } else if (rep.name == "sl2-adjoint" && !opt.weights) {
    add_closed("closed-form[p0]", p0_series, "1/(2,2,2)");
    add_closed("closed-form[symv*]", sym_series, "1/(2)");
  }
  r.sort_checks();
  return r;
}

Report generators_suite(const LieRepData& rep, const RunConfig& cfg) {
  GradedRing gr(rep, cfg.kmax);
  Sl2Triple tr = build_sl2_triple(rep);
  Report r;
  r.suite = "generators";
  r.absorb(verify_generators_p0(gr, tr, cfg.dmax));
  r.absorb(jacobian_report(gr, tr, 20, cfg.seed));
  r.absorb(verify_weight_zero_generator(rep, cfg.dmax));
  r.sort_checks();
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"current-ope", "level",      "commutant",
                                                 "compat",      "howe",       "generators",
                                                 "hilbert",     "all"};
  return names;
}

Report run_suite(const std::string& name, const LieRepData& rep, const RunConfig& cfg,
                 const SuiteOptions& opt) {
  Report r;
  if (name == "current-ope") {
    r = verify_current_ope(build_currents(rep));
  } else if (name == "level") {
    r = verify_level(build_sl2_triple(rep));
  } else if (name == "howe") {
    r = verify_howe_inclusion(build_currents(rep), build_sl2_triple(rep));
  } else if (name == "commutant") {
    r = commutant_suite(rep, opt);
  } else if (name == "compat") {
    GradedRing gr(rep, cfg.kmax);
    r = verify_compatibility(gr, build_currents(rep), compatibility_samples(rep, 3), 3);
  } else if (name == "generators") {
    r = generators_suite(rep, cfg);
  } else if (name == "hilbert") {
    r = hilbert_suite(rep, cfg, opt);
  } else if (name == "all") {
    r.suite = "all";
    for (const auto& sub : suite_names()) {
      if (sub == "all") continue;
      r.absorb(run_suite(sub, rep, cfg, opt));
    }
    r.sort_checks();
  } else {
    throw error("unknown suite '" + name + "'");
  }
  r.config = cfg;
  return r;
}

}  // namespace bgsys
