#include "bgsys/grdring.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>

namespace bgsys {

namespace {

Rational falling_factorial(int k, int n) {
  // C(k,n) = k(k-1)...(k-n+1); C(k,0) = 1; zero for n > k
  if (n == 0) return Rational(1);
  if (n > k) return Rational(0);
  Rational r(1);
  for (int i = 0; i < n; ++i) r *= Rational(k - i);
  return r;
}

std::string beta_var_name(const std::string& x, int k) { return "b" + std::to_string(k) + "_" + x; }
std::string gamma_var_name(const std::string& x, int k) {
  return "g" + std::to_string(k) + "_" + x + "'";
}

}  // namespace

GradedRing::GradedRing(LieRepData rep, int kmax) : rep_(std::move(rep)), kmax_(kmax) {
  if (kmax_ < 0) throw error("kmax must be nonnegative");
  std::vector<std::string> names;
  for (int i = 0; i < rep_.v_dim; ++i)
    for (int k = 0; k <= kmax_; ++k) names.push_back(beta_var_name(rep_.v_basis[i], k));
  for (int i = 0; i < rep_.v_dim; ++i)
    for (int k = 0; k <= kmax_; ++k) names.push_back(gamma_var_name(rep_.v_basis[i], k));
  ring_ = std::make_shared<const PolyRing>(std::move(names));
}

int GradedRing::var(ModeKind kind, int i, int k) const {
  if (i < 0 || i >= rep_.v_dim) throw error("module index out of range");
  if (k < 0 || k > kmax_) throw error("derivative index exceeds kmax");
  int base = kind == ModeKind::beta ? 0 : rep_.v_dim * (kmax_ + 1);
  return base + i * (kmax_ + 1) + k;
}

long GradedRing::var_weight(int v) const {
  const int per = kmax_ + 1;
  const int nb = rep_.v_dim * per;
  if (v < nb) return v % per + 1;       // beta: k+1
  return (v - nb) % per;                // gamma: k
}

MultiPoly GradedRing::symbol(const FockState& a, int d) const {
  if (a.max_degree() > d) throw error("state exceeds filtration degree " + std::to_string(d));
  MultiPoly out(ring_);
  for (const auto& [mon, c] : a.terms()) {
    if (mon.degree() != d) continue;
    MultiPoly::Exponents e(ring_->arity(), 0);
    Rational coef = c;
    for (const auto& g : mon.modes()) {
      int k = -g.mode - 1;
      if (k > kmax_) throw error("mode depth exceeds kmax of the graded ring");
      e[var(g.kind, g.index, k)] += 1;
      coef /= factorial(static_cast<unsigned>(k));
    }
    out.add_term(e, coef);
  }
  return out;
}

MultiPoly GradedRing::var_image(int u, int n, int v) const {
  const int per = kmax_ + 1;
  const int nb = rep_.v_dim * per;
  MultiPoly out(ring_);
  const bool is_beta = v < nb;
  const int rel = is_beta ? v : v - nb;
  const int i = rel / per;
  const int k = rel % per;
  Rational c = falling_factorial(k, n);
  if (c.is_zero()) return out;
  for (int l = 0; l < rep_.v_dim; ++l) {
    Rational entry = is_beta ? rep_.rho[u].at(l, i)    // rho(u) x_i = sum_l rho_li x_l
                             : -rep_.rho[u].at(i, l);  // rho*(u) = -rho(u)^T
    if (entry.is_zero()) continue;
    out += (c * entry) * MultiPoly::var(ring_, var(is_beta ? ModeKind::beta : ModeKind::gamma, l,
                                                   k - n));
  }
  return out;
}

namespace {

// Leibniz extension of a variable-wise image map.
MultiPoly extend_derivation(const MultiPoly& p,
                            const std::function<MultiPoly(int)>& image) {
  MultiPoly out(p.ring());
  for (const auto& [e, c] : p.terms()) {
    for (int v = 0; v < p.ring()->arity(); ++v) {
      if (e[v] == 0) continue;
      MultiPoly img = image(v);
      if (img.is_zero()) continue;
      MultiPoly::Exponents rest = e;
      rest[v] -= 1;
      MultiPoly factor(p.ring());
      factor.add_term(rest, c * Rational(e[v]));
      out += factor * img;
    }
  }
  return out;
}

}  // namespace

MultiPoly GradedRing::derivation(int u, int n, const MultiPoly& p) const {
  if (n < 0) throw error("derivation mode must be nonnegative");
  return extend_derivation(p, [&](int v) { return var_image(u, n, v); });
}

MultiPoly GradedRing::del(const MultiPoly& p) const {
  const int per = kmax_ + 1;
  const int nb = rep_.v_dim * per;
  return extend_derivation(p, [&](int v) {
    const bool is_beta = v < nb;
    const int rel = is_beta ? v : v - nb;
    const int k = rel % per;
    if (k + 1 > kmax_) throw error("del exceeds kmax of the graded ring");
    return MultiPoly::var(ring_, v + 1);  // k slot is contiguous
  });
}

long GradedRing::weight_of(const MultiPoly& p) const {
  bool first = true;
  long w = 0;
  for (const auto& [e, c] : p.terms()) {
    long s = 0;
    for (int v = 0; v < ring_->arity(); ++v) s += e[v] * var_weight(v);
    if (first) {
      w = s;
      first = false;
    } else if (s != w) {
      throw error("polynomial is not weight homogeneous");
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// Classical (k = 0) invariant-theory oracle
// ---------------------------------------------------------------------------

namespace {

struct ClassicalRing {
  PolyRingPtr ring;
  int n_beta = 0;  // first n_beta variables are beta-type
  int n_vars = 0;
  // linear derivation images per algebra basis element: var -> [(var, coeff)]
  std::vector<std::vector<std::vector<std::pair<int, Rational>>>> images;
  bool h_diagonal = false;
  int h_index = -1;
  std::vector<Rational> h_weights;  // valid when h_diagonal
};

ClassicalRing classical_ring(const LieRepData& rep, InvariantSpace space) {
  ClassicalRing cr;
  const int n = rep.v_dim;
  cr.n_beta = space == InvariantSpace::p0_full ? n : 0;
  cr.n_vars = cr.n_beta + n;
  std::vector<std::string> names;
  for (int i = 0; i < cr.n_beta; ++i) names.push_back(beta_var_name(rep.v_basis[i], 0));
  for (int i = 0; i < n; ++i) names.push_back(gamma_var_name(rep.v_basis[i], 0));
  cr.ring = std::make_shared<const PolyRing>(std::move(names));

  cr.images.assign(rep.g_dim, {});
  for (int u = 0; u < rep.g_dim; ++u) {
    auto& img = cr.images[u];
    img.assign(cr.n_vars, {});
    for (int i = 0; i < cr.n_beta; ++i)
      for (int l = 0; l < n; ++l)
        if (!rep.rho[u].at(l, i).is_zero()) img[i].emplace_back(l, rep.rho[u].at(l, i));
    for (int i = 0; i < n; ++i)
      for (int l = 0; l < n; ++l)
        if (!rep.rho[u].at(i, l).is_zero())
          img[cr.n_beta + i].emplace_back(cr.n_beta + l, -rep.rho[u].at(i, l));
  }

  for (int u = 0; u < rep.g_dim; ++u) {
    if (rep.basis[u] != "h") continue;
    cr.h_index = u;
    cr.h_weights.assign(cr.n_vars, Rational(0));
    bool diag = true;
    for (int v = 0; v < cr.n_vars && diag; ++v) {
      for (const auto& [w, c] : cr.images[u][v]) {
        if (w != v) {
          diag = false;
          break;
        }
        cr.h_weights[v] = c;
      }
    }
    cr.h_diagonal = diag;
  }
  return cr;
}

void enumerate_monomials(int nvars, int degree, std::vector<std::vector<int>>& out) {
  std::vector<int> e(nvars, 0);
  // lexicographic composition walk
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == nvars - 1) {
      e[pos] = rem;
      out.push_back(e);
      return;
    }
    for (int v = rem; v >= 0; --v) {
      e[pos] = v;
      rec(pos + 1, rem - v);
    }
    e[pos] = 0;
  };
  if (nvars == 0) {
    if (degree == 0) out.push_back({});
    return;
  }
  rec(0, degree);
}

// Image of a monomial under the derivation with the given variable images.
std::map<std::vector<int>, Rational> derive_monomial(
    const std::vector<int>& e, const std::vector<std::vector<std::pair<int, Rational>>>& img) {
  std::map<std::vector<int>, Rational> out;
  for (int v = 0; v < static_cast<int>(e.size()); ++v) {
    if (e[v] == 0) continue;
    for (const auto& [w, c] : img[v]) {
      std::vector<int> t = e;
      t[v] -= 1;
      t[w] += 1;
      Rational add = c * Rational(e[v]);
      auto it = out.find(t);
      if (it == out.end())
        out.emplace(std::move(t), add);
      else {
        it->second += add;
        if (it->second.is_zero()) out.erase(it);
      }
    }
  }
  return out;
}

// Joint kernel dimension of all basis derivations on the span of `domain`.
int joint_kernel_dim(const ClassicalRing& cr, const std::vector<std::vector<int>>& domain) {
  if (domain.empty()) return 0;
  // Collect image coordinates per derivation, then stack.
  std::vector<std::vector<std::map<std::vector<int>, Rational>>> cols(cr.images.size());
  std::vector<std::map<std::vector<int>, int>> row_index(cr.images.size());
  int total_rows = 0;
  for (size_t u = 0; u < cr.images.size(); ++u) {
    cols[u].reserve(domain.size());
    for (const auto& mon : domain) {
      auto img = derive_monomial(mon, cr.images[u]);
      for (const auto& [m, c] : img)
        if (row_index[u].emplace(m, static_cast<int>(row_index[u].size())).second) ++total_rows;
      cols[u].push_back(std::move(img));
    }
  }
  QMatrix stacked(total_rows, static_cast<int>(domain.size()));
  int row_base = 0;
  for (size_t u = 0; u < cr.images.size(); ++u) {
    for (int j = 0; j < static_cast<int>(domain.size()); ++j)
      for (const auto& [m, c] : cols[u][j]) stacked.at(row_base + row_index[u][m], j) = c;
    row_base += static_cast<int>(row_index[u].size());
  }
  return stacked.kernel_dim();
}

long beta_degree(const std::vector<int>& e, int n_beta) {
  long d = 0;
  for (int v = 0; v < n_beta; ++v) d += e[v];
  return d;
}

}  // namespace

int invariant_dimension(const LieRepData& rep, InvariantSpace space, int d) {
  if (d < 0) throw error("degree must be nonnegative");
  ClassicalRing cr = classical_ring(rep, space);
  std::vector<std::vector<int>> monomials;
  enumerate_monomials(cr.n_vars, d, monomials);

  if (!cr.h_diagonal) return joint_kernel_dim(cr, monomials);

  // The h-action is diagonal on variables, so its kernel is exactly the span
  // of weight-zero monomials; the remaining derivations preserve the
  // beta-degree, splitting the computation into independent blocks.
  std::map<long, std::vector<std::vector<int>>> blocks;
  for (auto& e : monomials) {
    Rational w(0);
    for (int v = 0; v < cr.n_vars; ++v)
      if (e[v]) w += Rational(e[v]) * cr.h_weights[v];
    if (!w.is_zero()) continue;
    blocks[beta_degree(e, cr.n_beta)].push_back(std::move(e));
  }
  int dim = 0;
  for (auto& [bd, block] : blocks) dim += joint_kernel_dim(cr, block);
  return dim;
}

// ---------------------------------------------------------------------------
// Compatibility of the induced derivations with the symbol maps
// ---------------------------------------------------------------------------

std::vector<FockState> compatibility_samples(const LieRepData& rep, int kmax_modes) {
  std::vector<FockState> singles;
  for (int kind = 0; kind < 2; ++kind)
    for (int i = 0; i < rep.v_dim; ++i)
      for (int k = 0; k <= kmax_modes; ++k)
        singles.push_back(
            FockState::single(kind == 0 ? ModeKind::beta : ModeKind::gamma, i, -k - 1));
  std::vector<FockState> out = singles;
  for (size_t a = 0; a < singles.size(); ++a)
    for (size_t b = a; b < singles.size(); ++b) out.push_back(wick(singles[a], singles[b]));
  return out;
}

Report verify_compatibility(const GradedRing& gr, const CurrentSet& cs,
                            const std::vector<FockState>& samples, int nmax) {
  Report rep;
  rep.suite = "compat";
  const auto& lie = gr.rep();
  for (int u = 0; u < lie.g_dim; ++u) {
    for (int n = 0; n <= nmax; ++n) {
      bool ok = true;
      std::string witness;
      int checked = 0;
      for (const auto& w : samples) {
        if (w.is_zero()) continue;
        const int r = w.max_degree();
        MultiPoly lhs = gr.derivation(u, n, gr.symbol(w, r));
        MultiPoly rhs = gr.symbol(nth_product(cs.hat[u], n, w), r);
        ++checked;
        if (lhs != rhs) {
          ok = false;
          std::ostringstream os;
          os << "sample " << w.str(lie.v_basis) << ": derivation gives " << lhs.str()
             << ", symbol of the product gives " << rhs.str();
          witness = os.str();
          break;
        }
      }
      rep.add("der[" + lie.basis[u] + "," + std::to_string(n) + "]",
              "induced derivation of " + lie.basis[u] + "^ at mode " + std::to_string(n) +
                  " matches the symbol of the circle product on " + std::to_string(checked) +
                  " samples",
              ok, witness);
    }
  }
  rep.sort_checks();
  return rep;
}

// ---------------------------------------------------------------------------
// Generators of the classical invariant ring
// ---------------------------------------------------------------------------

namespace {

// Rank of a list of polynomials, as vectors over their monomial support.
int span_rank(const std::vector<MultiPoly>& polys) {
  std::map<MultiPoly::Exponents, int> col;
  for (const auto& p : polys)
    for (const auto& [e, c] : p.terms()) col.emplace(e, static_cast<int>(col.size()));
  if (col.empty()) return 0;
  QMatrix m(static_cast<int>(polys.size()), static_cast<int>(col.size()));
  for (int i = 0; i < static_cast<int>(polys.size()); ++i)
    for (const auto& [e, c] : polys[i].terms()) m.at(i, col[e]) = c;
  return m.rank();
}

}  // namespace

Report verify_generators_p0(const GradedRing& gr, const Sl2Triple& tr, int dmax) {
  Report rep;
  rep.suite = "generators";
  const auto& lie = gr.rep();
  const MultiPoly sym_e = gr.symbol(tr.v_e, 2);
  const MultiPoly sym_f = gr.symbol(tr.v_f, 2);
  const MultiPoly sym_h = gr.symbol(tr.v_h, 2);
  const MultiPoly* syms[3] = {&sym_e, &sym_f, &sym_h};
  const char* names[3] = {"v_e", "v_f", "v_h"};

  for (int s = 0; s < 3; ++s)
    for (int u = 0; u < lie.g_dim; ++u) {
      MultiPoly d = gr.derivation(u, 0, *syms[s]);
      rep.add(std::string("inv[") + names[s] + "," + lie.basis[u] + "]",
              std::string("the symbol of ") + names[s] + " is invariant under " + lie.basis[u],
              d.is_zero(), d.is_zero() ? "" : "derivation gives " + d.str());
    }

  for (int d = 0; d <= dmax; d += 2) {
    std::vector<MultiPoly> products;
    for (int a = 0; 2 * a <= d; ++a)
      for (int b = 0; 2 * (a + b) <= d; ++b) {
        int c = d / 2 - a - b;
        products.push_back(sym_e.pow(a) * sym_f.pow(b) * sym_h.pow(c));
      }
    int rank = span_rank(products);
    int dim = invariant_dimension(lie, InvariantSpace::p0_full, d);
    std::ostringstream os;
    os << "span rank " << rank << ", kernel-oracle dimension " << dim;
    rep.add("span[d=" + std::to_string(d) + "]",
            "degree-" + std::to_string(d) +
                " monomials in the three symbols span the full invariant space",
            rank == dim, os.str());
  }
  rep.sort_checks();
  return rep;
}

JacobianResult jacobian_independence(const GradedRing& gr, const std::vector<MultiPoly>& polys,
                                     int trials, std::uint64_t seed) {
  JacobianResult res;
  res.target = static_cast<int>(polys.size());
  const auto& lie = gr.rep();
  std::vector<int> vars;
  for (int i = 0; i < lie.v_dim; ++i) vars.push_back(gr.var(ModeKind::beta, i, 0));
  for (int i = 0; i < lie.v_dim; ++i) vars.push_back(gr.var(ModeKind::gamma, i, 0));

  std::vector<std::vector<MultiPoly>> jac(polys.size());
  for (size_t p = 0; p < polys.size(); ++p)
    for (int v : vars) jac[p].push_back(polys[p].partial(v));

  std::mt19937_64 gen(seed);
  auto draw = [&]() { return static_cast<long>(gen() % 21) - 10; };

  for (int t = 0; t < trials; ++t) {
    std::vector<long> pt(vars.size());
    std::vector<Rational> full(gr.ring()->arity(), Rational(0));
    for (size_t v = 0; v < vars.size(); ++v) {
      pt[v] = draw();
      full[vars[v]] = Rational(pt[v]);
    }
    QMatrix m(static_cast<int>(polys.size()), static_cast<int>(vars.size()));
    for (int i = 0; i < m.rows(); ++i)
      for (int j = 0; j < m.cols(); ++j) m.at(i, j) = jac[i][j].eval_full(full);
    int r = m.rank();
    ++res.points_tried;
    if (r > res.max_rank) {
      res.max_rank = r;
      res.witness_point = pt;
    }
    if (r == res.target) {
      res.certified = true;
      break;
    }
  }
  return res;
}

namespace {

std::string point_str(const std::vector<long>& pt) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < pt.size(); ++i) {
    if (i) os << ",";
    os << pt[i];
  }
  os << ")";
  return os.str();
}

}  // namespace

Report jacobian_report(const GradedRing& gr, const Sl2Triple& tr, int trials, std::uint64_t seed) {
  Report rep;
  rep.suite = "jacobian";
  const MultiPoly sym_e = gr.symbol(tr.v_e, 2);
  const MultiPoly sym_f = gr.symbol(tr.v_f, 2);
  const MultiPoly sym_h = gr.symbol(tr.v_h, 2);

  JacobianResult pos = jacobian_independence(gr, {sym_e, sym_f, sym_h}, trials, seed);
  std::ostringstream wit;
  wit << "rank " << pos.max_rank << " of " << pos.target << " at point "
      << point_str(pos.witness_point) << " after " << pos.points_tried << " points";
  rep.add_status("independence",
                 "the Jacobian of the three degree-2 symbols attains full rank at a sampled point",
                 pos.certified ? CheckStatus::pass : CheckStatus::inconclusive, wit.str());

  JacobianResult neg = jacobian_independence(gr, {sym_e, sym_e, sym_h}, trials, seed);
  std::ostringstream wit2;
  wit2 << "max rank " << neg.max_rank << " over " << neg.points_tried << " points";
  rep.add("negative-control",
          "a repeated polynomial keeps the Jacobian rank-deficient at every sampled point",
          !neg.certified && neg.max_rank <= 2, wit2.str());
  rep.sort_checks();
  return rep;
}

Report verify_weight_zero_generator(const LieRepData& rep_data, int dmax) {
  Report rep;
  rep.suite = "weight-zero";
  ClassicalRing cr = classical_ring(rep_data, InvariantSpace::sym_v_star);
  const int ie = rep_data.v_basis_index("e");
  const int iff = rep_data.v_basis_index("f");
  const int ih = rep_data.v_basis_index("h");

  MultiPoly c(cr.ring);
  {
    MultiPoly::Exponents e1(cr.n_vars, 0), e2(cr.n_vars, 0);
    e1[ie] += 1;
    e1[iff] += 1;
    e2[ih] += 2;
    c.add_term(e1, Rational(1));
    c.add_term(e2, Rational(1));
  }

  auto classical_derive = [&](int u, const MultiPoly& p) {
    return extend_derivation(p, [&](int v) {
      MultiPoly img(cr.ring);
      for (const auto& [w, coef] : cr.images[u][v]) img += coef * MultiPoly::var(cr.ring, w);
      return img;
    });
  };

  bool inv = true;
  std::string wit;
  for (int u = 0; u < rep_data.g_dim; ++u) {
    MultiPoly d = classical_derive(u, c);
    if (!d.is_zero()) {
      inv = false;
      wit = rep_data.basis[u] + " gives " + d.str();
      break;
    }
  }
  rep.add("invariant", "the quadratic g0_e' g0_f' + g0_h' g0_h' is invariant", inv, wit);

  for (int d = 0; d <= dmax; ++d) {
    int dim = invariant_dimension(rep_data, InvariantSpace::sym_v_star, d);
    if (d % 2 == 1) {
      rep.add("odd[d=" + std::to_string(d) + "]",
              "no odd-degree invariants exist in Sym(V*)", dim == 0,
              "dimension " + std::to_string(dim));
      continue;
    }
    MultiPoly power = c.pow(static_cast<unsigned>(d / 2));
    bool power_invariant = true;
    for (int u = 0; u < rep_data.g_dim && power_invariant; ++u)
      power_invariant = classical_derive(u, power).is_zero();
    bool ok = dim == 1 && !power.is_zero() && power_invariant;
    std::ostringstream os;
    os << "dimension " << dim;
    rep.add("span[d=" + std::to_string(d) + "]",
            "the degree-" + std::to_string(d) +
                " invariants of Sym(V*) are spanned by the corresponding power of the quadratic",
            ok, os.str());
  }
  rep.sort_checks();
  return rep;
}

}  // namespace bgsys
