#include "bgsys/liereps.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace bgsys {

int LieRepData::basis_index(const std::string& label) const {
  for (int i = 0; i < g_dim; ++i)
    if (basis[i] == label) return i;
  throw error("unknown algebra basis label '" + label + "'");
}

int LieRepData::v_basis_index(const std::string& label) const {
  for (int i = 0; i < v_dim; ++i)
    if (v_basis[i] == label) return i;
  throw error("unknown module basis label '" + label + "'");
}

namespace {

std::string ij(int i, int j) {
  std::ostringstream os;
  os << "(" << i << "," << j << ")";
  return os.str();
}

}  // namespace

void validate_rep(const LieRepData& rep) {
  const int d = rep.g_dim, n = rep.v_dim;
  if (static_cast<int>(rep.basis.size()) != d) throw error("basis label count != g_dim");
  if (static_cast<int>(rep.v_basis.size()) != n) throw error("module label count != v_dim");
  if (static_cast<int>(rep.structure.size()) != d) throw error("structure tensor shape mismatch");
  for (const auto& plane : rep.structure) {
    if (static_cast<int>(plane.size()) != d) throw error("structure tensor shape mismatch");
    for (const auto& row : plane)
      if (static_cast<int>(row.size()) != d) throw error("structure tensor shape mismatch");
  }
  if (static_cast<int>(rep.rho.size()) != d) throw error("rho matrix count != g_dim");
  for (const auto& m : rep.rho)
    if (m.rows() != n || m.cols() != n) throw error("rho matrix is not v_dim x v_dim");

  // antisymmetry c_ij^k = -c_ji^k
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int k = 0; k < d; ++k)
        if (rep.c(i, j, k) != -rep.c(j, i, k))
          throw error("structure constants not antisymmetric at (i,j,k)=(" + std::to_string(i) +
                      "," + std::to_string(j) + "," + std::to_string(k) + ")");

  // Jacobi: sum_m c_jk^m c_im^l + c_ki^m c_jm^l + c_ij^m c_km^l = 0
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j)
      for (int k = j + 1; k < d; ++k)
        for (int l = 0; l < d; ++l) {
          Rational s(0);
          for (int m = 0; m < d; ++m) {
            s += rep.c(j, k, m) * rep.c(i, m, l);
            s += rep.c(k, i, m) * rep.c(j, m, l);
            s += rep.c(i, j, m) * rep.c(k, m, l);
          }
          if (!s.is_zero())
            throw error("Jacobi identity fails at (i,j,k)=(" + std::to_string(i) + "," +
                        std::to_string(j) + "," + std::to_string(k) + "), component " +
                        std::to_string(l));
        }

  // homomorphism: [rho(u_i), rho(u_j)] = sum_k c_ij^k rho(u_k)
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      QMatrix lhs = rep.rho[i] * rep.rho[j] - rep.rho[j] * rep.rho[i];
      QMatrix rhs(n, n);
      for (int k = 0; k < d; ++k) {
        if (rep.c(i, j, k).is_zero()) continue;
        QMatrix t = rep.rho[k];
        t *= rep.c(i, j, k);
        rhs += t;
      }
      if (lhs != rhs) throw error("rho is not a homomorphism at pair " + ij(i, j));
    }

  if (rep.bform) {
    const QMatrix& bp = *rep.bform;
    if (bp.rows() != n || bp.cols() != n) throw error("bform is not v_dim x v_dim");
    if (!bp.is_symmetric()) throw error("bform is not symmetric");
    for (int i = 0; i < d; ++i) {
      // invariance: B'(rho(u)x, y) + B'(x, rho(u)y) = 0, i.e. rho^T B' + B' rho = 0
      QMatrix z = rep.rho[i].transpose() * bp + bp * rep.rho[i];
      if (!z.is_zero()) throw error("bform is not invariant under basis element " + rep.basis[i]);
    }
  }
}

namespace {

Rational json_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (j.is_string()) return Rational(j.get<std::string>());
  throw error("expected integer or \"p/q\" string in representation document");
}

QMatrix json_matrix(const nlohmann::json& j, int n, const std::string& what) {
  QMatrix m(n, n);
  if (!j.is_array()) throw error(what + " must be an array");
  if (static_cast<int>(j.size()) == n && j.size() > 0 && j[0].is_array()) {
    for (int i = 0; i < n; ++i) {
      if (static_cast<int>(j[i].size()) != n) throw error(what + " row has wrong length");
      for (int k = 0; k < n; ++k) m.at(i, k) = json_rational(j[i][k]);
    }
  } else {
    if (static_cast<int>(j.size()) != n * n)
      throw error(what + " must have v_dim*v_dim entries (row-major)");
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) m.at(i, k) = json_rational(j[i * n + k]);
  }
  return m;
}

}  // namespace

LieRepData load_rep_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw error(std::string("representation document parse error: ") + e.what());
  }

  LieRepData rep;
  try {
    rep.g_dim = doc.at("g_dim").get<int>();
    rep.v_dim = doc.at("v_dim").get<int>();
    if (rep.g_dim <= 0 || rep.v_dim <= 0) throw error("dimensions must be positive");
    rep.name = doc.value("name", std::string("custom"));
    if (doc.contains("basis")) {
      rep.basis = doc.at("basis").get<std::vector<std::string>>();
    } else {
      for (int i = 0; i < rep.g_dim; ++i) rep.basis.push_back("u" + std::to_string(i + 1));
    }
    if (doc.contains("v_basis")) {
      rep.v_basis = doc.at("v_basis").get<std::vector<std::string>>();
    } else {
      for (int i = 0; i < rep.v_dim; ++i) rep.v_basis.push_back("x" + std::to_string(i + 1));
    }

    rep.structure.assign(
        rep.g_dim, std::vector<std::vector<Rational>>(rep.g_dim,
                                                      std::vector<Rational>(rep.g_dim, Rational(0))));
    if (doc.contains("structure")) {
      for (const auto& quad : doc.at("structure")) {
        if (!quad.is_array() || quad.size() != 4)
          throw error("structure entries must be [i, j, k, c] quadruples");
        int i = quad[0].get<int>(), j = quad[1].get<int>(), k = quad[2].get<int>();
        if (i < 0 || i >= rep.g_dim || j < 0 || j >= rep.g_dim || k < 0 || k >= rep.g_dim)
          throw error("structure index out of range");
        rep.structure[i][j][k] += json_rational(quad[3]);
      }
    }

    const auto& rho = doc.at("rho");
    if (static_cast<int>(rho.size()) != rep.g_dim)
      throw error("rho must list one matrix per algebra basis element");
    for (const auto& m : rho) rep.rho.push_back(json_matrix(m, rep.v_dim, "rho matrix"));

    if (doc.contains("bform")) rep.bform = json_matrix(doc.at("bform"), rep.v_dim, "bform");
  } catch (const nlohmann::json::exception& e) {
    throw error(std::string("representation document field error: ") + e.what());
  }

  validate_rep(rep);
  return rep;
}

LieRepData builtin_rep(const std::string& name) {
  if (name == "sl2-adjoint") {
    LieRepData rep;
    rep.name = "sl2-adjoint";
    rep.g_dim = rep.v_dim = 3;
    rep.basis = {"e", "f", "h"};
    rep.v_basis = {"e", "f", "h"};
    rep.structure.assign(3, std::vector<std::vector<Rational>>(3, std::vector<Rational>(3, Rational(0))));
    auto set = [&](int i, int j, int k, long v) {
      rep.structure[i][j][k] = Rational(v);
      rep.structure[j][i][k] = Rational(-v);
    };
    // [e,f] = h, [h,e] = 2e, [h,f] = -2f
    set(0, 1, 2, 1);
    set(2, 0, 0, 2);
    set(2, 1, 1, -2);
    for (int i = 0; i < 3; ++i) rep.rho.push_back(ad_matrix(rep, i));
    rep.bform = killing_form(rep).matrix;
    validate_rep(rep);
    return rep;
  }
  if (name == "trivial") {
    LieRepData rep;
    rep.name = "trivial";
    rep.g_dim = 1;
    rep.v_dim = 1;
    rep.basis = {"u1"};
    rep.v_basis = {"x1"};
    rep.structure.assign(1, std::vector<std::vector<Rational>>(1, std::vector<Rational>(1, Rational(0))));
    rep.rho.emplace_back(1, 1);
    validate_rep(rep);
    return rep;
  }
  throw error("unknown built-in representation '" + name + "'");
}

LieRepData load_rep(const std::string& name, const std::string& file_path) {
  if (!file_path.empty()) {
    std::ifstream in(file_path);
    if (!in) throw error("cannot open representation file '" + file_path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return load_rep_json(buf.str());
  }
  return builtin_rep(name);
}

QMatrix ad_matrix(const LieRepData& rep, int i) {
  QMatrix m(rep.g_dim, rep.g_dim);
  for (int j = 0; j < rep.g_dim; ++j)
    for (int k = 0; k < rep.g_dim; ++k) m.at(k, j) = rep.c(i, j, k);
  return m;
}

BilinearForm killing_form(const LieRepData& rep) {
  QMatrix k(rep.g_dim, rep.g_dim);
  std::vector<QMatrix> ad;
  for (int i = 0; i < rep.g_dim; ++i) ad.push_back(ad_matrix(rep, i));
  for (int i = 0; i < rep.g_dim; ++i)
    for (int j = 0; j < rep.g_dim; ++j) k.at(i, j) = (ad[i] * ad[j]).trace();
  return {k, "K"};
}

BilinearForm trace_form(const LieRepData& rep) {
  QMatrix b(rep.g_dim, rep.g_dim);
  for (int i = 0; i < rep.g_dim; ++i)
    for (int j = 0; j < rep.g_dim; ++j) b.at(i, j) = -(rep.rho[i] * rep.rho[j]).trace();
  return {b, "B"};
}

QMatrix dual_action(const LieRepData& rep, int i) { return -rep.rho[i].transpose(); }

std::vector<long> weight_multiset(const LieRepData& rep) {
  int hi = rep.basis_index("h");
  const QMatrix& h = rep.rho[hi];
  std::vector<std::pair<long, int>> eig;
  if (!integer_eigenvalues(h, eig))
    throw error("h-action has non-integer eigenvalues");
  int total = 0;
  for (auto& [lambda, mult] : eig) {
    // diagonalizability: geometric multiplicity must match the algebraic one
    QMatrix shifted = h;
    for (int i = 0; i < rep.v_dim; ++i) shifted.at(i, i) -= Rational(lambda);
    if (shifted.kernel_dim() != mult)
      throw error("h-action is not diagonalizable (eigenvalue " + std::to_string(lambda) + ")");
    total += mult;
  }
  if (total != rep.v_dim) throw error("h-action eigenvalues do not fill the module");
  std::vector<long> weights;
  for (auto& [lambda, mult] : eig)
    for (int r = 0; r < mult; ++r) weights.push_back(lambda);
  std::sort(weights.rbegin(), weights.rend());
  return weights;
}

LieRepData dual_rep(const LieRepData& rep) {
  LieRepData d = rep;
  d.name = rep.name + "-dual";
  d.rho.clear();
  for (int i = 0; i < rep.g_dim; ++i) d.rho.push_back(dual_action(rep, i));
  d.v_basis.clear();
  for (const auto& x : rep.v_basis) d.v_basis.push_back(x + "*");
  d.bform.reset();
  validate_rep(d);
  return d;
}

LieRepData direct_sum(const LieRepData& a, const LieRepData& b) {
  if (a.g_dim != b.g_dim || a.structure != b.structure)
    throw error("direct sum requires modules over the same algebra");
  LieRepData s = a;
  s.name = a.name + "+" + b.name;
  s.v_dim = a.v_dim + b.v_dim;
  s.v_basis = a.v_basis;
  for (const auto& x : b.v_basis) s.v_basis.push_back(x + "#2");
  s.rho.clear();
  for (int i = 0; i < a.g_dim; ++i) {
    QMatrix m(s.v_dim, s.v_dim);
    for (int r = 0; r < a.v_dim; ++r)
      for (int c = 0; c < a.v_dim; ++c) m.at(r, c) = a.rho[i].at(r, c);
    for (int r = 0; r < b.v_dim; ++r)
      for (int c = 0; c < b.v_dim; ++c) m.at(a.v_dim + r, a.v_dim + c) = b.rho[i].at(r, c);
    s.rho.push_back(std::move(m));
  }
  if (a.bform && b.bform) {
    QMatrix m(s.v_dim, s.v_dim);
    for (int r = 0; r < a.v_dim; ++r)
      for (int c = 0; c < a.v_dim; ++c) m.at(r, c) = a.bform->at(r, c);
    for (int r = 0; r < b.v_dim; ++r)
      for (int c = 0; c < b.v_dim; ++c) m.at(a.v_dim + r, a.v_dim + c) = b.bform->at(r, c);
    s.bform = std::move(m);
  } else {
    s.bform.reset();
  }
  validate_rep(s);
  return s;
}

}  // namespace bgsys
