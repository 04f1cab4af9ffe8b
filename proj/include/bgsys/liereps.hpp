#ifndef BGSYS_LIEREPS_HPP
#define BGSYS_LIEREPS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bgsys/linalg.hpp"
#include "bgsys/rational.hpp"

namespace bgsys {

/// A finite-dimensional Lie algebra representation given by structure
/// constants and representation matrices, all over the exact rationals.
/// Every invariant is checked at load time; violations are hard errors
/// naming the failing identity.
struct LieRepData {
  int g_dim = 0;
  int v_dim = 0;
  std::string name;                      // instance label, e.g. "sl2-adjoint"
  std::vector<std::string> basis;        // labels u_1..u_d of the algebra basis
  std::vector<std::string> v_basis;      // labels x_1..x_n of the module basis
  // structure[i][j][k] = c_{ij}^k  where [u_i, u_j] = sum_k c_{ij}^k u_k
  std::vector<std::vector<std::vector<Rational>>> structure;
  std::vector<QMatrix> rho;              // rho(u_i), n x n
  std::optional<QMatrix> bform;          // symmetric invariant form B' on V

  const Rational& c(int i, int j, int k) const { return structure[i][j][k]; }
  int basis_index(const std::string& label) const;    // throws on unknown label
  int v_basis_index(const std::string& label) const;  // throws on unknown label
};

struct BilinearForm {
  QMatrix matrix;
  std::string label;  // "K", "B" or "B'"
};

/// Validates all LieRepData invariants (antisymmetry, Jacobi, homomorphism,
/// B' symmetric and invariant). Throws bgsys::error naming the witness.
void validate_rep(const LieRepData& rep);

/// Parse a representation document (JSON text; see README for the format)
/// and validate it.
LieRepData load_rep_json(const std::string& text);

/// Built-in named instances. Currently "sl2-adjoint" and "trivial".
LieRepData builtin_rep(const std::string& name);

/// Resolve a --rep / --rep-file pair: file content wins if given.
LieRepData load_rep(const std::string& name, const std::string& file_path = "");

QMatrix ad_matrix(const LieRepData& rep, int i);

/// Killing form K(u_i,u_j) = Tr(ad u_i ad u_j).
BilinearForm killing_form(const LieRepData& rep);

/// Trace form B(u_i,u_j) = -Tr(rho(u_i) rho(u_j)).
BilinearForm trace_form(const LieRepData& rep);

/// Action on V*: -rho(u_i)^T.
QMatrix dual_action(const LieRepData& rep, int i);

/// Multiset of h-eigenvalues on V, descending. Requires a basis element
/// labeled "h" whose action is diagonalizable with integer eigenvalues.
std::vector<long> weight_multiset(const LieRepData& rep);

/// The dual representation on V* (same algebra, rho* = -rho^T).
LieRepData dual_rep(const LieRepData& rep);

/// Direct sum of two modules over the same algebra.
LieRepData direct_sum(const LieRepData& a, const LieRepData& b);

}  // namespace bgsys

#endif
