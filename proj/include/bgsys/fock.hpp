#ifndef BGSYS_FOCK_HPP
#define BGSYS_FOCK_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bgsys/rational.hpp"

namespace bgsys {

enum class ModeKind : std::uint8_t { beta = 0, gamma = 1 };

/// One Fourier mode of a generator field. The mode algebra is
///   [beta^{x_i}(m), gamma^{x'_j}(k)] = delta_{ij} delta_{m+k+1,0},
///   [beta,beta] = [gamma,gamma] = 0,
/// and every mode with m >= 0 annihilates the vacuum.
struct GenMode {
  ModeKind kind;
  int index;  // module basis slot: x_index for beta, x'_index for gamma
  int mode;

  auto operator<=>(const GenMode&) const = default;
};

/// Conformal weight carried by a creation mode: beta(-k-1) has weight k+1,
/// gamma(-k-1) has weight k.
long mode_weight(const GenMode& g);

/// Product of pairwise-commuting creation modes (mode <= -1) applied to the
/// vacuum, kept sorted by (kind, index, mode); the canonical sort is a
/// normal form. The empty product is the vacuum.
class FockMonomial {
 public:
  FockMonomial() = default;
  explicit FockMonomial(std::vector<GenMode> modes);  // sorts; rejects mode >= 0

  static FockMonomial vacuum() { return FockMonomial(); }

  const std::vector<GenMode>& modes() const { return modes_; }
  bool is_vacuum() const { return modes_.empty(); }
  int degree() const { return static_cast<int>(modes_.size()); }
  long weight() const;
  /// Largest -mode over all modes; 0 for the vacuum.
  long depth() const;

  FockMonomial with_inserted(const GenMode& g) const;
  FockMonomial without(int pos) const;

  auto operator<=>(const FockMonomial&) const = default;

 private:
  std::vector<GenMode> modes_;
};

/// Finite rational linear combination of Fock monomials. Doubles as a vertex
/// operator through the state-field correspondence; all circle products are
/// computed on this representation. Immutable value semantics throughout.
class FockState {
 public:
  using TermMap = std::map<FockMonomial, Rational>;

  FockState() = default;

  static FockState zero() { return FockState(); }
  static FockState vacuum();
  /// Single creation mode applied to the vacuum.
  static FockState single(ModeKind kind, int index, int mode);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }

  void add_term(const FockMonomial& m, const Rational& c);

  /// Max conformal weight over monomials; 0 for the zero state.
  long max_weight() const;
  /// Max mode depth over monomials; 0 for the zero state.
  long max_depth() const;
  /// Max monomial length (filtration degree); 0 for the zero state.
  int max_degree() const;
  /// True when every monomial has the same weight (vacuously for 0).
  bool is_homogeneous(long* weight_out = nullptr) const;

  FockState operator-() const;
  FockState& operator+=(const FockState& o);
  FockState& operator-=(const FockState& o);
  FockState& operator*=(const Rational& c);
  friend FockState operator+(FockState a, const FockState& b) { return a += b; }
  friend FockState operator-(FockState a, const FockState& b) { return a -= b; }
  friend FockState operator*(const Rational& c, FockState s) { return s *= c; }
  friend bool operator==(const FockState& a, const FockState& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const FockState& a, const FockState& b) { return !(a == b); }

  /// Rendered with the given module basis labels, e.g. "2 b[e](-1)g[h'](-1)".
  std::string str(const std::vector<std::string>& v_names) const;

 private:
  TermMap terms_;
};

/// Apply one mode to a state: creation modes insert, nonnegative modes
/// contract against complementary creation modes and annihilate the vacuum.
FockState mode_action(const GenMode& g, const FockState& s);

/// The n-th circle product a o_n b, exact for every integer n. n >= 0 gives
/// the singular OPE coefficients, n = -1 the Wick product, n = -k-1 the
/// normally ordered product with the k-th derivative of a.
FockState nth_product(const FockState& a, long n, const FockState& b);

/// Wick (normally ordered) product, a o_{-1} b.
FockState wick(const FockState& a, const FockState& b);

/// Translation operator: sends each creation mode G(-m-1) to (m+1) G(-m-2).
/// Agrees with a o_{-2} vacuum.
FockState derivative(const FockState& a);

/// All nonzero singular products a o_n b, n >= 0. Finite because products
/// vanish once n >= wt(a) + wt(b).
std::map<long, FockState> ope_singular(const FockState& a, const FockState& b);

}  // namespace bgsys

#endif
