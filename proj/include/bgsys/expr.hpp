#ifndef BGSYS_EXPR_HPP
#define BGSYS_EXPR_HPP

#include <cstddef>
#include <string>

#include "bgsys/fock.hpp"
#include "bgsys/liereps.hpp"

namespace bgsys {

class parse_error : public error {
 public:
  parse_error(const std::string& msg, std::size_t pos)
      : error(msg + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

/// Operator expressions:
///   expr   := ['-'] term | expr '+' term | expr '-' term
///   term   := rational? factor
///   factor := 'beta(' name ',' nat ')' | 'gamma(' name ',' nat ')'
///           | ':' factor factor ':' | 'D(' expr ')' | '(' expr ')'
/// beta(x,k) is the k-th derivative field of beta^x, i.e. the state
/// k! beta^x(-k-1)|0>; gamma takes primed module labels (gamma(e',1)).
FockState parse_operator_expr(const std::string& text, const LieRepData& rep);

}  // namespace bgsys

#endif
