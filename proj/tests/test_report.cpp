#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "bgsys/expr.hpp"
#include "bgsys/report.hpp"
#include "bgsys/suites.hpp"

using namespace bgsys;

namespace {

const LieRepData& adjoint() {
  static LieRepData rep = builtin_rep("sl2-adjoint");
  return rep;
}

}  // namespace

TEST_CASE("report json round-trips losslessly") {
  Report r;
  r.suite = "demo";
  r.config.rep = "sl2-adjoint";
  r.config.seed = 424242;
  r.add("alpha", "first identity", true);
  r.add("beta", "second identity", false, "got 1, want 2");
  r.add_status("gamma", "third identity", CheckStatus::inconclusive, "max rank 2");
  std::string json = r.to_json_string();
  Report back = Report::from_json_string(json);
  CHECK(back == r);
  CHECK(back.to_json_string() == json);
}

TEST_CASE("exit codes") {
  Report r;
  r.add("a", "x", true);
  CHECK(r.exit_code() == 0);
  r.add_status("b", "y", CheckStatus::inconclusive);
  CHECK(r.exit_code() == 3);
  r.add("c", "z", false);
  CHECK(r.exit_code() == 1);
}

TEST_CASE("same config produces byte-identical reports") {
  RunConfig cfg;
  Report a = run_suite("current-ope", adjoint(), cfg);
  Report b = run_suite("current-ope", adjoint(), cfg);
  CHECK(a.to_json_string() == b.to_json_string());

  Report c = run_suite("generators", adjoint(), cfg);
  Report d = run_suite("generators", adjoint(), cfg);
  CHECK(c.to_json_string() == d.to_json_string());
}

TEST_CASE("absorb prefixes check ids with the sub-suite") {
  Report sub;
  sub.suite = "inner";
  sub.add("x", "r", true);
  Report top;
  top.suite = "all";
  top.absorb(sub);
  REQUIRE(top.checks.size() == 1);
  CHECK(top.checks[0].id == "inner/x");
}

TEST_CASE("all suite aggregates every sub-suite and passes") {
  RunConfig cfg;
  Report all = run_suite("all", adjoint(), cfg);
  CHECK(all.suite == "all");
  CHECK(all.all_pass());
  CHECK(all.checks.size() >= 40);
  // sorted ids
  for (size_t i = 1; i < all.checks.size(); ++i) CHECK(all.checks[i - 1].id <= all.checks[i].id);
}

TEST_CASE("unknown suite is rejected") {
  CHECK_THROWS_AS(run_suite("nope", adjoint(), RunConfig{}), error);
}

TEST_CASE("commutant suite with an explicit non-member fails") {
  SuiteOptions opt;
  opt.membership_expr = "beta(e,0)";
  Report r = run_suite("commutant", adjoint(), RunConfig{}, opt);
  CHECK(r.any_fail());
  REQUIRE(r.checks.size() == 1);
  CHECK_FALSE(r.checks[0].witness.empty());
}

TEST_CASE("hilbert suite honors explicit weights and closed form") {
  SuiteOptions opt;
  opt.weights = std::vector<long>{2, 2, 0, 0, -2, -2};
  opt.closed_form = "1/(2,2,2)";
  Report r = run_suite("hilbert", adjoint(), RunConfig{}, opt);
  CHECK(r.all_pass());

  SuiteOptions bad = opt;
  bad.closed_form = "1/(2,2)";
  Report rb = run_suite("hilbert", adjoint(), RunConfig{}, bad);
  CHECK(rb.any_fail());
}

// --------------------------------------------------------------------------
// operator expression grammar
// --------------------------------------------------------------------------

TEST_CASE("expression parser: generators and derivatives") {
  FockState be = parse_operator_expr("beta(e,0)", adjoint());
  CHECK(be == FockState::single(ModeKind::beta, 0, -1));

  // beta(x,k) denotes the k-th derivative field: k! beta(-k-1)
  FockState be2 = parse_operator_expr("beta(e,2)", adjoint());
  CHECK(be2 == Rational(2) * FockState::single(ModeKind::beta, 0, -3));

  FockState ge = parse_operator_expr("gamma(e',1)", adjoint());
  CHECK(ge == FockState::single(ModeKind::gamma, 0, -2));

  CHECK(parse_operator_expr("D(beta(e,0))", adjoint()) ==
        FockState::single(ModeKind::beta, 0, -2));
  CHECK(parse_operator_expr("beta(e,1)", adjoint()) ==
        parse_operator_expr("D(beta(e,0))", adjoint()));
}

TEST_CASE("expression parser: wick products, scalars, sums") {
  FockState s = parse_operator_expr("2:beta(e,0)gamma(h',0): - :beta(h,0)gamma(f',0):", adjoint());
  FockState manual = Rational(2) * wick(FockState::single(ModeKind::beta, 0, -1),
                                        FockState::single(ModeKind::gamma, 2, -1)) -
                     wick(FockState::single(ModeKind::beta, 2, -1),
                          FockState::single(ModeKind::gamma, 1, -1));
  CHECK(s == manual);

  FockState half = parse_operator_expr("1/2 beta(e,0)", adjoint());
  CHECK(half == Rational(1, 2) * FockState::single(ModeKind::beta, 0, -1));

  FockState neg = parse_operator_expr("-beta(e,0) + beta(e,0)", adjoint());
  CHECK(neg.is_zero());

  FockState parens = parse_operator_expr("D((beta(e,0) - beta(e,0)))", adjoint());
  CHECK(parens.is_zero());

  // nested wick products associate as written
  FockState nested = parse_operator_expr("::beta(e,0)beta(f,0):gamma(h',0):", adjoint());
  FockState manual2 = wick(wick(FockState::single(ModeKind::beta, 0, -1),
                                FockState::single(ModeKind::beta, 1, -1)),
                           FockState::single(ModeKind::gamma, 2, -1));
  CHECK(nested == manual2);
}

TEST_CASE("expression parser: near-grammar inputs fail cleanly") {
  // deterministic fuzz: every outcome is either a state or a parse_error
  std::mt19937_64 gen(51);
  const std::vector<std::string> pieces = {"beta(",  "gamma(", "e",  "f",   "h",  "e'", ",",
                                           ")",      ":",      "D(", "(",   ")",  "+",  "-",
                                           "2",      "1/2",    " ",  "0",   "3",  "'"};
  for (int trial = 0; trial < 400; ++trial) {
    std::string text;
    int n = 1 + static_cast<int>(gen() % 8);
    for (int i = 0; i < n; ++i) text += pieces[gen() % pieces.size()];
    try {
      parse_operator_expr(text, adjoint());
    } catch (const parse_error&) {
      // expected for most random strings
    }
  }
}

TEST_CASE("expression parser: errors carry positions") {
  CHECK_THROWS_AS(parse_operator_expr("beta(e,0", adjoint()), parse_error);
  CHECK_THROWS_AS(parse_operator_expr("beta(q,0)", adjoint()), parse_error);
  CHECK_THROWS_AS(parse_operator_expr("gamma(e,0)", adjoint()), parse_error);  // missing prime
  CHECK_THROWS_AS(parse_operator_expr("beta(e,0) beta(f,0)", adjoint()), parse_error);
  CHECK_THROWS_AS(parse_operator_expr("", adjoint()), parse_error);
  try {
    parse_operator_expr("beta(zz,0)", adjoint());
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.position() == 5);
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}
