#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "bgsys/chiral.hpp"
#include "bgsys/expr.hpp"
#include "bgsys/grdring.hpp"
#include "bgsys/hilbert.hpp"
#include "bgsys/liereps.hpp"
#include "bgsys/suites.hpp"

namespace {

constexpr int kExitUsage = 2;

std::vector<long> parse_weight_list(const std::string& csv) {
  std::vector<long> out;
  std::istringstream in(csv);
  std::string tok;
  while (std::getline(in, tok, ',')) {
    size_t a = tok.find_first_not_of(" \t");
    if (a == std::string::npos) throw bgsys::error("empty entry in weight list");
    size_t b = tok.find_last_not_of(" \t");
    out.push_back(std::stol(tok.substr(a, b - a + 1)));
  }
  return out;
}

int cmd_ope(const std::string& rep_name, const std::string& rep_file, const std::string& ea,
            const std::string& eb) {
  bgsys::LieRepData rep = bgsys::load_rep(rep_name, rep_file);
  bgsys::FockState a = bgsys::parse_operator_expr(ea, rep);
  bgsys::FockState b = bgsys::parse_operator_expr(eb, rep);
  auto sing = bgsys::ope_singular(a, b);
  if (sing.empty()) {
    std::cout << "(regular)\n";
    return 0;
  }
  for (const auto& [n, st] : sing)
    std::cout << "n=" << n << ": " << st.str(rep.v_basis) << "\n";
  return 0;
}

int cmd_verify(const std::string& suite, const std::string& rep_name, const std::string& rep_file,
               const bgsys::RunConfig& base_cfg, const bgsys::SuiteOptions& opt,
               const std::string& json_path) {
  bgsys::LieRepData rep = bgsys::load_rep(rep_name, rep_file);
  bgsys::RunConfig cfg = base_cfg;
  cfg.rep = rep.name;
  bgsys::Report report = bgsys::run_suite(suite, rep, cfg, opt);
  report.print(std::cout);
  if (!json_path.empty()) {
    std::ofstream out(json_path, std::ios::binary);
    if (!out) throw bgsys::error("cannot write report to '" + json_path + "'");
    out << report.to_json_string();
  }
  return report.exit_code();
}

int cmd_hilbert(const std::string& weights_csv, int trunc, const std::string& closed) {
  std::vector<long> weights = parse_weight_list(weights_csv.empty() ? "" : weights_csv);
  bgsys::TSeries p = bgsys::residue_extract(bgsys::q_hilbert(weights, trunc));
  for (int k = 0; k <= p.trunc(); ++k) {
    if (k) std::cout << ", ";
    std::cout << p.coeff(k).str();
  }
  std::cout << "\n";
  if (closed.empty()) return 0;
  std::vector<bgsys::Rational> numerator;
  std::vector<int> degrees;
  bgsys::parse_closed_form(closed, numerator, degrees);
  bgsys::SeriesComparison cmp = bgsys::compare_series(p, numerator, degrees);
  if (cmp.equal) {
    std::cout << "matches " << closed << " up to t^" << trunc << "\n";
    return 0;
  }
  std::cout << "mismatch with " << closed << " first at t^" << cmp.first_mismatch << ": "
            << cmp.got.str() << " vs " << cmp.want.str() << "\n";
  return 1;
}

int cmd_invariants(const std::string& rep_name, const std::string& rep_file,
                   const std::string& space_name, int dmax, int trunc) {
  bgsys::LieRepData rep = bgsys::load_rep(rep_name, rep_file);
  bgsys::InvariantSpace space;
  std::vector<long> weights = bgsys::weight_multiset(rep);
  if (space_name == "p0-full") {
    space = bgsys::InvariantSpace::p0_full;
    std::vector<long> neg;
    for (long w : weights) neg.push_back(-w);
    weights.insert(weights.end(), neg.begin(), neg.end());
  } else if (space_name == "symv*") {
    space = bgsys::InvariantSpace::sym_v_star;
  } else {
    throw bgsys::error("unknown space '" + space_name + "' (use p0-full or symv*)");
  }
  int t = std::max(trunc, dmax);
  bgsys::TSeries series = bgsys::residue_extract(bgsys::q_hilbert(weights, t));
  bool all_ok = true;
  for (int d = 0; d <= dmax; ++d) {
    int dim = bgsys::invariant_dimension(rep, space, d);
    bool ok = series.coeff(d) == bgsys::Rational(dim);
    all_ok = all_ok && ok;
    std::cout << "d=" << d << ": dim=" << dim << " series=" << series.coeff(d).str()
              << (ok ? " ok" : " MISMATCH") << "\n";
  }
  return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for beta-gamma system vertex algebras"};
  app.require_subcommand(1);

  bgsys::RunConfig cfg;
  std::string rep_name = "sl2-adjoint", rep_file, json_path;

  // ope <rep> <expr_a> <expr_b>
  auto* ope = app.add_subcommand("ope", "print the singular products of two operators");
  std::string ope_rep = "sl2-adjoint", ope_a, ope_b, ope_rep_file;
  ope->add_option("rep", ope_rep, "representation name")->required();
  ope->add_option("expr_a", ope_a, "left operator expression")->required();
  ope->add_option("expr_b", ope_b, "right operator expression")->required();
  ope->add_option("--rep-file", ope_rep_file, "representation document path");

  // verify <suite>
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::string member_expr, weights_csv, closed_form;
  verify->add_option("suite", suite, "one of: current-ope level commutant compat howe generators hilbert all")
      ->required();
  verify->add_option("--rep", rep_name, "built-in representation name");
  verify->add_option("--rep-file", rep_file, "representation document path");
  verify->add_option("--trunc", cfg.trunc, "series truncation order");
  verify->add_option("--dmax", cfg.dmax, "maximum polynomial degree checked");
  verify->add_option("--kmax", cfg.kmax, "maximum derivative index of graded variables");
  verify->add_option("--seed", cfg.seed, "sampling seed");
  verify->add_option("--json", json_path, "write the JSON report here");
  verify->add_option("--v", member_expr, "commutant: operator expression to test");
  verify->add_option("--weights", weights_csv, "hilbert: comma-separated weight list");
  verify->add_option("--closed", closed_form, "hilbert: closed form F/(d1,d2,...)");

  // hilbert
  auto* hilbert = app.add_subcommand("hilbert", "print an invariant Hilbert series");
  std::string h_weights, h_closed;
  int h_trunc = 20;
  hilbert->add_option("--weights", h_weights, "comma-separated weight list (omitted = empty multiset)");
  hilbert->add_option("--trunc", h_trunc, "series truncation order");
  hilbert->add_option("--closed", h_closed, "closed form F/(d1,d2,...) to compare");

  // invariants
  auto* invariants = app.add_subcommand("invariants", "tabulate invariant dimensions per degree");
  std::string inv_rep = "sl2-adjoint", inv_rep_file, inv_space = "p0-full";
  int inv_dmax = 8, inv_trunc = 20;
  invariants->add_option("--rep", inv_rep, "built-in representation name");
  invariants->add_option("--rep-file", inv_rep_file, "representation document path");
  invariants->add_option("--space", inv_space, "p0-full or symv*");
  invariants->add_option("--dmax", inv_dmax, "maximum degree");
  invariants->add_option("--trunc", inv_trunc, "series truncation order");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(ope)) return cmd_ope(ope_rep, ope_rep_file, ope_a, ope_b);
    if (app.got_subcommand(verify)) {
      bgsys::SuiteOptions opt;
      if (!member_expr.empty()) opt.membership_expr = member_expr;
      if (!weights_csv.empty()) opt.weights = parse_weight_list(weights_csv);
      if (!closed_form.empty()) opt.closed_form = closed_form;
      return cmd_verify(suite, rep_name, rep_file, cfg, opt, json_path);
    }
    if (app.got_subcommand(hilbert)) return cmd_hilbert(h_weights, h_trunc, h_closed);
    if (app.got_subcommand(invariants))
      return cmd_invariants(inv_rep, inv_rep_file, inv_space, inv_dmax, inv_trunc);
  } catch (const bgsys::parse_error& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const bgsys::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
