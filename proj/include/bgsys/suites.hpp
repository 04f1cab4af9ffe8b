#ifndef BGSYS_SUITES_HPP
#define BGSYS_SUITES_HPP

#include <optional>
#include <string>
#include <vector>

#include "bgsys/liereps.hpp"
#include "bgsys/report.hpp"

namespace bgsys {

struct SuiteOptions {
  std::optional<std::string> membership_expr;  // commutant: state to test
  std::optional<std::vector<long>> weights;    // hilbert: override V+V* weights
  std::optional<std::string> closed_form;      // hilbert: "F/(d1,d2,...)"
};

const std::vector<std::string>& suite_names();

/// Run one named verification suite ("all" runs every suite and prefixes
/// check ids with the sub-suite name). Deterministic for a fixed config.
Report run_suite(const std::string& name, const LieRepData& rep, const RunConfig& cfg,
                 const SuiteOptions& opt = {});

}  // namespace bgsys

#endif
