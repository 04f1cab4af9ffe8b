#ifndef BGSYS_REPORT_HPP
#define BGSYS_REPORT_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace bgsys {

enum class CheckStatus { pass, fail, inconclusive };

std::string to_string(CheckStatus s);
CheckStatus status_from_string(const std::string& s);

struct CheckRecord {
  std::string id;
  std::string ref;      // which identity this check asserts
  CheckStatus status;
  std::string witness;  // empty = none; serialized as null

  friend bool operator==(const CheckRecord&, const CheckRecord&) = default;
};

struct RunConfig {
  std::string rep = "sl2-adjoint";
  int trunc = 20;
  int dmax = 8;
  int kmax = 4;
  std::uint64_t seed = 20240001;

  friend bool operator==(const RunConfig&, const RunConfig&) = default;
};

/// Deterministic pass/fail record of one verification suite. Given the same
/// config, serialization is byte-identical across runs.
struct Report {
  std::string suite;
  RunConfig config;
  std::vector<CheckRecord> checks;

  void add(std::string id, std::string ref, bool ok, std::string witness = "");
  void add_status(std::string id, std::string ref, CheckStatus st, std::string witness = "");
  /// Append another report's checks under "<its suite>/<id>".
  void absorb(const Report& sub);

  bool all_pass() const;
  bool any_fail() const;
  bool any_inconclusive() const;
  int exit_code() const;  // 0 all pass, 1 any fail, 3 inconclusive only

  /// Stable order for emission (sorted by id).
  void sort_checks();

  std::string to_json_string() const;
  static Report from_json_string(const std::string& text);

  void print(std::ostream& os) const;

  friend bool operator==(const Report&, const Report&) = default;
};

}  // namespace bgsys

#endif
