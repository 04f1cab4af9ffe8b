#include "bgsys/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <ostream>

#include "bgsys/rational.hpp"

namespace bgsys {

std::string to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::inconclusive: return "inconclusive";
  }
  return "?";
}

CheckStatus status_from_string(const std::string& s) {
  if (s == "pass") return CheckStatus::pass;
  if (s == "fail") return CheckStatus::fail;
  if (s == "inconclusive") return CheckStatus::inconclusive;
  throw error("unknown check status '" + s + "'");
}

void Report::add(std::string id, std::string ref, bool ok, std::string witness) {
  add_status(std::move(id), std::move(ref), ok ? CheckStatus::pass : CheckStatus::fail,
             std::move(witness));
}

void Report::add_status(std::string id, std::string ref, CheckStatus st, std::string witness) {
  checks.push_back(CheckRecord{std::move(id), std::move(ref), st, std::move(witness)});
}

void Report::absorb(const Report& sub) {
  for (const auto& c : sub.checks) {
    CheckRecord r = c;
    r.id = sub.suite + "/" + r.id;
    checks.push_back(std::move(r));
  }
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.status == CheckStatus::pass; });
}

bool Report::any_fail() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.status == CheckStatus::fail; });
}

bool Report::any_inconclusive() const {
  return std::any_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.status == CheckStatus::inconclusive; });
}

int Report::exit_code() const {
  if (any_fail()) return 1;
  if (any_inconclusive()) return 3;
  return 0;
}

void Report::sort_checks() {
  std::stable_sort(checks.begin(), checks.end(),
                   [](const CheckRecord& a, const CheckRecord& b) { return a.id < b.id; });
}

std::string Report::to_json_string() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["config"] = {{"rep", config.rep},
                 {"trunc", config.trunc},
                 {"dmax", config.dmax},
                 {"kmax", config.kmax},
                 {"seed", config.seed}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["ref"] = c.ref;
    jc["status"] = to_string(c.status);
    if (c.witness.empty())
      jc["witness"] = nullptr;
    else
      jc["witness"] = c.witness;
    j["checks"].push_back(std::move(jc));
  }
  return j.dump(2) + "\n";
}

Report Report::from_json_string(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  Report r;
  r.suite = j.at("suite").get<std::string>();
  const auto& cfg = j.at("config");
  r.config.rep = cfg.at("rep").get<std::string>();
  r.config.trunc = cfg.at("trunc").get<int>();
  r.config.dmax = cfg.at("dmax").get<int>();
  r.config.kmax = cfg.at("kmax").get<int>();
  r.config.seed = cfg.at("seed").get<std::uint64_t>();
  for (const auto& jc : j.at("checks")) {
    CheckRecord c;
    c.id = jc.at("id").get<std::string>();
    c.ref = jc.at("ref").get<std::string>();
    c.status = status_from_string(jc.at("status").get<std::string>());
    if (!jc.at("witness").is_null()) c.witness = jc.at("witness").get<std::string>();
    r.checks.push_back(std::move(c));
  }
  return r;
}

void Report::print(std::ostream& os) const {
  int pass = 0, fail = 0, inc = 0;
  for (const auto& c : checks) {
    const char* tag = "INCONCLUSIVE";
    if (c.status == CheckStatus::pass) {
      tag = "PASS";
      ++pass;
    } else if (c.status == CheckStatus::fail) {
      tag = "FAIL";
      ++fail;
    } else {
      ++inc;
    }
    os << "[" << tag << "] " << c.id << ": " << c.ref;
    if (!c.witness.empty()) os << "  {" << c.witness << "}";
    os << "\n";
  }
  os << suite << ": " << pass << " passed, " << fail << " failed, " << inc << " inconclusive\n";
}

}  // namespace bgsys
