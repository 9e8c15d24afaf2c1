#include <algorithm>
#include <cstdio>

#include "tropcm/lab.hpp"

namespace tropcm {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::pass:
      return "pass";
    case Verdict::fail:
      return "fail";
    case Verdict::undetermined:
      return "undetermined";
    case Verdict::hypothesis_not_met:
      return "hypothesis not met";
  }
  return "undetermined";
}

nlohmann::json VerificationReport::to_json() const {
  return {{"claim", claim}, {"params", params}, {"verdict", to_string(verdict)}, {"evidence", evidence}};
}

nlohmann::json run_report(const Ideal& ideal, const std::vector<VerificationReport>& reports,
                          const nlohmann::json& config) {
  nlohmann::json gens = nlohmann::json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  nlohmann::json claims = nlohmann::json::array();
  for (const auto& r : reports) claims.push_back(r.to_json());

  nlohmann::json out;
  out["seed"] = config.value("seed", nlohmann::json(nullptr));
  out["field"] = ideal.ring()->field().to_string();
  out["instance"] = {{"vars", ideal.ring()->names()}, {"generators", gens}};
  out["config"] = config;
  out["claims"] = claims;

  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : out.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  out["run_id"] = buf;
  return out;
}

int exit_status(const std::vector<VerificationReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.verdict == Verdict::fail; })
             ? 1
             : 0;
}

}  // namespace tropcm
