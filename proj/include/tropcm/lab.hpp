// Executable checks of the structural statements on concrete instances.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropcm/fan.hpp"
#include "tropcm/linalg.hpp"
#include "tropcm/groebner.hpp"
#include "tropcm/weight.hpp"

namespace tropcm {

enum class Verdict { pass, fail, undetermined, hypothesis_not_met };
std::string to_string(Verdict v);

/// One checked claim. Fail verdicts carry a witness in evidence["witness"].
struct VerificationReport {
  std::string claim;
  nlohmann::json params = nlohmann::json::object();
  Verdict verdict = Verdict::undetermined;
  nlohmann::json evidence = nlohmann::json::object();

  bool passed() const { return verdict == Verdict::pass; }
  nlohmann::json to_json() const;
};

enum class PrimeVerdict { prime, not_prime, undetermined };
std::string to_string(PrimeVerdict v);

struct PrimenessCertificate {
  /// "linear", "monomial", "monomial-factor", "principal-quadric-rank",
  /// "small-field-factor-search", "unit"
  std::string method;
  nlohmann::json data = nlohmann::json::object();
};

struct PrimenessResult {
  PrimeVerdict verdict = PrimeVerdict::undetermined;
  std::optional<PrimenessCertificate> certificate;
  std::string note;

  nlohmann::json to_json() const;
};

/// Certificate-based primeness over the algebraic closure. Linear generators
/// are eliminated first; the remaining ideal is then matched against the
/// menu (zero, monomial, monomial factor, principal quadric rank, linear
/// factor search for principal forms of degree <= 3 in <= 4 variables).
PrimenessResult primeness_check(const Ideal& ideal);

/// f / g when g divides f exactly.
std::optional<Polynomial> divide_exact(const Polynomial& f, const Polynomial& g);

/// Symmetric matrix of a quadratic form (entries q_ii on the diagonal and
/// q_ij / 2 off it). Requires characteristic != 2.
Matrix quadric_matrix(const Polynomial& q);

VerificationReport verify_initial_formula(const Ideal& ideal, const IndexSet& a, const WeightVector& w);
VerificationReport verify_gr_presentation(const Ideal& ideal, const IndexSet& a);
VerificationReport verify_quasival_decomposition(const Ideal& ideal, const IndexSet& a, const WeightVector& w,
                                                 std::int64_t maxdeg, std::size_t samples, std::uint64_t seed);
VerificationReport verify_iterated_initial(const Ideal& ideal, const IndexSet& a, std::size_t i);
VerificationReport verify_weight_sum(const Ideal& ideal, const WeightVector& u, const WeightVector& w,
                                     std::int64_t maxdeg = 4);
/// trop_membership(eps_A, I) and v_{eps_A}(x_i) == (eps_A)_i for every i.
VerificationReport verify_epsilon_facts(const Ideal& ideal, const IndexSet& a);
VerificationReport radicality_spot_check(const Ideal& ideal, std::size_t samples, unsigned powmax,
                                         std::uint64_t seed);
VerificationReport well_poised_check(const Ideal& ideal, std::int64_t d, std::size_t samples_per_cone,
                                     std::uint64_t seed);
VerificationReport cm_fan_audit(const Ideal& ideal, std::size_t samples_per_cone, std::uint64_t seed);

/// Claim keys accepted by run_claims, in report order.
const std::vector<std::string>& claim_keys();

struct SuiteConfig {
  std::uint64_t seed = 42;
  std::int64_t maxdeg = 4;
  std::size_t samples = 50;
  std::size_t samples_per_cone = 3;
  unsigned powmax = 3;
  unsigned jobs = 1;
  /// Optional explicit parameters; when absent each claim enumerates its own.
  std::optional<IndexSet> a;
  std::optional<WeightVector> w;
  std::optional<WeightVector> u;
  std::optional<std::size_t> i;
};

/// Runs one claim ("all" runs every key) and returns the reports sorted by
/// (claim, params). Throws std::invalid_argument on an unknown key.
std::vector<VerificationReport> run_claims(const Ideal& ideal, const std::string& claim, const SuiteConfig& config);

/// {run_id, seed, field, instance, config, claims}. run_id is a hash of the
/// other fields, so identical runs produce identical bytes.
nlohmann::json run_report(const Ideal& ideal, const std::vector<VerificationReport>& reports,
                          const nlohmann::json& config);

/// 1 when any report failed, else 0.
int exit_status(const std::vector<VerificationReport>& reports);

}  // namespace tropcm
