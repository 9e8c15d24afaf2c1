// The cones C_A = {w : w_i = min(w) for i outside A} and the generic fan.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "tropcm/ideal.hpp"
#include "tropcm/weight.hpp"

namespace tropcm {

/// C_A in Q^n, kept combinatorially as the subset A (0-based).
class ConeCA {
 public:
  ConeCA(IndexSet a, std::size_t n);

  const IndexSet& A() const { return a_; }
  std::size_t ambient_dim() const { return n_; }
  IndexSet complement() const { return a_.complement(n_); }
  /// |A| + 1
  std::size_t dimension() const { return a_.size() + 1; }
  /// True when this cone is a face of o (same n, A contained in o's A).
  bool is_face_of(const ConeCA& o) const { return n_ == o.n_ && a_.subset_of(o.a_); }

  bool operator==(const ConeCA& o) const = default;
  std::string to_string() const { return "C_{" + a_.to_string() + "}"; }

 private:
  IndexSet a_;
  std::size_t n_;
};

/// All C_A with |A^c| = n - d + 1 + codim, ordered by A lexicographically.
/// Requires 1 <= d <= n and 0 <= codim <= d - 1.
std::vector<ConeCA> enumerate_generic_fan(std::size_t n, std::size_t d, std::size_t codim);

/// Closed: w_i = min(w) for all i outside A. Interior additionally asks
/// w_j > min(w) for j in A. For A = [n] the cone is all of Q^n and every w
/// is interior.
bool cone_contains(const ConeCA& cone, const WeightVector& w, bool interior);

/// True when at least n - d + 1 coordinates of w attain min(w).
bool in_fan_support(const WeightVector& w, std::size_t d);

/// Deterministic interior point with min(w) = 0 and entries in {0, ..., 6}.
WeightVector sample_interior(const ConeCA& cone, std::uint64_t seed);

/// 1 on A, 0 elsewhere.
WeightVector epsilon_vector(const IndexSet& a, std::size_t n);

/// in_w(I) contains no monomial. The unit ideal is never a member.
bool trop_membership(const WeightVector& w, const Ideal& ideal);

/// in_u(I) == in_w(I), compared through reduced grevlex bases.
bool groebner_cone_equal(const WeightVector& u, const WeightVector& w, const Ideal& ideal);

/// One row of a fan report.
struct FanConeRecord {
  ConeCA cone;
  WeightVector sample_w;
  std::vector<std::string> in_w_gb;
  bool monomial_free = false;
  std::optional<std::string> prime_verdict;
};

struct FanReport {
  std::size_t n = 0;
  std::size_t d = 0;
  std::size_t codim = 0;
  std::vector<FanConeRecord> cones;

  nlohmann::json to_json() const;
};

/// One sampled interior point per cone of the requested stratum.
FanReport fan_report(const Ideal& ideal, std::size_t d, std::size_t codim, std::uint64_t seed,
                     unsigned jobs = 1);

}  // namespace tropcm
