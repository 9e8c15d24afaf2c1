// Seeded random coordinate changes and the dimension audit that stands in
// for "g is generic".
#pragma once

#include <cstdint>
#include <vector>

#include <json.hpp>

#include "tropcm/ideal.hpp"
#include "tropcm/linalg.hpp"

namespace tropcm {

/// Invertible n x n matrix g acting on variables by x_j -> sum_i g(j, i) x_i
/// (row j is the image of x_j).
class LinearChange {
 public:
  LinearChange(Matrix matrix, std::uint64_t seed, std::int64_t bound);
  static LinearChange identity(std::size_t n, const Field& field);

  const Matrix& matrix() const { return matrix_; }
  std::size_t size() const { return matrix_.rows(); }
  std::uint64_t seed() const { return seed_; }
  std::int64_t bound() const { return bound_; }

  /// Exact inverse (seed and bound are carried over).
  LinearChange inverse() const;
  nlohmann::json to_json() const;

 private:
  Matrix matrix_;
  std::uint64_t seed_;
  std::int64_t bound_;
};

/// Entries uniform in [-bound, bound] over Q, uniform in F_p otherwise;
/// resampled until invertible. Throws std::runtime_error if the retry cap is hit.
LinearChange random_gl(std::size_t n, std::uint64_t seed, std::int64_t bound, const Field& field);

/// g o J: every generator with x_j replaced by sum_i g(j, i) x_i.
Ideal apply_change(const LinearChange& g, const Ideal& ideal);

struct AuditCheck {
  IndexSet a;
  std::int64_t expected_dim = 0;
  /// -1 when I + <x_A> is the unit ideal.
  std::int64_t actual_dim = 0;
  bool pass = false;
  /// Set on supersets of a failing subset.
  bool implied_by_subset = false;
};

struct GenericityAudit {
  std::uint64_t seed = 0;
  std::int64_t bound = 0;
  std::int64_t d = 0;
  std::vector<AuditCheck> checks;

  bool passed() const;
  std::vector<AuditCheck> failures() const;
  nlohmann::json to_json() const;
};

/// Checks dim k[x]/(I + <x_i : i in A>) == d - |A| for the subsets A with
/// |A| <= max_a. When there are more than sample_limit such subsets (and
/// sample_limit > 0) a seeded sample of that many is checked instead.
GenericityAudit genericity_audit(const Ideal& ideal, std::int64_t d, std::size_t max_a,
                                 std::size_t sample_limit = 0, std::uint64_t seed = 0, unsigned jobs = 1);

struct GenericInstance {
  Ideal ideal;
  LinearChange change;
  GenericityAudit audit;
  /// Number of re-seeds needed (0 when the first draw passed).
  int reseeds = 0;
};

/// Draws g, applies it and audits the result with max_a = d - 1. On failure
/// it re-seeds with derive_seed(seed, attempt), at most kMaxReseeds times,
/// then throws std::runtime_error.
inline constexpr int kMaxReseeds = 5;
GenericInstance make_generic(const Ideal& ideal, std::uint64_t seed, std::int64_t bound,
                             std::size_t sample_limit = 0, unsigned jobs = 1);

}  // namespace tropcm
