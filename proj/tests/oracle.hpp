// Test-only oracles that avoid the Buchberger engine: Macaulay matrices and
// plain Gaussian elimination over the coefficient field.
#pragma once

#include <algorithm>
#include <map>
#include <vector>

#include "tropcm/groebner.hpp"
#include "tropcm/weight.hpp"

namespace oracle {

using namespace tropcm;

using Row = std::vector<Scalar>;

/// Row echelon form (reduced) of rows; zero rows dropped.
inline std::vector<Row> echelon(std::vector<Row> rows, std::size_t cols, const Field& field) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    const Scalar inv = rows[r][c].inverse();
    for (auto& x : rows[r]) x *= inv;
    for (std::size_t q = 0; q < rows.size(); ++q) {
      if (q == r || rows[q][c].is_zero()) continue;
      const Scalar f = rows[q][c];
      for (std::size_t k = 0; k < cols; ++k) rows[q][k] -= f * rows[r][k];
    }
    ++r;
  }
  rows.resize(r);
  (void)field;
  return rows;
}

/// Degree-d monomials ranked for the w-refined order: weight ascending, then
/// grevlex descending. Column 0 is the leading position.
inline std::vector<Monomial> ranked_columns(std::size_t n, std::int64_t d, const WeightVector& w) {
  auto cols = monomials_of_degree(n, d);
  std::stable_sort(cols.begin(), cols.end(), [&](const Monomial& a, const Monomial& b) {
    const auto wa = weight_value(w, a);
    const auto wb = weight_value(w, b);
    if (wa != wb) return wa < wb;
    return grevlex_compare(a, b) > 0;
  });
  return cols;
}

inline std::vector<Row> slice_rows(const std::vector<Polynomial>& gens, std::int64_t d,
                                   const std::vector<Monomial>& cols, const Field& field) {
  std::map<Monomial, std::size_t> index;
  for (std::size_t k = 0; k < cols.size(); ++k) index[cols[k]] = k;
  const std::size_t n = cols.empty() ? 0 : cols.front().size();
  std::vector<Row> rows;
  for (const auto& g : gens) {
    const auto e = g.degree();
    if (e > d) continue;
    for (const auto& m : monomials_of_degree(n, d - e)) {
      Row row(cols.size(), field.zero());
      for (const auto& t : g.terms()) row[index.at(t.mono * m)] = t.coeff;
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

/// Degree-d slice of in_w(I) computed from the Macaulay matrix of the
/// generators: echelonize with columns in w-ranked order, keep the
/// minimal-weight part of each echelon row, echelonize again.
inline std::vector<Row> initial_slice(const Ideal& ideal, const WeightVector& w, std::int64_t d) {
  const auto& field = ideal.ring()->field();
  const auto cols = ranked_columns(ideal.num_vars(), d, w);
  auto rows = echelon(slice_rows(ideal.generators(), d, cols, field), cols.size(), field);
  std::vector<Row> leading;
  for (auto& row : rows) {
    std::size_t pivot = 0;
    while (row[pivot].is_zero()) ++pivot;
    const auto wmin = weight_value(w, cols[pivot]);
    for (std::size_t k = pivot; k < cols.size(); ++k) {
      if (weight_value(w, cols[k]) != wmin) row[k] = field.zero();
    }
    leading.push_back(std::move(row));
  }
  return echelon(std::move(leading), cols.size(), field);
}

/// Degree-d slice of the ideal generated by gens, in the same column order.
inline std::vector<Row> span_slice(const Ideal& ideal, const WeightVector& w, std::int64_t d) {
  const auto& field = ideal.ring()->field();
  const auto cols = ranked_columns(ideal.num_vars(), d, w);
  return echelon(slice_rows(ideal.generators(), d, cols, field), cols.size(), field);
}

/// Dimension of the degree-d slice of I.
inline std::size_t slice_dimension(const Ideal& ideal, std::int64_t d) {
  return span_slice(ideal, WeightVector::zero(ideal.num_vars()), d).size();
}

/// True when the monomial lies in the degree-deg(m) slice of I.
inline bool slice_contains_monomial(const Ideal& ideal, const Monomial& m) {
  const auto& field = ideal.ring()->field();
  const auto w = WeightVector::zero(ideal.num_vars());
  const auto cols = ranked_columns(ideal.num_vars(), m.degree(), w);
  auto rows = slice_rows(ideal.generators(), m.degree(), cols, field);
  const auto base = echelon(rows, cols.size(), field).size();
  Row extra(cols.size(), field.zero());
  for (std::size_t k = 0; k < cols.size(); ++k) {
    if (cols[k] == m) extra[k] = field.one();
  }
  rows.push_back(std::move(extra));
  return echelon(std::move(rows), cols.size(), field).size() == base;
}

}  // namespace oracle
