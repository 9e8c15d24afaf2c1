// Internal term-vector helpers shared by the Groebner module sources.
#pragma once

#include <vector>

#include "tropcm/order.hpp"
#include "tropcm/polynomial.hpp"

namespace tropcm::detail {

using Terms = std::vector<Term>;

/// Terms of p sorted so that the leading term under order comes first.
Terms sorted_terms(const Polynomial& p, const MonomialOrder& order);

/// Reduces f by basis (each sorted under order, nonempty). With tail == false
/// only the leading term is reduced away.
Terms reduce_terms(Terms f, const std::vector<Terms>& basis, const MonomialOrder& order, bool tail);

/// Full reduction; inhomogeneous f under a non-well-order is reduced one
/// homogeneous component at a time.
Polynomial reduce_sorted(const Polynomial& f, const std::vector<Terms>& basis, const MonomialOrder& order);

}  // namespace tropcm::detail
