#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "qhorn/weight.hpp"

namespace qhorn {

inline constexpr std::size_t kDefaultLpCellCap = std::size_t{1} << 22;

using RationalVector = std::vector<Rational>;

/**
 * Phase-one simplex over exact rationals with Bland's rule. Finds y >= 0
 * with `columns` * y = rhs, where columns[j] is the j-th column. Returns
 * nullopt when no such y exists. Throws ResourceError when the tableau
 * would exceed `cell_cap` entries.
 */
std::optional<RationalVector> nonnegative_solution(const std::vector<RationalVector>& columns,
                                                   const RationalVector& rhs,
                                                   std::size_t cell_cap = kDefaultLpCellCap);

/**
 * Whether c . x <= 0 holds on { x : a . x <= 0 for a in `inequalities`,
 * e . x = 0 for e in `equalities` }. By Farkas this is c in
 * cone(inequalities) + span(equalities).
 */
bool implied_by(const RationalVector& target, const std::vector<RationalVector>& inequalities,
                const std::vector<RationalVector>& equalities, std::size_t cell_cap = kDefaultLpCellCap);

/**
 * Indices of `inequalities` (all of the form a . x <= 0) left after removing,
 * in order, zero functionals, repeated functionals and every functional implied
 * by the ones still present together with `side_constraints` (also <= 0) and
 * `equalities`.
 */
std::vector<std::size_t> irredundant_subset(const std::vector<RationalVector>& inequalities,
                                            const std::vector<RationalVector>& equalities,
                                            const std::vector<RationalVector>& side_constraints,
                                            std::size_t cell_cap = kDefaultLpCellCap);

}  // namespace qhorn
