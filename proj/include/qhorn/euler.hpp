#pragma once

#include <cstdint>

#include "qhorn/quiver.hpp"
#include "qhorn/weight.hpp"

namespace qhorn {

/// sum_x a_x b_x - sum_{a: x->y} a_x b_y.
std::int64_t euler_form(const Quiver& q, const DimensionVector& alpha, const DimensionVector& beta);

/// dim of the direct sum over arrows a: x->y of Hom(C^{alpha_x}, C^{beta_y}).
std::int64_t dim_hom_space(const Quiver& q, const DimensionVector& alpha, const DimensionVector& beta);

/**
 * Dimension of the maps Phi with Phi_x(F_x(t)) in G_x(t) for every step t:
 * an elementary map e_k -> e_j is allowed iff j <= k. Both families must
 * live on a common label axis.
 */
std::int64_t dim_compatible(const Quiver& q, const LabeledFamily& from, const LabeledFamily& to);

/// Filtered Euler number: dim_compatible - dim_hom_space.
std::int64_t eul(const Quiver& q, const LabeledFamily& from, const LabeledFamily& to);

/// eul(K, J/K) with the inherited filtrations.
std::int64_t eul_subquotient(const Quiver& q, const LabeledFamily& ambient, const Subfamily& sub);

/**
 * Trace difference between the negative root spaces and the negative weight
 * spaces of H(K): sum over vertices of (e_i - e_j) for i < j, i not in K_x,
 * j in K_x, minus sum over arrows x->y of (e^y_j - e^x_i) for i in K_x,
 * j in L_y \ K_y. Aligned to the ambient labels.
 */
Weight kappa(const Quiver& q, const LabeledFamily& ambient, const Subfamily& sub);

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace qhorn
