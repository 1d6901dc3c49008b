#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "qhorn/quiver.hpp"

namespace qhorn {

struct SweepBounds {
  int max_vertices = 3;
  int max_arrows = 3;
  int max_dim = 3;
};

/// "V,A,N" -> bounds. Throws InputError.
SweepBounds parse_sweep_bounds(std::string_view text);

/**
 * Every acyclic quiver on vertices v1..vk (1 <= k <= max_vertices) with at
 * most max_arrows arrows, parallel arrows included. Arrow lists are sorted,
 * so each arrow multiset appears once.
 */
std::vector<Quiver> enumerate_quivers(int max_vertices, int max_arrows);

/// All dimension vectors with entries in [0, max_dim], first vertex fastest.
std::vector<DimensionVector> enumerate_dimension_vectors(std::size_t vertices, int max_dim);

/// "v1->v2,v2->v3" (or "-" without arrows).
std::string describe_arrows(const Quiver& q);
std::string describe_dims(const DimensionVector& dims);

}  // namespace qhorn
