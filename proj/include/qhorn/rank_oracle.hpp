#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "qhorn/horn.hpp"
#include "qhorn/prime_field.hpp"
#include "qhorn/quiver.hpp"

namespace qhorn {

/// One matrix per arrow a: x -> y, of size n_y x n_x (columns indexed by source labels).
struct ArrowMaps {
  std::vector<PrimeFieldMatrix> maps;
};

/// Uniformly random representation of the quiver on the given dimension vector.
ArrowMaps random_representation(const Quiver& q, const DimensionVector& dims, const PrimeField& field,
                                std::mt19937_64& rng);
ArrowMaps zero_representation(const Quiver& q, const DimensionVector& dims, const PrimeField& field);

/// Elementary compatible map e_k -> e_j at a vertex (j <= k).
struct DeltaColumn {
  std::size_t vertex;
  int source_label;
  int target_label;
};

/// Coordinate of Hom(V_x, W_y) for an arrow x -> y.
struct DeltaRow {
  std::size_t arrow;
  int source_label;
  int target_label;
};

struct DeltaAssembly {
  std::vector<DeltaColumn> columns;
  std::vector<DeltaRow> rows;
  PrimeFieldMatrix matrix;
};

/// Matrix of Phi -> Phi v - w Phi on the compatible maps from F_V to F_W.
DeltaAssembly build_delta(const Quiver& q, const LabeledFamily& from, const LabeledFamily& to,
                          const ArrowMaps& v, const ArrowMaps& w);

struct OracleConfig {
  int trials = 5;
  std::uint64_t seed = 0;
  PrimeField field{};
};

/// Generator for trial `trial`; depends only on (seed, trial).
std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial);

/**
 * Maximum rank of delta over `trials` random (v, w). Stops early once the
 * rank reaches min(rows, cols), which cannot be exceeded.
 */
std::int64_t generic_rank(const Quiver& q, const LabeledFamily& from, const LabeledFamily& to,
                          const OracleConfig& config);

struct ExtReport {
  std::int64_t rows = 0;
  std::int64_t cols = 0;
  std::int64_t rank = 0;
  std::int64_t ext_min = 0;  // rows - rank
  std::int64_t hom_min = 0;  // cols - rank
  std::int64_t eul = 0;      // cols - rows
};

ExtReport ext_min(const Quiver& q, const LabeledFamily& from, const LabeledFamily& to,
                  const OracleConfig& config);

/// Throws InputError unless eul(F_V, F_W) = 0.
bool det_P_nonzero(const Quiver& q, const LabeledFamily& from, const LabeledFamily& to,
                   const OracleConfig& config);

// --- theorem harness ---------------------------------------------------------

enum class HarnessMode { theo1, theo2, theo3 };

HarnessMode parse_harness_mode(const std::string& name);

struct HarnessBounds {
  int pairs = 40;      // theo2: random (F_V, F_W) pairs
  int max_dim = 3;     // theo2: labels per vertex
  int max_label = 6;   // theo2: labels drawn from 1..max_label
};

struct HarnessReport {
  std::vector<std::string> lines;
  std::size_t agreements = 0;
  std::size_t total = 0;

  bool all_agree() const noexcept { return agreements == total; }
  std::string summary() const;
};

/**
 * theo1: for every K in J, recursion membership vs ext_min(K, J/K) = 0.
 * theo2: random filtered pairs; ext = 0 forces eul(S, W) >= 0 on Horn(V), and
 *        nonnegativity on the essential part forces ext = 0.
 * theo3: eul(K, J/K) >= 0 plus every essential proper U in Horn(K) being
 *        Q-intersecting in J (by the oracle) forces K to be Q-intersecting.
 */
HarnessReport theorem_harness(HornEngine& engine, const LabeledFamily& family, HarnessMode mode,
                              const HarnessBounds& bounds, const OracleConfig& config);

}  // namespace qhorn
