#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qhorn/horn.hpp"
#include "qhorn/simplex.hpp"
#include "qhorn/weight.hpp"

namespace qhorn {

/// sum over (x, k in K_x) of lambda_x(k) <= 0.
struct Inequality {
  Subfamily sub;
  std::int64_t eul = 0;
  bool trivial = false;  // K empty or K = J
};

/// Inequalities together with the implicit trace-zero equality sum_{x,j} lambda_x(j) = 0.
struct ConeSystem {
  LabeledFamily ambient;
  std::vector<Inequality> inequalities;
};

ConeSystem cone_inequalities(HornEngine& engine, const LabeledFamily& family, bool essential_only);

/// Coefficient vector of an inequality, flattened vertex by vertex over ambient labels.
RationalVector functional(const LabeledFamily& ambient, const Subfamily& sub);

struct Membership {
  bool member = false;
  bool trace_zero = false;
  std::optional<Subfamily> violated;  // first violated essential inequality
  Rational violation = 0;             // its value
};

/// Throws InputError when the weight does not match the family.
Membership cone_membership(HornEngine& engine, const LabeledFamily& family, const DominantWeight& weight);
bool cone_contains(HornEngine& engine, const LabeledFamily& family, const DominantWeight& weight);

/// One coefficient per vertex; the weight sigma_x z_x.
struct SigmaVector {
  std::vector<Rational> values;
};

struct SigmaSystem {
  DimensionVector total;                // equality sum_x n_x sigma_x = 0
  std::vector<DimensionVector> alphas;  // sum_x alpha_x sigma_x <= 0, first-appearance order
};

SigmaSystem sigma_inequalities(HornEngine& engine, const LabeledFamily& family);
bool sigma_contains(HornEngine& engine, const LabeledFamily& family, const SigmaVector& sigma);

struct Classification {
  bool admissible = true;
  bool covering = false;
  bool ressayre = false;
  bool horn_element = false;
  std::int64_t eul = 0;
};

Classification classify_element(HornEngine& engine, const LabeledFamily& family, const Subfamily& sub);

/**
 * Drops every inequality implied by the others, the trace-zero equality and
 * per-vertex dominance, keeping the original order.
 */
ConeSystem prune_redundant(const ConeSystem& system, std::size_t cell_cap = kDefaultLpCellCap);

/// Record lines of the inequality output format.
std::string format_equality_line();
std::string format_inequality_line(const Quiver& q, const Inequality& ineq);
std::string format_sigma_equality_line(const Quiver& q, const SigmaSystem& system);
std::string format_sigma_line(const Quiver& q, const DimensionVector& alpha);

}  // namespace qhorn
