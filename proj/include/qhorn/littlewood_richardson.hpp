#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qhorn/horn.hpp"

namespace qhorn {

/// Weakly decreasing nonnegative parts. Trailing zeros are dropped on construction.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // throws InputError

  const std::vector<int>& parts() const noexcept { return parts_; }
  std::size_t rows() const noexcept { return parts_.size(); }
  int size() const;
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  bool contains(const Partition& other) const;  // Young diagram inclusion

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// "2,1,0" -> (2,1). Empty string is the empty partition.
Partition parse_partition(std::string_view text);
std::string format_partition(const Partition& p);

/// Partitions of `size` inside the Young diagram of `box`.
std::vector<Partition> partitions_inside(const Partition& box, int size);

/// Number of LR tableaux of shape nu/lambda and content mu.
std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

/// Every nu with a nonzero coefficient, in decreasing lexicographic order.
std::vector<std::pair<Partition, std::uint64_t>> lr_expand(const Partition& lambda, const Partition& mu);

/// Multiplicity of V_mu in the tensor product of the V_lambda_i; s >= 1.
std::uint64_t multi_lr(std::span<const Partition> lambdas, const Partition& mu);

/// Quiver x1 .. xs -> y.
Quiver star_quiver(int s);
LabeledFamily star_family(int s, int n);

struct StarCheck {
  std::uint64_t multiplicity = 0;
  bool cone_member = false;
  bool agree() const noexcept { return (multiplicity > 0) == cone_member; }
};

/**
 * Compares multi_lr(lambdas; mu) > 0 with cone membership on the star quiver,
 * with lambda_{x_i} = lambdas[i] and lambda_y = (-mu_n, ..., -mu_1).
 * `engine` must be built on star_quiver(lambdas.size()).
 */
StarCheck star_cone_check(HornEngine& engine, int n, std::span<const Partition> lambdas, const Partition& mu);
StarCheck star_cone_check(int n, std::span<const Partition> lambdas, const Partition& mu);

}  // namespace qhorn
