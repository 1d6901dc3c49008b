#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>
#include <string_view>
#include <vector>

#include "qhorn/quiver.hpp"

namespace qhorn {

using Rational = boost::multiprecision::mpq_rational;

/// Parses "3", "-2" or "5/7". Throws InputError.
Rational parse_rational(std::string_view token);

/**
 * Coordinates against the dual basis of the diagonal h_{x,j}: values[x][i] is
 * the coefficient at (x, i-th ascending label of the ambient family).
 */
struct Weight {
  std::vector<std::vector<Rational>> values;

  static Weight zero(const LabeledFamily& ambient);
  Rational total() const;
  /// Restriction to the coordinates of `sub` (labels of `ambient`), aligned to sub's labels.
  Weight restrict_to(const LabeledFamily& ambient, const Subfamily& sub) const;
  /// <H(sub), weight> = sum over (x, k in sub_x) of the coefficient at (x, k).
  Rational pair_with(const LabeledFamily& ambient, const Subfamily& sub) const;

  friend bool operator==(const Weight&, const Weight&) = default;
};

/// Per vertex, values weakly decrease along ascending labels.
class DominantWeight {
 public:
  /// Throws InputError on wrong shape or a dominance violation.
  DominantWeight(const LabeledFamily& ambient, Weight weight);

  const Weight& weight() const noexcept { return weight_; }
  const std::vector<Rational>& at(std::size_t x) const { return weight_.values.at(x); }

 private:
  Weight weight_;
};

bool is_dominant(const Weight& w);

/// Lines "weight <vertex> v1 ... vk" aligned to ascending labels; missing vertices must have no labels.
Weight parse_weight_file(const Quiver& quiver, const LabeledFamily& ambient, std::string_view text);

}  // namespace qhorn
