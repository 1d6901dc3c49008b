#include "qhorn/simplex.hpp"

#include <algorithm>

#include "qhorn/errors.hpp"

namespace qhorn {

std::optional<RationalVector> nonnegative_solution(const std::vector<RationalVector>& columns,
                                                   const RationalVector& rhs, std::size_t cell_cap) {
  const std::size_t m = rhs.size();
  const std::size_t n = columns.size();
  for (const auto& c : columns)
    if (c.size() != m) throw InputError("LP column has the wrong length");
  // tableau: n structural columns, m artificial columns, rhs
  const std::size_t width = n + m + 1;
  if (m != 0 && width > cell_cap / m)
    throw ResourceError("LP tableau of " + std::to_string(m) + "x" + std::to_string(width) +
                        " exceeds the cell cap of " + std::to_string(cell_cap));

  std::vector<RationalVector> t(m, RationalVector(width, Rational(0)));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = rhs[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-columns[j][i]) : columns[j][i];
    t[i][n + i] = 1;
    t[i][width - 1] = flip ? Rational(-rhs[i]) : rhs[i];
    basis[i] = n + i;
  }
  // reduced costs for minimising the sum of artificials
  RationalVector cost(width, Rational(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) cost[j] -= t[i][j];
  for (std::size_t i = 0; i < m; ++i) cost[width - 1] -= t[i][width - 1];

  while (true) {
    // Bland: lowest-index improving column; artificials never re-enter
    std::size_t enter = n;
    for (std::size_t j = 0; j < n; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == n) break;

    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][width - 1] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    // phase one is bounded below by zero, so some row always qualifies
    if (leave == m) throw std::logic_error("unbounded phase-one LP");

    const Rational pivot = t[leave][enter];
    for (auto& v : t[leave]) v /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      const Rational factor = t[i][enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) t[i][j] -= factor * t[leave][j];
    }
    if (cost[enter] != 0) {
      const Rational factor = cost[enter];
      for (std::size_t j = 0; j < width; ++j)
        if (t[leave][j] != 0) cost[j] -= factor * t[leave][j];
    }
    basis[leave] = enter;
  }

  if (cost[width - 1] != 0) return std::nullopt;  // objective is -cost[rhs]
  RationalVector y(n, Rational(0));
  for (std::size_t i = 0; i < m; ++i) {
    if (basis[i] < n) {
      y[basis[i]] = t[i][width - 1];
    } else if (t[i][width - 1] != 0) {
      return std::nullopt;
    }
  }
  return y;
}

bool implied_by(const RationalVector& target, const std::vector<RationalVector>& inequalities,
                const std::vector<RationalVector>& equalities, std::size_t cell_cap) {
  std::vector<RationalVector> columns = inequalities;
  for (const auto& e : equalities) {
    columns.push_back(e);
    RationalVector neg(e.size());
    std::transform(e.begin(), e.end(), neg.begin(), [](const Rational& v) { return Rational(-v); });
    columns.push_back(std::move(neg));
  }
  return nonnegative_solution(columns, target, cell_cap).has_value();
}

std::vector<std::size_t> irredundant_subset(const std::vector<RationalVector>& inequalities,
                                            const std::vector<RationalVector>& equalities,
                                            const std::vector<RationalVector>& side_constraints,
                                            std::size_t cell_cap) {
  std::vector<char> alive(inequalities.size(), 1);
  for (std::size_t i = 0; i < inequalities.size(); ++i) {
    const auto& a = inequalities[i];
    if (std::all_of(a.begin(), a.end(), [](const Rational& v) { return v == 0; })) alive[i] = 0;
    for (std::size_t j = 0; j < i && alive[i]; ++j)
      if (alive[j] && inequalities[j] == a) alive[i] = 0;
  }
  for (std::size_t i = 0; i < inequalities.size(); ++i) {
    if (!alive[i]) continue;
    std::vector<RationalVector> others = side_constraints;
    for (std::size_t j = 0; j < inequalities.size(); ++j)
      if (j != i && alive[j]) others.push_back(inequalities[j]);
    if (implied_by(inequalities[i], others, equalities, cell_cap)) alive[i] = 0;
  }
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < inequalities.size(); ++i)
    if (alive[i]) kept.push_back(i);
  return kept;
}

}  // namespace qhorn
