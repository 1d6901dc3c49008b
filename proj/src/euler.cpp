#include "qhorn/euler.hpp"

#include <algorithm>

#include "qhorn/errors.hpp"

namespace qhorn {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in addition");
  return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in subtraction");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow("integer overflow in multiplication");
  return r;
}

}  // namespace checked

namespace {

void require_size(const Quiver& q, std::size_t n, const char* what) {
  if (n != q.vertex_count())
    throw InputError(std::string(what) + " has " + std::to_string(n) + " entries, quiver has " +
                     std::to_string(q.vertex_count()) + " vertices");
}

}  // namespace

std::int64_t dim_hom_space(const Quiver& q, const DimensionVector& alpha, const DimensionVector& beta) {
  require_size(q, alpha.size(), "dimension vector");
  require_size(q, beta.size(), "dimension vector");
  std::int64_t total = 0;
  for (const auto& a : q.arrows())
    total = checked::add(total, checked::mul(alpha[a.source], beta[a.target]));
  return total;
}

std::int64_t euler_form(const Quiver& q, const DimensionVector& alpha, const DimensionVector& beta) {
  require_size(q, alpha.size(), "dimension vector");
  require_size(q, beta.size(), "dimension vector");
  std::int64_t diag = 0;
  for (std::size_t x = 0; x < q.vertex_count(); ++x)
    diag = checked::add(diag, checked::mul(alpha[x], beta[x]));
  return checked::sub(diag, dim_hom_space(q, alpha, beta));
}

std::int64_t dim_compatible(const Quiver& q, const LabeledFamily& from, const LabeledFamily& to) {
  require_size(q, from.vertex_count(), "source family");
  require_size(q, to.vertex_count(), "target family");
  std::int64_t total = 0;
  for (std::size_t x = 0; x < q.vertex_count(); ++x) {
    const auto& targets = to.at(x);
    for (int k : from.at(x)) {
      // number of target labels j <= k
      auto allowed = std::upper_bound(targets.begin(), targets.end(), k) - targets.begin();
      total = checked::add(total, allowed);
    }
  }
  return total;
}

std::int64_t eul(const Quiver& q, const LabeledFamily& from, const LabeledFamily& to) {
  return checked::sub(dim_compatible(q, from, to), dim_hom_space(q, from.dims(), to.dims()));
}

std::int64_t eul_subquotient(const Quiver& q, const LabeledFamily& ambient, const Subfamily& sub) {
  auto parts = subquotient(ambient, sub);
  return eul(q, parts.sub, parts.quot);
}

Weight kappa(const Quiver& q, const LabeledFamily& ambient, const Subfamily& sub) {
  require_size(q, ambient.vertex_count(), "family");
  require_subfamily(ambient, sub);
  Weight w = Weight::zero(ambient);
  std::vector<std::vector<char>> in_sub(ambient.vertex_count());
  for (std::size_t x = 0; x < ambient.vertex_count(); ++x) {
    const auto& l = ambient.at(x);
    in_sub[x].assign(l.size(), 0);
    for (std::size_t i = 0; i < l.size(); ++i)
      in_sub[x][i] = std::binary_search(sub.labels[x].begin(), sub.labels[x].end(), l[i]);
  }
  // positive roots e_i - e_j (i < j) pairing negatively with H(K)
  for (std::size_t x = 0; x < ambient.vertex_count(); ++x) {
    const auto n = in_sub[x].size();
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (!in_sub[x][i] && in_sub[x][j]) {
          w.values[x][i] += 1;
          w.values[x][j] -= 1;
        }
  }
  // weights e^y_j - e^x_i of Hom(V_x, V_y) pairing negatively with H(K)
  for (const auto& a : q.arrows()) {
    const auto& src = in_sub[a.source];
    const auto& dst = in_sub[a.target];
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (!src[i]) continue;
      for (std::size_t j = 0; j < dst.size(); ++j) {
        if (dst[j]) continue;
        w.values[a.target][j] -= 1;
        w.values[a.source][i] += 1;
      }
    }
  }
  return w;
}

}  // namespace qhorn
