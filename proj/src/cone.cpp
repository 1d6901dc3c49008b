#include "qhorn/cone.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "qhorn/errors.hpp"
#include "qhorn/euler.hpp"

namespace qhorn {

namespace {

// Flattened weight in packed-bit order.
std::vector<Rational> flatten(const Weight& w) {
  std::vector<Rational> out;
  for (const auto& v : w.values) out.insert(out.end(), v.begin(), v.end());
  return out;
}

void require_shape(const LabeledFamily& family, const Weight& w) {
  if (w.values.size() != family.vertex_count())
    throw InputError("weight does not match the family's vertices");
  for (std::size_t x = 0; x < family.vertex_count(); ++x)
    if (w.values[x].size() != family.at(x).size())
      throw InputError("weight support does not match the family's labels");
}

Rational pair_mask(const std::vector<Rational>& flat, std::uint64_t mask) {
  Rational sum = 0;
  for (; mask; mask &= mask - 1) sum += flat[static_cast<std::size_t>(std::countr_zero(mask))];
  return sum;
}

}  // namespace

ConeSystem cone_inequalities(HornEngine& engine, const LabeledFamily& family, bool essential_only) {
  auto entry = engine.entry(family.dims());
  ConeSystem system{family, {}};
  auto add = [&](const HornMember& m) {
    const bool trivial = m.mask == 0 || m.mask == entry->shape.full();
    system.inequalities.push_back({entry->shape.to_subfamily(m.mask, family), m.eul, trivial});
  };
  if (essential_only) {
    for (auto idx : entry->essential) add(entry->members[idx]);
  } else {
    for (const auto& m : entry->members) add(m);
  }
  return system;
}

RationalVector functional(const LabeledFamily& ambient, const Subfamily& sub) {
  require_subfamily(ambient, sub);
  RationalVector out;
  for (std::size_t x = 0; x < ambient.vertex_count(); ++x)
    for (int label : ambient.at(x))
      out.emplace_back(std::binary_search(sub.labels[x].begin(), sub.labels[x].end(), label) ? 1 : 0);
  return out;
}

Membership cone_membership(HornEngine& engine, const LabeledFamily& family, const DominantWeight& weight) {
  require_shape(family, weight.weight());
  Membership result;
  result.trace_zero = weight.weight().total() == 0;
  if (!result.trace_zero) return result;
  const auto flat = flatten(weight.weight());
  auto entry = engine.entry(family.dims());
  for (auto idx : entry->essential) {
    const auto mask = entry->members[idx].mask;
    auto value = pair_mask(flat, mask);
    if (value > 0) {
      result.violated = entry->shape.to_subfamily(mask, family);
      result.violation = value;
      return result;
    }
  }
  result.member = true;
  return result;
}

bool cone_contains(HornEngine& engine, const LabeledFamily& family, const DominantWeight& weight) {
  return cone_membership(engine, family, weight).member;
}

SigmaSystem sigma_inequalities(HornEngine& engine, const LabeledFamily& family) {
  auto entry = engine.entry(family.dims());
  SigmaSystem system{family.dims(), {}};
  std::set<DimensionVector> seen;
  for (const auto& m : entry->members) {
    auto alpha = entry->shape.dims_of(m.mask);
    if (seen.insert(alpha).second) system.alphas.push_back(std::move(alpha));
  }
  return system;
}

bool sigma_contains(HornEngine& engine, const LabeledFamily& family, const SigmaVector& sigma) {
  if (sigma.values.size() != family.vertex_count())
    throw InputError("sigma must give one value per vertex");
  auto system = sigma_inequalities(engine, family);
  auto dot = [&](const DimensionVector& alpha) {
    Rational sum = 0;
    for (std::size_t x = 0; x < alpha.size(); ++x) sum += sigma.values[x] * alpha[x];
    return sum;
  };
  if (dot(system.total) != 0) return false;
  return std::all_of(system.alphas.begin(), system.alphas.end(),
                     [&](const DimensionVector& a) { return dot(a) <= 0; });
}

Classification classify_element(HornEngine& engine, const LabeledFamily& family, const Subfamily& sub) {
  const auto& q = engine.quiver();
  require_subfamily(family, sub);
  Classification c;
  c.eul = eul_subquotient(q, family, sub);
  c.covering = engine.is_q_intersecting(family, sub);
  c.ressayre = c.covering && c.eul == 0;
  if (c.eul == 0) {
    const auto parts = subquotient(family, sub);
    const auto k = kappa(q, family, sub);
    const Subfamily rest{parts.quot.labels()};
    // kappa splits along the centralizer GL(K) x GL(J \ K)
    DominantWeight on_sub(parts.sub, k.restrict_to(family, sub));
    DominantWeight on_rest(parts.quot, k.restrict_to(family, rest));
    c.horn_element = cone_contains(engine, parts.sub, on_sub) && cone_contains(engine, parts.quot, on_rest);
  }
  return c;
}

ConeSystem prune_redundant(const ConeSystem& system, std::size_t cell_cap) {
  const auto& ambient = system.ambient;
  std::vector<RationalVector> rows;
  for (const auto& ineq : system.inequalities) rows.push_back(functional(ambient, ineq.sub));

  const auto width = static_cast<std::size_t>(ambient.total_size());
  std::vector<RationalVector> equalities{RationalVector(width, Rational(1))};
  std::vector<RationalVector> dominance;
  std::size_t offset = 0;
  for (std::size_t x = 0; x < ambient.vertex_count(); ++x) {
    const auto n = ambient.at(x).size();
    // lambda(i+1) - lambda(i) <= 0
    for (std::size_t i = 0; i + 1 < n; ++i) {
      RationalVector d(width, Rational(0));
      d[offset + i + 1] = 1;
      d[offset + i] = -1;
      dominance.push_back(std::move(d));
    }
    offset += n;
  }

  ConeSystem pruned{ambient, {}};
  for (auto idx : irredundant_subset(rows, equalities, dominance, cell_cap))
    pruned.inequalities.push_back(system.inequalities[idx]);
  return pruned;
}

std::string format_equality_line() { return "EQ\tsum[all] = 0"; }

std::string format_inequality_line(const Quiver& q, const Inequality& ineq) {
  std::string terms;
  for (std::size_t x = 0; x < ineq.sub.labels.size(); ++x)
    for (int label : ineq.sub.labels[x]) {
      if (!terms.empty()) terms += ',';
      terms += q.name(x) + ":" + std::to_string(label);
    }
  std::string line = "K\t" + format_subfamily(q, ineq.sub) + "\teul=" + std::to_string(ineq.eul) + "\tsum[" +
                     terms + "] <= 0";
  if (ineq.trivial) line += "\ttrivial";
  return line;
}

namespace {

std::string weighted_terms(const Quiver& q, const DimensionVector& alpha) {
  std::string terms;
  for (std::size_t x = 0; x < alpha.size(); ++x) {
    if (alpha[x] == 0) continue;
    if (!terms.empty()) terms += ',';
    terms += std::to_string(alpha[x]) + "*" + q.name(x);
  }
  return terms;
}

std::string alpha_literal(const Quiver& q, const DimensionVector& alpha) {
  std::string out;
  for (std::size_t x = 0; x < alpha.size(); ++x) {
    if (x) out += ',';
    out += q.name(x) + "=" + std::to_string(alpha[x]);
  }
  return out;
}

}  // namespace

std::string format_sigma_equality_line(const Quiver& q, const SigmaSystem& system) {
  return "EQ\tsum[" + weighted_terms(q, system.total) + "] = 0";
}

std::string format_sigma_line(const Quiver& q, const DimensionVector& alpha) {
  return "ALPHA\t" + alpha_literal(q, alpha) + "\tsum[" + weighted_terms(q, alpha) + "] <= 0";
}

}  // namespace qhorn
