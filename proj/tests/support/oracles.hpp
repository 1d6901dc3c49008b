#pragma once

// Slow reference implementations used only by the tests. They work on plain
// label sets and never touch the packed representation of the library.

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "qhorn/littlewood_richardson.hpp"
#include "qhorn/quiver.hpp"

namespace oracle {

using LabelSets = std::vector<std::vector<int>>;

// Dimension of {Phi_x : Phi_x(F(t)) inside G(t) for every step t}, counted
// one matrix entry at a time: entry (j <- k) survives iff every step that
// contains k also contains j.
inline std::int64_t compatible_dim(const LabelSets& from, const LabelSets& to) {
  std::int64_t total = 0;
  for (std::size_t x = 0; x < from.size(); ++x) {
    int top = 0;
    for (int k : from[x]) top = std::max(top, k);
    for (int j : to[x]) top = std::max(top, j);
    for (int k : from[x])
      for (int j : to[x]) {
        bool ok = true;
        for (int t = 0; t <= top && ok; ++t) ok = !(k <= t) || j <= t;
        total += ok;
      }
  }
  return total;
}

inline std::int64_t hom_dim(const qhorn::Quiver& q, const LabelSets& from, const LabelSets& to) {
  std::int64_t total = 0;
  for (const auto& a : q.arrows())
    total += static_cast<std::int64_t>(from[a.source].size() * to[a.target].size());
  return total;
}

inline std::int64_t eul(const qhorn::Quiver& q, const LabelSets& from, const LabelSets& to) {
  return compatible_dim(from, to) - hom_dim(q, from, to);
}

inline LabelSets difference(const LabelSets& big, const LabelSets& small) {
  LabelSets out(big.size());
  for (std::size_t x = 0; x < big.size(); ++x)
    for (int l : big[x])
      if (std::find(small[x].begin(), small[x].end(), l) == small[x].end()) out[x].push_back(l);
  return out;
}

// All subfamilies of J as explicit label sets.
inline std::vector<LabelSets> subsets(const LabelSets& j) {
  std::vector<LabelSets> out{LabelSets(j.size())};
  for (std::size_t x = 0; x < j.size(); ++x) {
    std::vector<LabelSets> next;
    for (const auto& partial : out)
      for (std::uint32_t m = 0; m < (1u << j[x].size()); ++m) {
        auto s = partial;
        for (std::size_t i = 0; i < j[x].size(); ++i)
          if (m >> i & 1) s[x].push_back(j[x][i]);
        next.push_back(std::move(s));
      }
    out = std::move(next);
  }
  return out;
}

// Horn recursion evaluated literally on labels, without memoization and
// without relabeling: Horn(K) is recomputed with K's own labels.
class NaiveHorn {
 public:
  explicit NaiveHorn(const qhorn::Quiver& q) : q_(q) {}

  std::vector<LabelSets> horn(const LabelSets& j) {
    std::vector<LabelSets> out;
    for (const auto& k : subsets(j))
      if (member(j, k)) out.push_back(k);
    return out;
  }

  bool member(const LabelSets& j, const LabelSets& k) {
    if (k == j) return true;
    if (eul(q_, k, difference(j, k)) < 0) return false;
    for (const auto& l : horn(k)) {
      if (l == k || eul(q_, l, difference(k, l)) != 0) continue;
      if (eul(q_, l, difference(j, l)) < 0) return false;
    }
    return true;
  }

 private:
  const qhorn::Quiver& q_;
};

// --- Schur polynomial expansion --------------------------------------------

using Monomial = std::vector<int>;
using Polynomial = std::map<Monomial, std::int64_t>;

inline void ssyt_fill(const std::vector<int>& shape, int vars, std::size_t r, int c,
                      std::vector<std::vector<int>>& t, Monomial& mono, Polynomial& out) {
  if (r == shape.size()) {
    ++out[mono];
    return;
  }
  if (c == shape[r]) {
    ssyt_fill(shape, vars, r + 1, 0, t, mono, out);
    return;
  }
  int lo = 1;
  if (c > 0) lo = std::max(lo, t[r][static_cast<std::size_t>(c) - 1]);
  if (r > 0) lo = std::max(lo, t[r - 1][static_cast<std::size_t>(c)] + 1);
  for (int v = lo; v <= vars; ++v) {
    t[r][static_cast<std::size_t>(c)] = v;
    ++mono[static_cast<std::size_t>(v) - 1];
    ssyt_fill(shape, vars, r, c + 1, t, mono, out);
    --mono[static_cast<std::size_t>(v) - 1];
  }
}

// s_lambda(x_1..x_vars) from semistandard tableaux.
inline Polynomial schur(const qhorn::Partition& p, int vars) {
  Polynomial out;
  if (static_cast<int>(p.rows()) > vars) return out;
  std::vector<std::vector<int>> t;
  for (int part : p.parts()) t.emplace_back(static_cast<std::size_t>(part), 0);
  Monomial mono(static_cast<std::size_t>(vars), 0);
  ssyt_fill(p.parts(), vars, 0, 0, t, mono, out);
  return out;
}

inline Polynomial multiply(const Polynomial& a, const Polynomial& b) {
  Polynomial out;
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      Monomial m(ma.size());
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      out[m] += ca * cb;
    }
  for (auto it = out.begin(); it != out.end();)
    it = it->second == 0 ? out.erase(it) : std::next(it);
  return out;
}

// Decomposes a symmetric polynomial into Schur functions by repeatedly
// peeling off the lexicographically largest monomial.
inline std::map<qhorn::Partition, std::int64_t> schur_decompose(Polynomial poly, int vars) {
  std::map<qhorn::Partition, std::int64_t> out;
  while (!poly.empty()) {
    auto lead = std::prev(poly.end());
    auto coeff = lead->second;
    qhorn::Partition shape(lead->first);
    out[shape] += coeff;
    for (const auto& [m, c] : schur(shape, vars)) {
      poly[m] -= coeff * c;
      if (poly[m] == 0) poly.erase(m);
    }
  }
  return out;
}

inline std::int64_t schur_lr(const qhorn::Partition& a, const qhorn::Partition& b, const qhorn::Partition& c) {
  const int vars = static_cast<int>(std::max({a.rows() + b.rows(), c.rows(), std::size_t{1}}));
  auto decomposition = schur_decompose(multiply(schur(a, vars), schur(b, vars)), vars);
  auto it = decomposition.find(c);
  return it == decomposition.end() ? 0 : it->second;
}

// Random strictly increasing label set of the given size drawn from 1..max_label.
inline std::vector<int> random_labels(std::mt19937_64& rng, int size, int max_label) {
  std::vector<int> pool(static_cast<std::size_t>(max_label));
  for (int i = 0; i < max_label; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(pool.begin(), pool.end(), rng);
  pool.resize(static_cast<std::size_t>(size));
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace oracle
