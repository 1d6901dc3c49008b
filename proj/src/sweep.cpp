#include "qhorn/sweep.hpp"

#include <charconv>

#include "qhorn/errors.hpp"

namespace qhorn {

SweepBounds parse_sweep_bounds(std::string_view text) {
  std::vector<int> values;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto tok = text.substr(pos, comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size() || v < 0)
      throw InputError("sweep bounds must look like V,A,N with nonnegative integers");
    values.push_back(v);
    pos = comma + 1;
  }
  if (values.size() != 3 || values[0] < 1)
    throw InputError("sweep bounds must look like V,A,N with V >= 1");
  return {values[0], values[1], values[2]};
}

namespace {

void arrows_rec(std::size_t vertices, int remaining, std::size_t first_type,
                const std::vector<Arrow>& types, std::vector<Arrow>& current,
                const std::vector<std::string>& names, std::vector<Quiver>& out) {
  try {
    out.emplace_back(names, current);
  } catch (const InputError&) {
    return;  // cyclic; every extension is cyclic too
  }
  if (remaining == 0) return;
  for (std::size_t t = first_type; t < types.size(); ++t) {
    current.push_back(types[t]);
    arrows_rec(vertices, remaining - 1, t, types, current, names, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Quiver> enumerate_quivers(int max_vertices, int max_arrows) {
  std::vector<Quiver> out;
  for (int k = 1; k <= max_vertices; ++k) {
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) names.push_back("v" + std::to_string(i));
    std::vector<Arrow> types;
    for (std::size_t s = 0; s < names.size(); ++s)
      for (std::size_t t = 0; t < names.size(); ++t)
        if (s != t) types.push_back({s, t});
    std::vector<Arrow> current;
    arrows_rec(names.size(), max_arrows, 0, types, current, names, out);
  }
  return out;
}

std::vector<DimensionVector> enumerate_dimension_vectors(std::size_t vertices, int max_dim) {
  std::vector<DimensionVector> out;
  std::vector<int> d(vertices, 0);
  while (true) {
    out.emplace_back(d);
    std::size_t x = 0;
    while (x < vertices && d[x] == max_dim) d[x++] = 0;
    if (x == vertices) break;
    ++d[x];
  }
  return out;
}

std::string describe_arrows(const Quiver& q) {
  if (q.arrow_count() == 0) return "-";
  std::string out;
  for (const auto& a : q.arrows()) {
    if (!out.empty()) out += ',';
    out += q.name(a.source) + "->" + q.name(a.target);
  }
  return out;
}

std::string describe_dims(const DimensionVector& dims) {
  std::string out;
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(dims[i]);
  }
  return out;
}

}  // namespace qhorn
