#include "qhorn/littlewood_richardson.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <string>

#include "qhorn/cone.hpp"
#include "qhorn/errors.hpp"

namespace qhorn {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InputError("partition parts must be nonnegative");
    if (i > 0 && parts_[i - 1] < parts_[i]) throw InputError("partition parts must weakly decrease");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::contains(const Partition& other) const {
  if (other.rows() > rows()) return false;
  for (std::size_t i = 0; i < other.rows(); ++i)
    if (other[i] > (*this)[i]) return false;
  return true;
}

Partition parse_partition(std::string_view text) {
  std::vector<int> parts;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto tok = text.substr(pos, comma - pos);
    pos = comma + 1;
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw InputError("'" + std::string(tok) + "' is not an integer part");
    parts.push_back(v);
  }
  return Partition(std::move(parts));
}

std::string format_partition(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.rows(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out.empty() ? "0" : out;
}

namespace {

void partitions_rec(const Partition& box, int remaining, int max_part, std::vector<int>& current,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(current);
    return;
  }
  const auto row = current.size();
  if (row >= box.rows()) return;
  for (int part = std::min({remaining, max_part, box[row]}); part >= 1; --part) {
    current.push_back(part);
    partitions_rec(box, remaining - part, part, current, out);
    current.pop_back();
  }
}

struct TableauCounter {
  const Partition& outer;
  const Partition& inner;
  const Partition& content;
  std::vector<std::vector<int>> grid;  // grid[r][c], 0 where unfilled
  std::vector<int> used;               // used[v] for v in 1..rows(content)
  std::uint64_t count = 0;

  void run() {
    grid.resize(outer.rows());
    for (std::size_t r = 0; r < outer.rows(); ++r) grid[r].assign(static_cast<std::size_t>(outer[r]), 0);
    used.assign(content.rows() + 1, 0);
    fill(0, outer.rows() ? outer[0] - 1 : -1);
  }

  // Cells are filled in reverse reading order: rows top to bottom, right to left.
  void fill(std::size_t r, int c) {
    while (r < outer.rows() && c < inner[r]) {
      ++r;
      if (r < outer.rows()) c = outer[r] - 1;
    }
    if (r >= outer.rows()) {
      ++count;
      return;
    }
    const auto cu = static_cast<std::size_t>(c);
    int hi = static_cast<int>(content.rows());
    if (c + 1 < outer[r]) hi = std::min(hi, grid[r][cu + 1]);  // rows weakly increase
    int lo = 1;
    if (r > 0 && c >= inner[r - 1]) lo = grid[r - 1][cu] + 1;  // columns strictly increase
    for (int v = lo; v <= hi; ++v) {
      const auto vu = static_cast<std::size_t>(v);
      if (used[vu] >= content[vu - 1]) continue;
      if (v > 1 && used[vu] + 1 > used[vu - 1]) continue;  // lattice word
      ++used[vu];
      grid[r][cu] = v;
      fill(r, c - 1);
      grid[r][cu] = 0;
      --used[vu];
    }
  }
};

}  // namespace

std::vector<Partition> partitions_inside(const Partition& box, int size) {
  std::vector<Partition> out;
  if (size < 0) return out;
  std::vector<int> current;
  partitions_rec(box, size, box.rows() ? box[0] : 0, current, out);
  return out;
}

std::uint64_t lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size()) return 0;
  if (!nu.contains(lambda)) return 0;
  TableauCounter counter{nu, lambda, mu, {}, {}, 0};
  counter.run();
  return counter.count;
}

std::vector<std::pair<Partition, std::uint64_t>> lr_expand(const Partition& lambda, const Partition& mu) {
  std::vector<int> box(lambda.rows() + mu.rows(), lambda[0] + mu[0]);
  std::vector<std::pair<Partition, std::uint64_t>> out;
  for (const auto& nu : partitions_inside(Partition(box), lambda.size() + mu.size()))
    if (auto c = lr_coefficient(lambda, mu, nu)) out.emplace_back(nu, c);
  return out;
}

std::uint64_t multi_lr(std::span<const Partition> lambdas, const Partition& mu) {
  if (lambdas.empty()) throw InputError("multi_lr needs at least one partition");
  // every intermediate constituent must fit inside mu
  std::map<Partition, std::uint64_t> current{{lambdas[0], 1}};
  int size = lambdas[0].size();
  for (std::size_t i = 1; i < lambdas.size(); ++i) {
    size += lambdas[i].size();
    std::map<Partition, std::uint64_t> next;
    for (const auto& nu : partitions_inside(mu, size)) {
      std::uint64_t total = 0;
      for (const auto& [kappa, mult] : current) total += mult * lr_coefficient(kappa, lambdas[i], nu);
      if (total) next[nu] = total;
    }
    current = std::move(next);
  }
  auto it = current.find(mu);
  return it == current.end() ? 0 : it->second;
}

Quiver star_quiver(int s) {
  if (s < 1) throw InputError("star quiver needs at least one source");
  std::vector<std::string> names;
  std::vector<Arrow> arrows;
  for (int i = 1; i <= s; ++i) names.push_back("x" + std::to_string(i));
  names.push_back("y");
  for (int i = 0; i < s; ++i) arrows.push_back({static_cast<std::size_t>(i), static_cast<std::size_t>(s)});
  return Quiver(std::move(names), std::move(arrows));
}

LabeledFamily star_family(int s, int n) {
  return LabeledFamily::canonical(DimensionVector(std::vector<int>(static_cast<std::size_t>(s) + 1, n)));
}

StarCheck star_cone_check(HornEngine& engine, int n, std::span<const Partition> lambdas, const Partition& mu) {
  const auto s = static_cast<int>(lambdas.size());
  if (engine.quiver().vertex_count() != lambdas.size() + 1 || engine.quiver().arrow_count() != lambdas.size())
    throw InputError("engine is not built on the star quiver with " + std::to_string(s) + " sources");
  for (const auto& l : lambdas)
    if (l.rows() > static_cast<std::size_t>(n)) throw InputError("partition has more than n rows");
  if (mu.rows() > static_cast<std::size_t>(n)) throw InputError("partition has more than n rows");

  const auto family = star_family(s, n);
  Weight w = Weight::zero(family);
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < n; ++j) w.values[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = lambdas[i][static_cast<std::size_t>(j)];
  for (int j = 0; j < n; ++j)
    w.values[static_cast<std::size_t>(s)][static_cast<std::size_t>(j)] = -mu[static_cast<std::size_t>(n - 1 - j)];

  StarCheck result;
  result.multiplicity = multi_lr(lambdas, mu);
  result.cone_member = cone_contains(engine, family, DominantWeight(family, std::move(w)));
  return result;
}

StarCheck star_cone_check(int n, std::span<const Partition> lambdas, const Partition& mu) {
  HornEngine engine(star_quiver(static_cast<int>(lambdas.size())));
  return star_cone_check(engine, n, lambdas, mu);
}

}  // namespace qhorn
