#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qhorn {

struct Arrow {
  std::size_t source;
  std::size_t target;
  friend bool operator==(const Arrow&, const Arrow&) = default;
};

/**
 * Acyclic directed multigraph. Vertex and arrow order are declaration order
 * and are used for every deterministic iteration in the library. Parallel
 * arrows are kept as separate entries.
 */
class Quiver {
 public:
  Quiver() = default;

  /// Throws InputError on duplicate names, unknown endpoints or a directed cycle.
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::vector<std::string>& vertices() const noexcept { return vertices_; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }
  const std::string& name(std::size_t v) const { return vertices_.at(v); }

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index_of(std::string_view name) const;  // throws InputError

  /// True if some directed path leads from `from` to `to` (length >= 0).
  bool reaches(std::size_t from, std::size_t to) const;

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
};

/// Nonnegative integer per vertex.
struct DimensionVector {
  std::vector<int> values;

  DimensionVector() = default;
  explicit DimensionVector(std::vector<int> v);

  std::size_t size() const noexcept { return values.size(); }
  int operator[](std::size_t x) const { return values[x]; }
  int total() const;

  friend auto operator<=>(const DimensionVector&, const DimensionVector&) = default;
};

/**
 * Per-vertex strictly increasing lists of positive integer labels. A label
 * set L_x spans V(L_x) = sum of C e_j for j in L_x, filtered so that step t
 * is spanned by the basis vectors with label <= t.
 */
class LabeledFamily {
 public:
  LabeledFamily() = default;
  /// Sorts nothing: throws InputError unless every list is strictly increasing and positive.
  explicit LabeledFamily(std::vector<std::vector<int>> labels);

  static LabeledFamily canonical(const DimensionVector& dims);

  std::size_t vertex_count() const noexcept { return labels_.size(); }
  const std::vector<int>& at(std::size_t x) const { return labels_.at(x); }
  const std::vector<std::vector<int>>& labels() const noexcept { return labels_; }
  DimensionVector dims() const;
  int total_size() const;
  bool contains(std::size_t x, int label) const;

  friend bool operator==(const LabeledFamily&, const LabeledFamily&) = default;

 private:
  std::vector<std::vector<int>> labels_;
};

/**
 * A choice of K_x subset of L_x for each vertex, held as labels of the ambient
 * family. The ambient family is passed alongside wherever containment matters;
 * every operation taking (ambient, subfamily) validates it.
 */
struct Subfamily {
  std::vector<std::vector<int>> labels;

  friend bool operator==(const Subfamily&, const Subfamily&) = default;
};

/// Throws ContainmentError unless K has the same vertex count and K_x is a sorted subset of L_x.
void require_subfamily(const LabeledFamily& ambient, const Subfamily& sub);

/// K_x = L_x for all x.
Subfamily full_subfamily(const LabeledFamily& ambient);
Subfamily empty_subfamily(std::size_t vertex_count);
DimensionVector dims_of(const Subfamily& sub);

struct SubQuotient {
  LabeledFamily sub;
  LabeledFamily quot;
};

/// Both parts keep ambient labels, so the inherited filtrations are read off directly.
SubQuotient subquotient(const LabeledFamily& ambient, const Subfamily& sub);

/// Relabels each L_x to {1..n_x}, keeping order.
LabeledFamily canonicalize(const LabeledFamily& family);

/// Express `sub` (labels of `ambient`) in the canonical coordinates of `ambient`.
Subfamily to_canonical_positions(const LabeledFamily& ambient, const Subfamily& sub);

/// Inverse of to_canonical_positions.
Subfamily from_canonical_positions(const LabeledFamily& ambient, const Subfamily& positions);

struct QuiverFile {
  Quiver quiver;
  LabeledFamily family;
};

/// Parses the line-oriented quiver format. Throws ParseError with the offending line.
QuiverFile parse_quiver(std::string_view text);
QuiverFile load_quiver_file(const std::string& path);

/// Parses "x:1,3;y:2;z:" (braces around lists are accepted). Omitted vertices are empty.
Subfamily parse_subfamily(const Quiver& quiver, std::string_view literal);

/// Renders "x:{1,3};y:{}" in vertex order.
std::string format_subfamily(const Quiver& quiver, const std::vector<std::vector<int>>& labels);
inline std::string format_subfamily(const Quiver& quiver, const Subfamily& sub) {
  return format_subfamily(quiver, sub.labels);
}
inline std::string format_family(const Quiver& quiver, const LabeledFamily& family) {
  return format_subfamily(quiver, family.labels());
}

}  // namespace qhorn
