#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <shared_mutex>
#include <vector>

#include "qhorn/quiver.hpp"

namespace qhorn {

inline constexpr std::uint64_t kDefaultEnumerationCap = std::uint64_t{1} << 24;

/**
 * Bit-packed subfamilies of the canonical family {1..n_x}. Vertex x occupies
 * bits [offset_x, offset_x + n_x); bit offset_x + p stands for the (p+1)-th
 * label. Enumerating masks in increasing order therefore lists per-vertex
 * subsets in binary-counting order, first vertex fastest.
 */
class PackedShape {
 public:
  explicit PackedShape(const DimensionVector& dims);

  const DimensionVector& dims() const noexcept { return dims_; }
  int total_bits() const noexcept { return total_; }
  std::uint64_t full() const noexcept { return full_; }
  std::uint64_t vertex_bits(std::uint64_t mask, std::size_t x) const {
    return (mask >> offsets_[x]) & vertex_full_[x];
  }
  std::uint64_t vertex_full(std::size_t x) const { return vertex_full_[x]; }
  DimensionVector dims_of(std::uint64_t mask) const;

  std::uint64_t to_mask(const LabeledFamily& ambient, const Subfamily& sub) const;
  Subfamily to_subfamily(std::uint64_t mask, const LabeledFamily& ambient) const;

  /// Number of subfamilies, 2^(sum n_x); throws ResourceError beyond `cap`.
  std::uint64_t count_checked(std::uint64_t cap) const;

 private:
  DimensionVector dims_;
  std::vector<int> offsets_;
  std::vector<std::uint64_t> vertex_full_;
  int total_ = 0;
  std::uint64_t full_ = 0;
};

/// Scatter the low bits of `bits` onto the set bits of `mask`, in order.
std::uint64_t deposit_bits(std::uint64_t bits, std::uint64_t mask);

/// eul(K, J/K) for a packed K of the canonical family with the given shape.
std::int64_t packed_eul(const Quiver& q, const PackedShape& shape, std::uint64_t mask);

/// Visits every subfamily of J (optionally with |K_x| = filter_x) in enumeration order.
void for_each_subfamily(const LabeledFamily& family, const std::optional<DimensionVector>& filter,
                        const std::function<void(const Subfamily&)>& visit,
                        std::uint64_t cap = kDefaultEnumerationCap);

std::vector<Subfamily> enumerate_subfamilies(const LabeledFamily& family,
                                             const std::optional<DimensionVector>& filter = std::nullopt,
                                             std::uint64_t cap = kDefaultEnumerationCap);

struct HornMember {
  std::uint64_t mask;
  std::int64_t eul;
};

/// Horn set of the canonical family with a given dimension vector.
struct HornEntry {
  PackedShape shape;
  std::vector<HornMember> members;   // ascending mask order
  std::vector<std::size_t> essential;  // indices into members with eul == 0

  bool contains(std::uint64_t mask) const;
};

struct HornOptions {
  std::uint64_t cap = kDefaultEnumerationCap;
  bool memoize = true;
  unsigned threads = 1;
};

struct HornFamily {
  Subfamily sub;
  std::int64_t eul;
};

/**
 * Computes Horn_Q(J) recursively. Horn_Q(K) only depends on |K_x|, so
 * entries are keyed by dimension vector and shared between every ambient
 * family of the quiver. Safe to call from several threads.
 */
class HornEngine {
 public:
  explicit HornEngine(Quiver quiver, HornOptions options = {});

  const Quiver& quiver() const noexcept { return quiver_; }
  const HornOptions& options() const noexcept { return options_; }

  std::shared_ptr<const HornEntry> entry(const DimensionVector& dims);

  std::vector<HornFamily> horn_families(const LabeledFamily& family);
  std::vector<Subfamily> essential_horn(const LabeledFamily& family);
  bool is_q_intersecting(const LabeledFamily& family, const Subfamily& sub);

  std::size_t table_size() const;

 private:
  std::shared_ptr<const HornEntry> lookup(const DimensionVector& dims, unsigned threads);
  std::shared_ptr<const HornEntry> compute(const DimensionVector& dims, unsigned threads);
  void scan(const PackedShape& shape, std::uint64_t begin, std::uint64_t end,
            std::vector<HornMember>& out);

  Quiver quiver_;
  HornOptions options_;
  mutable std::shared_mutex mutex_;
  std::map<DimensionVector, std::shared_ptr<const HornEntry>> table_;
};

std::vector<HornFamily> horn_families(const Quiver& q, const LabeledFamily& family,
                                      HornOptions options = {});
std::vector<Subfamily> essential_horn(const Quiver& q, const LabeledFamily& family,
                                      HornOptions options = {});
bool is_q_intersecting(const Quiver& q, const LabeledFamily& family, const Subfamily& sub,
                       HornOptions options = {});

}  // namespace qhorn
