#include "qhorn/horn.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <thread>

#include "qhorn/errors.hpp"

namespace qhorn {

// --- PackedShape ------------------------------------------------------------

PackedShape::PackedShape(const DimensionVector& dims) : dims_(dims) {
  for (std::size_t x = 0; x < dims.size(); ++x) {
    offsets_.push_back(total_);
    total_ += dims[x];
    if (total_ > 63)
      throw ResourceError("family has " + std::to_string(total_) +
                          "+ labels; packed subfamilies support at most 63");
    vertex_full_.push_back((std::uint64_t{1} << dims[x]) - 1);
  }
  full_ = (std::uint64_t{1} << total_) - 1;
}

DimensionVector PackedShape::dims_of(std::uint64_t mask) const {
  std::vector<int> d(dims_.size());
  for (std::size_t x = 0; x < d.size(); ++x) d[x] = std::popcount(vertex_bits(mask, x));
  return DimensionVector(std::move(d));
}

std::uint64_t PackedShape::to_mask(const LabeledFamily& ambient, const Subfamily& sub) const {
  if (ambient.dims() != dims_) throw InputError("family does not match packed shape");
  auto positions = to_canonical_positions(ambient, sub);
  std::uint64_t mask = 0;
  for (std::size_t x = 0; x < positions.labels.size(); ++x)
    for (int p : positions.labels[x]) mask |= std::uint64_t{1} << (offsets_[x] + p - 1);
  return mask;
}

Subfamily PackedShape::to_subfamily(std::uint64_t mask, const LabeledFamily& ambient) const {
  Subfamily out = empty_subfamily(dims_.size());
  for (std::size_t x = 0; x < dims_.size(); ++x) {
    auto bits = vertex_bits(mask, x);
    for (int p = 0; p < dims_[x]; ++p)
      if (bits >> p & 1) out.labels[x].push_back(ambient.at(x)[static_cast<std::size_t>(p)]);
  }
  return out;
}

std::uint64_t PackedShape::count_checked(std::uint64_t cap) const {
  std::uint64_t count = std::uint64_t{1} << total_;
  if (count > cap)
    throw ResourceError("enumeration of 2^" + std::to_string(total_) +
                        " subfamilies exceeds the cap of " + std::to_string(cap));
  return count;
}

std::uint64_t deposit_bits(std::uint64_t bits, std::uint64_t mask) {
  std::uint64_t out = 0;
  for (; mask; mask &= mask - 1, bits >>= 1)
    if (bits & 1) out |= mask & (~mask + 1);
  return out;
}

std::int64_t packed_eul(const Quiver& q, const PackedShape& shape, std::uint64_t mask) {
  const auto& dims = shape.dims();
  std::int64_t value = 0;
  for (std::size_t x = 0; x < dims.size(); ++x) {
    auto in = shape.vertex_bits(mask, x);
    auto out = shape.vertex_full(x) & ~in;
    // compatible maps e_k -> e_j with k in K, j outside K and j < k
    for (auto b = in; b; b &= b - 1) {
      auto below = (b & (~b + 1)) - 1;
      value += std::popcount(out & below);
    }
  }
  for (const auto& a : q.arrows()) {
    std::int64_t from = std::popcount(shape.vertex_bits(mask, a.source));
    std::int64_t to = dims[a.target] - std::popcount(shape.vertex_bits(mask, a.target));
    value -= from * to;
  }
  return value;
}

// --- Enumeration ------------------------------------------------------------

void for_each_subfamily(const LabeledFamily& family, const std::optional<DimensionVector>& filter,
                        const std::function<void(const Subfamily&)>& visit, std::uint64_t cap) {
  PackedShape shape(family.dims());
  if (filter && filter->size() != family.vertex_count())
    throw InputError("cardinality filter has the wrong number of vertices");
  const auto count = shape.count_checked(cap);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    if (filter) {
      bool match = true;
      for (std::size_t x = 0; x < family.vertex_count() && match; ++x)
        match = std::popcount(shape.vertex_bits(mask, x)) == (*filter)[x];
      if (!match) continue;
    }
    visit(shape.to_subfamily(mask, family));
  }
}

std::vector<Subfamily> enumerate_subfamilies(const LabeledFamily& family,
                                             const std::optional<DimensionVector>& filter,
                                             std::uint64_t cap) {
  std::vector<Subfamily> out;
  for_each_subfamily(family, filter, [&](const Subfamily& s) { out.push_back(s); }, cap);
  return out;
}

// --- HornEngine -------------------------------------------------------------

bool HornEntry::contains(std::uint64_t mask) const {
  auto it = std::lower_bound(members.begin(), members.end(), mask,
                             [](const HornMember& m, std::uint64_t v) { return m.mask < v; });
  return it != members.end() && it->mask == mask;
}

HornEngine::HornEngine(Quiver quiver, HornOptions options)
    : quiver_(std::move(quiver)), options_(options) {
  if (options_.threads == 0) options_.threads = 1;
}

std::size_t HornEngine::table_size() const {
  std::shared_lock lock(mutex_);
  return table_.size();
}

std::shared_ptr<const HornEntry> HornEngine::entry(const DimensionVector& dims) {
  if (dims.size() != quiver_.vertex_count())
    throw InputError("dimension vector does not match the quiver");
  return lookup(dims, options_.threads);
}

std::shared_ptr<const HornEntry> HornEngine::lookup(const DimensionVector& dims, unsigned threads) {
  if (options_.memoize) {
    std::shared_lock lock(mutex_);
    if (auto it = table_.find(dims); it != table_.end()) return it->second;
  }
  return compute(dims, threads);
}

void HornEngine::scan(const PackedShape& shape, std::uint64_t begin, std::uint64_t end,
                      std::vector<HornMember>& out) {
  const auto full = shape.full();
  for (std::uint64_t mask = begin; mask < end; ++mask) {
    if (mask == full) {
      out.push_back({mask, 0});
      continue;
    }
    const auto value = packed_eul(quiver_, shape, mask);
    if (value < 0) continue;
    const auto inner = lookup(shape.dims_of(mask), 1);
    const auto inner_full = inner->shape.full();
    bool ok = true;
    for (auto idx : inner->essential) {
      const auto l = inner->members[idx].mask;
      if (l == inner_full) continue;
      if (packed_eul(quiver_, shape, deposit_bits(l, mask)) < 0) {
        ok = false;
        break;
      }
    }
    if (ok) out.push_back({mask, value});
  }
}

std::shared_ptr<const HornEntry> HornEngine::compute(const DimensionVector& dims, unsigned threads) {
  auto result = std::make_shared<HornEntry>(HornEntry{PackedShape(dims), {}, {}});
  const auto count = result->shape.count_checked(options_.cap);

  if (threads <= 1 || count < 4096) {
    scan(result->shape, 0, count, result->members);
  } else {
    // chunks are merged in order, so the output matches the serial scan
    std::vector<std::vector<HornMember>> parts(threads);
    std::vector<std::exception_ptr> errors(threads);
    {
      std::vector<std::jthread> workers;
      for (unsigned t = 0; t < threads; ++t) {
        const auto begin = count * t / threads;
        const auto end = count * (t + 1) / threads;
        workers.emplace_back([&, t, begin, end] {
          try {
            scan(result->shape, begin, end, parts[t]);
          } catch (...) {
            errors[t] = std::current_exception();
          }
        });
      }
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (auto& p : parts) result->members.insert(result->members.end(), p.begin(), p.end());
  }
  for (std::size_t i = 0; i < result->members.size(); ++i)
    if (result->members[i].eul == 0) result->essential.push_back(i);

  if (!options_.memoize) return result;
  std::unique_lock lock(mutex_);
  // a concurrent computation of the same entry is identical; keep the first
  auto [it, inserted] = table_.try_emplace(dims, std::move(result));
  return it->second;
}

std::vector<HornFamily> HornEngine::horn_families(const LabeledFamily& family) {
  auto e = entry(family.dims());
  std::vector<HornFamily> out;
  out.reserve(e->members.size());
  for (const auto& m : e->members) out.push_back({e->shape.to_subfamily(m.mask, family), m.eul});
  return out;
}

std::vector<Subfamily> HornEngine::essential_horn(const LabeledFamily& family) {
  auto e = entry(family.dims());
  std::vector<Subfamily> out;
  for (auto idx : e->essential) out.push_back(e->shape.to_subfamily(e->members[idx].mask, family));
  return out;
}

bool HornEngine::is_q_intersecting(const LabeledFamily& family, const Subfamily& sub) {
  require_subfamily(family, sub);
  auto e = entry(family.dims());
  return e->contains(e->shape.to_mask(family, sub));
}

std::vector<HornFamily> horn_families(const Quiver& q, const LabeledFamily& family, HornOptions options) {
  return HornEngine(q, options).horn_families(family);
}

std::vector<Subfamily> essential_horn(const Quiver& q, const LabeledFamily& family, HornOptions options) {
  return HornEngine(q, options).essential_horn(family);
}

bool is_q_intersecting(const Quiver& q, const LabeledFamily& family, const Subfamily& sub,
                       HornOptions options) {
  return HornEngine(q, options).is_q_intersecting(family, sub);
}

}  // namespace qhorn
