#include "qhorn/rank_oracle.hpp"

#include <algorithm>

#include "qhorn/errors.hpp"
#include "qhorn/euler.hpp"

namespace qhorn {

ArrowMaps random_representation(const Quiver& q, const DimensionVector& dims, const PrimeField& field,
                                std::mt19937_64& rng) {
  ArrowMaps out;
  for (const auto& a : q.arrows()) {
    PrimeFieldMatrix m(static_cast<std::size_t>(dims[a.target]), static_cast<std::size_t>(dims[a.source]),
                       field);
    for (std::size_t r = 0; r < m.rows(); ++r)
      for (std::size_t c = 0; c < m.cols(); ++c) m.set(r, c, rng() % field.prime());
    out.maps.push_back(std::move(m));
  }
  return out;
}

ArrowMaps zero_representation(const Quiver& q, const DimensionVector& dims, const PrimeField& field) {
  ArrowMaps out;
  for (const auto& a : q.arrows())
    out.maps.emplace_back(static_cast<std::size_t>(dims[a.target]), static_cast<std::size_t>(dims[a.source]),
                          field);
  return out;
}

namespace {

void check_maps(const Quiver& q, const DimensionVector& dims, const ArrowMaps& maps, const char* which) {
  if (maps.maps.size() != q.arrow_count())
    throw InputError(std::string(which) + ": expected one matrix per arrow");
  for (std::size_t i = 0; i < q.arrow_count(); ++i) {
    const auto& a = q.arrows()[i];
    const auto& m = maps.maps[i];
    if (m.rows() != static_cast<std::size_t>(dims[a.target]) ||
        m.cols() != static_cast<std::size_t>(dims[a.source]))
      throw InputError(std::string(which) + ": matrix for arrow #" + std::to_string(i) +
                       " has the wrong size");
  }
}

}  // namespace

DeltaAssembly build_delta(const Quiver& q, const LabeledFamily& from, const LabeledFamily& to,
                          const ArrowMaps& v, const ArrowMaps& w) {
  if (from.vertex_count() != q.vertex_count() || to.vertex_count() != q.vertex_count())
    throw InputError("families do not match the quiver");
  const auto dv = from.dims();
  const auto dw = to.dims();
  check_maps(q, dv, v, "v");
  check_maps(q, dw, w, "w");
  if (!v.maps.empty() && !w.maps.empty() &&
      v.maps.front().field().prime() != w.maps.front().field().prime())
    throw InputError("v and w live over different prime fields");
  const PrimeField field = !v.maps.empty() ? v.maps.front().field()
                           : !w.maps.empty() ? w.maps.front().field()
                                             : PrimeField();

  std::vector<DeltaColumn> columns;
  for (std::size_t x = 0; x < q.vertex_count(); ++x)
    for (int k : from.at(x))
      for (int j : to.at(x))
        if (j <= k) columns.push_back({x, k, j});

  std::vector<DeltaRow> rows;
  std::vector<std::size_t> row_base;
  for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
    const auto& a = q.arrows()[ai];
    row_base.push_back(rows.size());
    for (int i : from.at(a.source))
      for (int j : to.at(a.target)) rows.push_back({ai, i, j});
  }

  PrimeFieldMatrix matrix(rows.size(), columns.size(), field);
  auto position = [](const std::vector<int>& labels, int label) {
    return static_cast<std::size_t>(std::lower_bound(labels.begin(), labels.end(), label) - labels.begin());
  };

  for (std::size_t c = 0; c < columns.size(); ++c) {
    const auto [z, k, j] = columns[c];
    const auto kp = position(from.at(z), k);
    const auto jp = position(to.at(z), j);
    for (std::size_t ai = 0; ai < q.arrow_count(); ++ai) {
      const auto& a = q.arrows()[ai];
      // Phi_y v_a with y = z: e_i -> v_a[k][i] e_j
      if (a.target == z) {
        const auto width = static_cast<std::size_t>(dw[a.target]);
        for (std::size_t ip = 0; ip < static_cast<std::size_t>(dv[a.source]); ++ip)
          matrix.add_to(row_base[ai] + ip * width + jp, c, v.maps[ai].at(kp, ip));
      }
      // -w_a Phi_x with x = z: e_k -> sum_m w_a[m][j] e_m
      if (a.source == z) {
        const auto width = static_cast<std::size_t>(dw[a.target]);
        for (std::size_t mp = 0; mp < width; ++mp)
          matrix.sub_from(row_base[ai] + kp * width + mp, c, w.maps[ai].at(mp, jp));
      }
    }
  }
  return {std::move(columns), std::move(rows), std::move(matrix)};
}

std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

std::int64_t generic_rank(const Quiver& q, const LabeledFamily& from, const LabeledFamily& to,
                          const OracleConfig& config) {
  if (config.trials < 1) throw InputError("trials must be at least 1");
  const auto rows = dim_hom_space(q, from.dims(), to.dims());
  const auto cols = dim_compatible(q, from, to);
  const auto ceiling = std::min(rows, cols);
  std::int64_t best = 0;
  for (int t = 0; t < config.trials && best < ceiling; ++t) {
    auto rng = trial_rng(config.seed, static_cast<std::uint64_t>(t));
    auto v = random_representation(q, from.dims(), config.field, rng);
    auto w = random_representation(q, to.dims(), config.field, rng);
    auto delta = build_delta(q, from, to, v, w);
    best = std::max(best, static_cast<std::int64_t>(delta.matrix.rank()));
  }
  return best;
}

ExtReport ext_min(const Quiver& q, const LabeledFamily& from, const LabeledFamily& to,
                  const OracleConfig& config) {
  ExtReport r;
  r.rows = dim_hom_space(q, from.dims(), to.dims());
  r.cols = dim_compatible(q, from, to);
  r.rank = generic_rank(q, from, to, config);
  r.ext_min = r.rows - r.rank;
  r.hom_min = r.cols - r.rank;
  r.eul = r.cols - r.rows;
  return r;
}

bool det_P_nonzero(const Quiver& q, const LabeledFamily& from, const LabeledFamily& to,
                   const OracleConfig& config) {
  if (config.trials < 1) throw InputError("trials must be at least 1");
  const auto e = eul(q, from, to);
  if (e != 0)
    throw InputError("delta is not square (eul = " + std::to_string(e) + "); P is undefined");
  for (int t = 0; t < config.trials; ++t) {
    auto rng = trial_rng(config.seed, static_cast<std::uint64_t>(t));
    auto v = random_representation(q, from.dims(), config.field, rng);
    auto w = random_representation(q, to.dims(), config.field, rng);
    if (build_delta(q, from, to, v, w).matrix.determinant() != 0) return true;
  }
  return false;
}

// --- harness ----------------------------------------------------------------

HarnessMode parse_harness_mode(const std::string& name) {
  if (name == "theo1") return HarnessMode::theo1;
  if (name == "theo2") return HarnessMode::theo2;
  if (name == "theo3") return HarnessMode::theo3;
  throw InputError("unknown harness mode '" + name + "' (expected theo1, theo2 or theo3)");
}

std::string HarnessReport::summary() const {
  return "AGREEMENTS " + std::to_string(agreements) + "/" + std::to_string(total);
}

namespace {

void record(HarnessReport& report, std::string line, bool agree) {
  report.lines.push_back(std::move(line) + " agree=" + (agree ? "1" : "0"));
  report.total += 1;
  report.agreements += agree ? 1 : 0;
}

LabeledFamily random_family(std::size_t vertices, const HarnessBounds& bounds, std::mt19937_64& rng) {
  std::vector<std::vector<int>> labels(vertices);
  const int max_dim = std::min(bounds.max_dim, bounds.max_label);
  for (auto& l : labels) {
    std::vector<int> pool(static_cast<std::size_t>(bounds.max_label));
    for (int i = 0; i < bounds.max_label; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
    const auto size = static_cast<std::size_t>(rng() % static_cast<std::uint64_t>(max_dim + 1));
    // partial Fisher-Yates
    for (std::size_t i = 0; i < size; ++i) {
      auto j = i + rng() % (pool.size() - i);
      std::swap(pool[i], pool[j]);
    }
    l.assign(pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(size));
    std::sort(l.begin(), l.end());
  }
  return LabeledFamily(std::move(labels));
}

void run_theo1(HornEngine& engine, const LabeledFamily& family, const OracleConfig& config,
               HarnessReport& report) {
  const auto& q = engine.quiver();
  auto entry = engine.entry(family.dims());
  const auto count = entry->shape.count_checked(engine.options().cap);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    auto sub = entry->shape.to_subfamily(mask, family);
    const bool member = entry->contains(mask);
    auto parts = subquotient(family, sub);
    const auto ext = ext_min(q, parts.sub, parts.quot, config).ext_min;
    record(report,
           "INSTANCE " + format_subfamily(q, sub) + " recursion=" + (member ? "1" : "0") +
               " oracle_ext=" + std::to_string(ext),
           member == (ext == 0));
  }
}

void run_theo2(HornEngine& engine, const HarnessBounds& bounds, const OracleConfig& config,
               HarnessReport& report) {
  const auto& q = engine.quiver();
  for (int p = 0; p < bounds.pairs; ++p) {
    auto rng = trial_rng(config.seed ^ 0x5eed7e0002ULL, static_cast<std::uint64_t>(p));
    auto from = random_family(q.vertex_count(), bounds, rng);
    auto to = random_family(q.vertex_count(), bounds, rng);
    const auto ext = ext_min(q, from, to, config).ext_min;
    bool horn_nonneg = true;
    bool essential_nonneg = true;
    for (const auto& s : engine.horn_families(from)) {
      const bool ok = eul(q, LabeledFamily(s.sub.labels), to) >= 0;
      horn_nonneg = horn_nonneg && ok;
      if (s.eul == 0) essential_nonneg = essential_nonneg && ok;
    }
    const bool agree = (ext != 0 || horn_nonneg) && (!essential_nonneg || ext == 0);
    record(report,
           "INSTANCE V=" + format_family(q, from) + " W=" + format_family(q, to) +
               " oracle_ext=" + std::to_string(ext) + " horn_nonneg=" + (horn_nonneg ? "1" : "0") +
               " essential_nonneg=" + (essential_nonneg ? "1" : "0"),
           agree);
  }
}

void run_theo3(HornEngine& engine, const LabeledFamily& family, const OracleConfig& config,
               HarnessReport& report) {
  const auto& q = engine.quiver();
  auto entry = engine.entry(family.dims());
  const auto count = entry->shape.count_checked(engine.options().cap);
  auto oracle_intersecting = [&](const Subfamily& s) {
    auto parts = subquotient(family, s);
    return ext_min(q, parts.sub, parts.quot, config).ext_min == 0;
  };
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    auto sub = entry->shape.to_subfamily(mask, family);
    bool hypothesis = eul_subquotient(q, family, sub) >= 0;
    if (hypothesis) {
      LabeledFamily inner(sub.labels);
      for (const auto& u : engine.horn_families(inner)) {
        if (u.eul != 0 || u.sub == sub) continue;
        if (!oracle_intersecting(u.sub)) {
          hypothesis = false;
          break;
        }
      }
    }
    const bool member = entry->contains(mask);
    auto parts = subquotient(family, sub);
    const auto ext = ext_min(q, parts.sub, parts.quot, config).ext_min;
    record(report,
           "INSTANCE " + format_subfamily(q, sub) + " hypothesis=" + (hypothesis ? "1" : "0") +
               " recursion=" + (member ? "1" : "0") + " oracle_ext=" + std::to_string(ext),
           !hypothesis || (member && ext == 0));
  }
}

}  // namespace

HarnessReport theorem_harness(HornEngine& engine, const LabeledFamily& family, HarnessMode mode,
                              const HarnessBounds& bounds, const OracleConfig& config) {
  if (family.vertex_count() != engine.quiver().vertex_count())
    throw InputError("family does not match the quiver");
  HarnessReport report;
  switch (mode) {
    case HarnessMode::theo1:
      run_theo1(engine, family, config, report);
      break;
    case HarnessMode::theo2:
      run_theo2(engine, bounds, config, report);
      break;
    case HarnessMode::theo3:
      run_theo3(engine, family, config, report);
      break;
  }
  return report;
}

}  // namespace qhorn
