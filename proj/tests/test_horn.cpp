#include <doctest.h>

#include <random>

#include "qhorn/errors.hpp"
#include "qhorn/euler.hpp"
#include "qhorn/horn.hpp"
#include "qhorn/sweep.hpp"
#include "support/oracles.hpp"

using namespace qhorn;

namespace {

Quiver a2() { return Quiver({"x", "y"}, {{0, 1}}); }

std::vector<std::vector<std::vector<int>>> as_labels(const std::vector<HornFamily>& h) {
  std::vector<std::vector<std::vector<int>>> out;
  for (const auto& m : h) out.push_back(m.sub.labels);
  return out;
}

bool has(const std::vector<Subfamily>& list, const Subfamily& s) {
  return std::find(list.begin(), list.end(), s) != list.end();
}

}  // namespace

TEST_CASE("enumeration of subfamilies") {
  LabeledFamily one({{1, 2}});
  auto all = enumerate_subfamilies(one);
  REQUIRE(all.size() == 4);
  CHECK(all[0].labels[0].empty());
  CHECK(all[1].labels[0] == std::vector<int>{1});
  CHECK(all[2].labels[0] == std::vector<int>{2});
  CHECK(all[3].labels[0] == std::vector<int>{1, 2});
  CHECK(enumerate_subfamilies(LabeledFamily({{1}, {1}})).size() == 4);
  auto filtered = enumerate_subfamilies(one, DimensionVector({1}));
  REQUIRE(filtered.size() == 2);
  CHECK(filtered[0].labels[0] == std::vector<int>{1});
  CHECK(filtered[1].labels[0] == std::vector<int>{2});
}

TEST_CASE("enumeration keeps ambient labels and respects the cap") {
  LabeledFamily j({{3, 8}, {5}});
  auto all = enumerate_subfamilies(j);
  CHECK(all.size() == 8);
  CHECK(all[1].labels == std::vector<std::vector<int>>{{3}, {}});
  CHECK(all[4].labels == std::vector<std::vector<int>>{{}, {5}});
  CHECK_THROWS_AS(enumerate_subfamilies(j, std::nullopt, 7), ResourceError);
}

TEST_CASE("deposit bits") {
  CHECK(deposit_bits(0b11, 0b1010) == 0b1010);
  CHECK(deposit_bits(0b10, 0b1010) == 0b1000);
  CHECK(deposit_bits(0b01, 0b1100) == 0b0100);
  CHECK(deposit_bits(0, 0b1111) == 0);
}

TEST_CASE("packed eul agrees with the label-level value") {
  std::mt19937_64 rng(1);
  Quiver q({"x", "y", "z"}, {{0, 1}, {0, 2}, {0, 2}});
  for (int round = 0; round < 200; ++round) {
    DimensionVector dims({static_cast<int>(rng() % 4), static_cast<int>(rng() % 4), static_cast<int>(rng() % 4)});
    PackedShape shape(dims);
    auto fam = LabeledFamily::canonical(dims);
    auto mask = rng() & shape.full();
    CHECK(packed_eul(q, shape, mask) == eul_subquotient(q, fam, shape.to_subfamily(mask, fam)));
  }
}

TEST_CASE("single vertex without arrows keeps every subfamily") {
  Quiver q({"x"}, {});
  auto h = horn_families(q, LabeledFamily({{1, 2}}));
  CHECK(h.size() == 4);
  auto e = essential_horn(q, LabeledFamily({{1, 2}}));
  REQUIRE(e.size() == 3);
  CHECK(e[0].labels[0].empty());
  CHECK(e[1].labels[0] == std::vector<int>{1});
  CHECK(e[2].labels[0] == std::vector<int>{1, 2});
}

TEST_CASE("A2 membership examples") {
  LabeledFamily j({{1, 2}, {1, 2}});
  CHECK(is_q_intersecting(a2(), j, Subfamily{{{1}, {2}}}));
  CHECK_FALSE(is_q_intersecting(a2(), j, Subfamily{{{1}, {1}}}));
  CHECK(is_q_intersecting(a2(), j, full_subfamily(j)));
  auto e = essential_horn(a2(), j);
  CHECK(has(e, Subfamily{{{1}, {2}}}));
  CHECK(has(e, Subfamily{{{2}, {1}}}));
  CHECK(has(e, Subfamily{{{1}, {1, 2}}}));
  CHECK(has(e, Subfamily{{{}, {1}}}));
  for (const auto& k : e) CHECK(eul_subquotient(a2(), j, k) == 0);
}

TEST_CASE("membership rejects foreign subfamilies") {
  LabeledFamily j({{1, 2}, {1, 2}});
  CHECK_THROWS_AS(is_q_intersecting(a2(), j, Subfamily{{{3}, {}}}), ContainmentError);
}

TEST_CASE("property: engine matches the literal recursion on labeled families") {
  std::mt19937_64 rng(2024);
  for (const auto& q : enumerate_quivers(3, 2)) {
    HornEngine engine(q);
    oracle::NaiveHorn naive(q);
    for (int round = 0; round < 3; ++round) {
      std::vector<std::vector<int>> labels;
      for (std::size_t x = 0; x < q.vertex_count(); ++x)
        labels.push_back(oracle::random_labels(rng, static_cast<int>(rng() % 3) + (x == 0), 6));
      LabeledFamily j(labels);
      auto got = as_labels(engine.horn_families(j));
      auto want = naive.horn(j.labels());
      std::sort(got.begin(), got.end());
      std::sort(want.begin(), want.end());
      CHECK(got == want);
    }
  }
}

TEST_CASE("property: Horn sets only depend on the dimension vector") {
  std::mt19937_64 rng(77);
  Quiver q({"x", "y", "z"}, {{0, 1}, {1, 2}});
  HornEngine engine(q);
  for (int round = 0; round < 30; ++round) {
    std::vector<std::vector<int>> labels;
    for (int x = 0; x < 3; ++x) labels.push_back(oracle::random_labels(rng, static_cast<int>(rng() % 4), 8));
    LabeledFamily j(labels);
    auto c = canonicalize(j);
    auto hj = engine.horn_families(j);
    auto hc = engine.horn_families(c);
    REQUIRE(hj.size() == hc.size());
    for (std::size_t i = 0; i < hj.size(); ++i) {
      CHECK(to_canonical_positions(j, hj[i].sub) == hc[i].sub);
      CHECK(hj[i].eul == hc[i].eul);
    }
  }
}

TEST_CASE("property: cold, warm, memo-free and parallel runs agree") {
  Quiver q({"x1", "x2", "y"}, {{0, 2}, {1, 2}});
  auto j = LabeledFamily::canonical(DimensionVector({3, 3, 3}));
  HornEngine memo(q);
  auto cold = as_labels(memo.horn_families(j));
  CHECK(memo.table_size() > 1);
  auto warm = as_labels(memo.horn_families(j));
  CHECK(cold == warm);
  HornOptions off;
  off.memoize = false;
  HornEngine plain(q, off);
  CHECK(as_labels(plain.horn_families(j)) == cold);
  CHECK(plain.table_size() == 0);
  HornOptions par;
  par.threads = 4;
  HornEngine threaded(q, par);
  CHECK(as_labels(threaded.horn_families(j)) == cold);
}

TEST_CASE("property: members are ascending and the full family is always present") {
  for (const auto& q : enumerate_quivers(2, 2)) {
    HornEngine engine(q);
    for (const auto& dims : enumerate_dimension_vectors(q.vertex_count(), 3)) {
      auto e = engine.entry(dims);
      REQUIRE_FALSE(e->members.empty());
      CHECK(e->members.back().mask == e->shape.full());
      for (std::size_t i = 1; i < e->members.size(); ++i) CHECK(e->members[i - 1].mask < e->members[i].mask);
      for (const auto& m : e->members) CHECK(m.eul >= 0);
    }
  }
}

TEST_CASE("enumeration cap is reported as a resource error") {
  HornOptions o;
  o.cap = 1 << 5;
  HornEngine engine(Quiver({"x", "y"}, {{0, 1}}), o);
  CHECK_THROWS_AS(engine.entry(DimensionVector({3, 3})), ResourceError);
  CHECK_THROWS_AS(PackedShape(DimensionVector({40, 30})), ResourceError);
}
