#include <doctest.h>

#include <random>

#include "qhorn/euler.hpp"
#include "qhorn/errors.hpp"
#include "qhorn/quiver.hpp"
#include "qhorn/weight.hpp"
#include "support/oracles.hpp"

using namespace qhorn;

namespace {

Quiver a2() { return Quiver({"x", "y"}, {{0, 1}}); }

Weight coordinate(const LabeledFamily& ambient, std::size_t x, std::size_t i) {
  auto w = Weight::zero(ambient);
  w.values[x][i] = 1;
  return w;
}

Weight combine(std::initializer_list<std::pair<int, Weight>> terms, const LabeledFamily& ambient) {
  auto out = Weight::zero(ambient);
  for (const auto& [c, w] : terms)
    for (std::size_t x = 0; x < w.values.size(); ++x)
      for (std::size_t i = 0; i < w.values[x].size(); ++i) out.values[x][i] += c * w.values[x][i];
  return out;
}

}  // namespace

TEST_CASE("euler form") {
  CHECK(euler_form(a2(), DimensionVector({1, 1}), DimensionVector({1, 1})) == 1);
  CHECK(euler_form(a2(), DimensionVector({1, 0}), DimensionVector({0, 1})) == -1);
  Quiver bare({"x", "y"}, {});
  CHECK(euler_form(bare, DimensionVector({2, 3}), DimensionVector({4, 5})) == 23);
}

TEST_CASE("hom space dimension") {
  CHECK(dim_hom_space(a2(), DimensionVector({1, 1}), DimensionVector({2, 2})) == 2);
  Quiver kronecker({"x", "y"}, {{0, 1}, {0, 1}});
  CHECK(dim_hom_space(kronecker, DimensionVector({1, 0}), DimensionVector({0, 3})) == 6);
  CHECK(dim_hom_space(Quiver({"x"}, {}), DimensionVector({3}), DimensionVector({3})) == 0);
}

TEST_CASE("compatible maps on subquotients") {
  LabeledFamily j({{1, 2}, {1, 2}});
  auto p = subquotient(j, Subfamily{{{2}, {1, 2}}});
  CHECK(dim_compatible(a2(), p.sub, p.quot) == 1);
  auto r = subquotient(j, Subfamily{{{1}, {1}}});
  CHECK(dim_compatible(a2(), r.sub, r.quot) == 0);
}

TEST_CASE("compatible maps of a canonical family to itself") {
  for (int n = 0; n <= 4; ++n) {
    auto fam = LabeledFamily::canonical(DimensionVector({n, n + 1}));
    CHECK(dim_compatible(a2(), fam, fam) == n * (n + 1) / 2 + (n + 1) * (n + 2) / 2);
  }
}

TEST_CASE("property: compatible dimension matches the step-by-step count") {
  std::mt19937_64 rng(3);
  Quiver q({"x", "y"}, {{0, 1}});
  for (int round = 0; round < 300; ++round) {
    LabeledFamily from({oracle::random_labels(rng, static_cast<int>(rng() % 4), 7),
                        oracle::random_labels(rng, static_cast<int>(rng() % 4), 7)});
    LabeledFamily to({oracle::random_labels(rng, static_cast<int>(rng() % 4), 7),
                      oracle::random_labels(rng, static_cast<int>(rng() % 4), 7)});
    CHECK(dim_compatible(q, from, to) == oracle::compatible_dim(from.labels(), to.labels()));
    CHECK(eul(q, from, to) == oracle::eul(q, from.labels(), to.labels()));
  }
}

TEST_CASE("property: without filtration data eul reduces to the euler form on the hom side") {
  // compatible maps between families with equal single labels are all maps
  Quiver q({"x", "y", "z"}, {{0, 1}, {1, 2}, {0, 2}});
  LabeledFamily v({{1}, {1}, {1}});
  CHECK(eul(q, v, v) == euler_form(q, v.dims(), v.dims()));
}

TEST_CASE("kappa examples") {
  LabeledFamily j({{1, 2}, {1, 2}});
  CHECK(kappa(a2(), j, full_subfamily(j)) == Weight::zero(j));
  CHECK(kappa(a2(), j, empty_subfamily(2)) == Weight::zero(j));
  auto expected = combine({{1, coordinate(j, 0, 0)}, {-1, coordinate(j, 1, 1)}}, j);
  CHECK(kappa(a2(), j, Subfamily{{{1}, {2}}}) == expected);
}

TEST_CASE("property: kappa splits into dominant parts on K and its complement") {
  std::mt19937_64 rng(9);
  std::vector<Quiver> quivers{a2(), Quiver({"x", "y"}, {{0, 1}, {0, 1}}),
                              Quiver({"x", "y", "z"}, {{0, 2}, {1, 2}}),
                              Quiver({"x", "y", "z"}, {{0, 1}, {1, 2}})};
  for (const auto& q : quivers)
    for (int round = 0; round < 60; ++round) {
      std::vector<std::vector<int>> labels;
      for (std::size_t x = 0; x < q.vertex_count(); ++x)
        labels.push_back(oracle::random_labels(rng, static_cast<int>(rng() % 4), 6));
      LabeledFamily j(labels);
      Subfamily k{std::vector<std::vector<int>>(q.vertex_count())};
      for (std::size_t x = 0; x < labels.size(); ++x)
        for (int l : labels[x])
          if (rng() % 2) k.labels[x].push_back(l);
      auto kk = kappa(q, j, k);
      const auto e = eul_subquotient(q, j, k);
      auto rest = oracle::difference(j.labels(), k.labels);
      CHECK(kk.total() == 0);
      CHECK(kk.pair_with(j, k) == -e);
      CHECK(kk.pair_with(j, Subfamily{rest}) == e);
      CHECK(is_dominant(kk.restrict_to(j, k)));
      CHECK(is_dominant(kk.restrict_to(j, Subfamily{rest})));
    }
}

TEST_CASE("checked arithmetic") {
  CHECK(checked::add(2, 3) == 5);
  CHECK(checked::mul(-4, 5) == -20);
  CHECK_THROWS_AS(checked::mul(std::int64_t{1} << 40, std::int64_t{1} << 40), ArithmeticOverflow);
  CHECK_THROWS_AS(checked::add(INT64_MAX, 1), ArithmeticOverflow);
  CHECK_THROWS_AS(checked::sub(INT64_MIN, 1), ArithmeticOverflow);
}

TEST_CASE("rationals and weights") {
  CHECK(parse_rational("5/7") == Rational(5, 7));
  CHECK(parse_rational("-2") == Rational(-2));
  CHECK_THROWS_AS(parse_rational("1/0"), InputError);
  CHECK_THROWS_AS(parse_rational("x"), InputError);
  auto f = parse_quiver("vertex x 1 2\nvertex y 1 2\narrow x y\n");
  auto w = parse_weight_file(f.quiver, f.family, "weight x 2 1\nweight y -1 -2\n");
  CHECK(w.total() == 0);
  CHECK_NOTHROW(DominantWeight(f.family, w));
  auto bad = parse_weight_file(f.quiver, f.family, "weight x 1 2\nweight y 0 0\n");
  CHECK_THROWS_AS(DominantWeight(f.family, bad), InputError);
  CHECK_THROWS_AS(parse_weight_file(f.quiver, f.family, "weight x 1\nweight y 0 0\n"), InputError);
  CHECK_THROWS_AS(parse_weight_file(f.quiver, f.family, "weight x 1 0\n"), InputError);
}
