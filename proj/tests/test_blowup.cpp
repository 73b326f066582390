#include <doctest.h>

#include "bpos/blowup.hpp"
#include "bpos/cones.hpp"

using namespace bpos;

namespace {

DivisorClass cls(int n, int s, i64 d, std::vector<i64> m) {
  return DivisorClass{PointConfig{n, s}, d, std::move(m)};
}

}  // namespace

TEST_SUITE("blowup") {

TEST_CASE("span tower transform records multiplicities as coefficients") {
  auto D = cls(2, 5, 4, {2, 2, 2, 2, 2});
  auto c = strict_transform_linear(D, 1);
  CHECK(c.d == 4);
  CHECK(c.splits.empty());
  CHECK(c.coeffs.size() == 5);
  for (int i = 1; i <= 5; ++i) CHECK(c.coeff({IndexSet::of({i}), 0}) == 2);
  CHECK(c.coeff({IndexSet::of({1, 2}), 0}) == 0);
  CHECK(recover_divisor(c) == D);

  auto c0 = strict_transform_linear(D, 0);
  CHECK(c0.d == 4);
  CHECK(c0.coeffs.size() == 5);

  CHECK_THROWS_AS(strict_transform_linear(D, 2), std::invalid_argument);
  CHECK_THROWS_AS(strict_transform_linear(D, -1), std::invalid_argument);
}

TEST_CASE("fixed hyperplanes split off at the top level") {
  auto D = cls(2, 3, 1, {1, 1, 0});
  auto c = strict_transform_linear(D, 1);
  REQUIRE(c.splits.size() == 1);
  CHECK(c.splits[0].label == JoinLabel{IndexSet::of({1, 2}), 0});
  CHECK(c.splits[0].multiplicity == 1);
  CHECK(c.splits[0].cls == cls(2, 3, 1, {1, 1, 0}));
  CHECK(c.d == 0);
  CHECK(c.coeffs.empty());
  CHECK(recover_divisor(c) == D);
}

TEST_CASE("non-effective classes make the hyperplane split diverge") {
  CHECK_THROWS_AS(strict_transform_linear(cls(2, 4, 1, {1, 1, 1, 1}), 1),
                  std::domain_error);
}

TEST_CASE("secant transform splits the quartic completely") {
  auto D = cls(2, 5, 4, {2, 2, 2, 2, 2});
  auto c = strict_transform_sigma(D);
  CHECK(c.d == 0);
  CHECK(c.coeffs.empty());
  REQUIRE(c.splits.size() == 1);
  CHECK(c.splits[0].label == JoinLabel{IndexSet{}, 1});
  CHECK(c.splits[0].multiplicity == 2);
  CHECK(c.splits[0].cls == cls(2, 5, 2, {1, 1, 1, 1, 1}));
  CHECK(recover_divisor(c) == D);
}

TEST_CASE("secant transform in odd dimension uses anchored divisors") {
  auto D = cls(3, 6, 2, {2, 1, 1, 1, 1, 1});
  auto c = strict_transform_sigma(D);
  CHECK(c.d == 0);
  REQUIRE(c.splits.size() == 1);
  CHECK(c.splits[0].label == JoinLabel{IndexSet::of({1}), 1});
  CHECK(c.splits[0].multiplicity == 1);
  CHECK(c.splits[0].cls == D);
  CHECK(recover_divisor(c) == D);
}

TEST_CASE("secant transform rejects unnamed fixed joins") {
  // Join of the line through p1, p2 and a conic: divisorial on P^4 but not the
  // class of any divisor, so a fixed occurrence is a contract violation.
  auto D = cls(4, 7, 4, {4, 4, 2, 2, 2, 2, 2});
  CHECK_THROWS_AS(strict_transform_sigma(D), std::domain_error);
  CHECK_THROWS_AS(strict_transform_sigma(cls(4, 6, 2, {1, 1, 1, 1, 1, 1})),
                  std::domain_error);
  CHECK_THROWS_AS(strict_transform_sigma(cls(1, 4, 1, {0, 0, 0, 0})),
                  std::domain_error);
}

TEST_CASE("transform keys cover joins up to codimension two") {
  // 4H - 2E_1 - ... on P^4 with s = 7: both span and positive-t keys appear.
  auto D = cls(4, 7, 5, {3, 3, 3, 2, 2, 2, 2});
  auto c = strict_transform_sigma(D);
  CHECK(recover_divisor(c) == D);
  for (const auto& [label, k] : c.coeffs) {
    CHECK(k > 0);
    CHECK(join_dimension(label) <= (label.t > 0 ? 4 - 2 : 4 - 1));
  }
  CHECK(c.coeff({IndexSet::of({1}), 0}) > 0);
}

TEST_CASE("restriction to an exceptional divisor produces the face class") {
  auto D = cls(4, 5, 4, {3, 2, 2, 2, 2});
  auto c = strict_transform_linear(D, 3);
  auto r = restrict_to_exceptional(c, IndexSet::of({1}));
  CHECK(r.level == 2);
  REQUIRE(r.points.size() == 4);
  CHECK(r.points[0] == IndexSet::of({1, 2}));
  CHECK(r.points[3] == IndexSet::of({1, 5}));
  CHECK(r.face == cls(3, 4, 3, {1, 1, 1, 1}));

  // Excess over a face subset matches the ambient excess over the union.
  CHECK(linear_excess(r.face, IndexSet::of({1, 2})) ==
        linear_excess(D, IndexSet::of({1, 2, 3})));
  CHECK(linear_excess(r.face, IndexSet::of({3})) ==
        linear_excess(D, IndexSet::of({1, 4})));

  CHECK_THROWS_AS(restrict_to_exceptional(c, IndexSet::of({1, 2, 3, 4})),
                  std::invalid_argument);
  CHECK_THROWS_AS(restrict_to_exceptional(c, IndexSet{}), std::invalid_argument);
}

TEST_CASE("restriction requires a positive coefficient at the center") {
  auto c = strict_transform_linear(cls(3, 4, 3, {2, 2, 1, 1}), 2);
  CHECK(c.coeff({IndexSet::of({1, 2}), 0}) == 1);
  auto r = restrict_to_exceptional(c, IndexSet::of({1, 2}));
  CHECK(r.level == 0);
  CHECK(r.face.cfg.n == 1);
  CHECK(r.face.d == 1);
  CHECK_THROWS_AS(restrict_to_exceptional(c, IndexSet::of({3, 4})),
                  std::invalid_argument);
}

TEST_CASE("restriction level can be negative when the tower stops early") {
  auto c = strict_transform_linear(cls(3, 4, 3, {2, 2, 1, 1}), 0);
  auto r = restrict_to_exceptional(c, IndexSet::of({1}));
  CHECK(r.level == -1);
  CHECK(r.transformed.policy == SpacePolicy::linear(0));
}

TEST_CASE("standard Cremona transform of a hyperplane") {
  auto h2 = cremona_hyperplane(PointConfig{2, 4}, IndexSet::of({1, 2, 3}));
  CHECK(h2.d == 2);
  CHECK(h2.coeffs.size() == 3);
  CHECK(h2.coeff({IndexSet::of({1}), 0}) == 1);
  CHECK(h2.coeff({IndexSet::of({4}), 0}) == 0);

  auto h3 = cremona_hyperplane(PointConfig{3, 6}, IndexSet::of({1, 2, 3, 4}));
  CHECK(h3.d == 3);
  CHECK(h3.coeff({IndexSet::of({2}), 0}) == 2);
  CHECK(h3.coeff({IndexSet::of({2, 4}), 0}) == 1);
  CHECK(h3.coeff({IndexSet::of({5}), 0}) == 0);
  CHECK(h3.coeffs.size() == 4 + 6);

  CHECK_THROWS_AS(cremona_hyperplane(PointConfig{2, 4}, IndexSet::of({1, 2})),
                  std::invalid_argument);
  CHECK_THROWS_AS(cremona_hyperplane(PointConfig{2, 4}, IndexSet::of({1, 2, 5})),
                  std::invalid_argument);
}

TEST_CASE("Cremona image scales with the degree and rejects mixed support") {
  BlownUpClass pure;
  pure.cfg = PointConfig{2, 4};
  pure.policy = SpacePolicy::linear(0);
  pure.d = 2;
  auto img = cremona_image(pure, IndexSet::of({1, 2, 3}));
  CHECK(img.d == 4);
  CHECK(img.coeff({IndexSet::of({1}), 0}) == 2);

  pure.d = 0;
  auto zero = cremona_image(pure, IndexSet::of({1, 2, 3}));
  CHECK(zero.d == 0);
  CHECK(zero.coeffs.empty());

  pure.d = 1;
  pure.coeffs[{IndexSet::of({1}), 0}] = 1;
  CHECK_THROWS_AS(cremona_image(pure, IndexSet::of({1, 2, 3})),
                  std::invalid_argument);
}

TEST_CASE("global generation on intermediate towers") {
  auto D = cls(2, 5, 5, {2, 2, 2, 2, 2});
  CHECK(is_gg_on_xr(D, 0).is_holds());
  CHECK(is_gg_on_xr(D, 1).is_holds());

  auto gate = is_gg_on_xr(cls(2, 5, 4, {2, 2, 2, 2, 2}), 1);
  CHECK(gate.is_unknown());

  auto v = is_gg_on_xr(cls(2, 3, 2, {2, 1, 0}), 0);
  REQUIRE(v.is_fails());
  CHECK(v.witness == "sum_{i in {1,2}} m_i = 3 > (r+1)*d = 2");
  CHECK(base_point_free_tilde(cls(2, 3, 2, {2, 1, 0})).is_holds());

  CHECK_THROWS_AS(is_gg_on_xr(D, 2), std::invalid_argument);
}

TEST_CASE("log resolution availability tracks the point count") {
  CHECK(log_resolution_applicable(cls(2, 4, 1, {1, 1, 1, 1})).is_holds());
  CHECK(log_resolution_applicable(cls(2, 6, 3, {1, 1, 1, 1, 1, 1})).is_holds());
  CHECK(log_resolution_applicable(cls(2, 5, 4, {2, 2, 2, 2, 2})).is_unknown());
}

}  // TEST_SUITE
