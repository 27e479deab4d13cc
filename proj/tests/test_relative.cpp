#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "f4l/relative.hpp"

using namespace f4l;

namespace {

Eigen::VectorXi vec(std::initializer_list<int> v) {
  Eigen::VectorXi out(static_cast<int>(v.size()));
  int i = 0;
  for (int x : v) out(i++) = x;
  return out;
}

}  // namespace

TEST_CASE("hat generators in F4 over B2") {
  const WeylGroup g(RootSystem::build(Type::F4));
  const std::vector<int> levi{1, 2};

  const GroupElement s1 = hat_generator(g, levi, 0);
  const GroupElement s4 = hat_generator(g, levi, 3);
  CHECK(g.apply(s1, vec({0, 0, 0, 1})) == vec({1, 1, 1, 1}));
  CHECK(g.apply(s4, vec({1, 0, 0, 0})) == vec({1, 1, 2, 2}));
  CHECK(g.is_identity(g.compose(s1, s1)));
  CHECK(g.is_identity(g.compose(s4, s4)));

  // Empty Levi subset: the hat generator is the simple reflection itself.
  const GroupElement bare = hat_generator(g, std::vector<int>{}, 2);
  CHECK(bare.perm == g.generator(2).perm);

  CHECK_THROWS_AS(hat_generator(g, levi, 1), std::invalid_argument);
}

TEST_CASE("relative system F4 over B2") {
  const RelativeDatum d = relative_system(Type::F4, {1, 2});
  CHECK(d.rel_type == Type::B2);
  CHECK(d.rel_root_count == 8);
  CHECK(d.display_order == std::vector<int>{0, 3});
  CHECK(d.lengths.at(0) == LengthClass::Long);
  CHECK(d.lengths.at(3) == LengthClass::Short);
  CHECK(d.weights.at(0).value == 3);
  CHECK(d.weights.at(0).provenance == WeightProvenance::Published);
  CHECK(d.weights.at(3).value == 3);
}

TEST_CASE("relative system E7 over three A1") {
  const RelativeDatum d = relative_system(Type::E7, {1, 4, 6});
  CHECK(d.rel_type == Type::F4);
  CHECK(d.rel_root_count == 48);
  CHECK(d.display_order == std::vector<int>{0, 2, 3, 5});
  CHECK(d.lengths.at(0) == LengthClass::Long);
  CHECK(d.lengths.at(2) == LengthClass::Long);
  CHECK(d.lengths.at(3) == LengthClass::Short);
  CHECK(d.lengths.at(5) == LengthClass::Short);
  for (int a : d.hat_nodes) CHECK(d.weights.at(a).provenance == WeightProvenance::Undefined);
}

TEST_CASE("relative system E8 over D4") {
  const RelativeDatum d = relative_system(Type::E8, {1, 2, 3, 4});
  CHECK(d.rel_type == Type::F4);
  CHECK(d.rel_root_count == 48);
  CHECK(d.display_order == std::vector<int>{7, 6, 5, 0});
  CHECK(d.weights.at(7).value == 1);
  CHECK(d.weights.at(7).provenance == WeightProvenance::Criterion);
  CHECK(d.weights.at(6).value == 1);
  CHECK(d.weights.at(6).provenance == WeightProvenance::Criterion);
  CHECK(d.weights.at(5).value == 4);
  CHECK(d.weights.at(5).provenance == WeightProvenance::Published);
  CHECK(d.weights.at(0).value == 4);

  const Eigen::MatrixXi orders = product_order_table(d);
  CHECK(orders(1, 2) == 4);  // double bond between a7 and a6
  CHECK(orders(0, 3) == 2);  // a8 and a1 are not adjacent
  for (int i = 0; i < 4; ++i) CHECK(orders(i, i) == 1);
}

TEST_CASE("relative systems of type G2") {
  const RelativeDatum e6 = relative_system(Type::E6, {0, 2, 4, 5});
  CHECK(e6.rel_type == Type::G2);
  CHECK(e6.rel_root_count == 12);
  CHECK(e6.lengths.at(1) == LengthClass::Long);
  CHECK(e6.lengths.at(3) == LengthClass::Short);
  CHECK(e6.weights.at(1).provenance == WeightProvenance::Undefined);

  const RelativeDatum e8 = relative_system(Type::E8, {0, 1, 2, 3, 4, 5});
  CHECK(e8.rel_type == Type::G2);
  CHECK(e8.rel_root_count == 12);
  CHECK(e8.lengths.at(7) == LengthClass::Long);
  CHECK(e8.lengths.at(6) == LengthClass::Short);
  CHECK(e8.weights.at(7).value == 1);
  CHECK(e8.weights.at(7).provenance == WeightProvenance::Criterion);
  CHECK(e8.weights.at(6).value == 9);
  CHECK(e8.weights.at(6).provenance == WeightProvenance::Published);

  const Eigen::MatrixXi orders = product_order_table(e8);
  CHECK(orders(0, 1) == 6);
}

TEST_CASE("weight-one criterion") {
  {
    const WeylGroup g(RootSystem::build(Type::E7));
    const std::vector<int> levi{1, 4, 6};
    const WeightOneVerdict v = weight_one_criterion(g, levi, 2, 3);
    CHECK(v.sum_is_root);
    CHECK(v.double_sum_not_root);
    CHECK(v.commutes_with_levi);
    CHECK(v.applicable());
  }
  {
    const WeylGroup g(RootSystem::build(Type::E8));
    const std::vector<int> levi{0, 1, 2, 3, 4, 5};
    CHECK(weight_one_criterion(g, levi, 7, 6).applicable());
    // alpha7 touches the Levi subset, so the criterion does not apply to it.
    CHECK_FALSE(weight_one_criterion(g, levi, 6, 7).applicable());
  }
  {
    const WeylGroup g(RootSystem::build(Type::F4));
    const std::vector<int> levi{1, 2};
    const WeightOneVerdict v = weight_one_criterion(g, levi, 0, 3);
    CHECK_FALSE(v.sum_is_root);
    CHECK_FALSE(v.applicable());
    CHECK_THROWS_AS(weight_one_criterion(g, levi, 1, 3), std::invalid_argument);
  }
}

TEST_CASE("criterion length conclusion agrees with the projection classes") {
  const std::vector<std::pair<Type, std::vector<int>>> configs = {
      {Type::F4, {1, 2}},       {Type::E7, {1, 4, 6}},          {Type::E8, {1, 2, 3, 4}},
      {Type::E6, {0, 2, 4, 5}}, {Type::E8, {0, 1, 2, 3, 4, 5}},
  };
  for (const auto& [ambient_t, levi] : configs) {
    const WeylGroup g(RootSystem::build(ambient_t));
    const RelativeDatum d = relative_system(ambient_t, levi);
    for (int a : d.hat_nodes)
      for (int b : d.hat_nodes) {
        if (a == b) continue;
        const WeightOneVerdict v = weight_one_criterion(g, levi, a, b);
        if (!v.applicable()) continue;
        // projected beta is not longer than projected alpha
        const bool beta_longer = d.lengths.at(b) == LengthClass::Long &&
                                 d.lengths.at(a) == LengthClass::Short;
        CHECK_FALSE(beta_longer);
      }
  }
}

TEST_CASE("projection commutes with the stabiliser action") {
  const WeylGroup g(RootSystem::build(Type::E8));
  const std::vector<int> levi{1, 2, 3, 4};
  const RelativeDatum d = relative_system(Type::E8, levi);
  // hat generators fix the orthogonal complement setwise: the images of the
  // projected simples stay inside the span of the projected simples over Q.
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-2, 2);
  for (int trial = 0; trial < 10; ++trial) {
    VectorQ x = VectorQ::Constant(8, Rational(0));
    for (int a : d.hat_nodes) x += Rational(coef(rng)) * d.projected.at(a);
    for (int a : d.hat_nodes) {
      const VectorQ img = g.apply(d.hat_gen.at(a), x);
      // the image is again orthogonal to the Levi span
      for (int l : levi) {
        VectorQ e = VectorQ::Constant(8, Rational(0));
        e(l) = Rational(1);
        CHECK(g.roots().inner(img, e).is_zero());
      }
    }
  }
}

TEST_CASE("folding of E6") {
  const FoldingDatum d = fold_twisted_e6();
  CHECK(d.simple_image == std::vector<int>{5, 1, 4, 3, 2, 0});
  CHECK(d.orbits == std::vector<std::vector<int>>{{1}, {3}, {2, 4}, {0, 5}});
  CHECK(d.weights == std::vector<int>{1, 1, 2, 2});
  CHECK(d.lengths[0] == LengthClass::Long);
  CHECK(d.lengths[1] == LengthClass::Long);
  CHECK(d.lengths[2] == LengthClass::Short);
  CHECK(d.lengths[3] == LengthClass::Short);
  CHECK(d.rel_root_count == 48);
  CHECK(d.rel_cartan == ambient(Type::F4).cartan);

  // order(s4 * s3 s5) = 4: the double bond of the folded diagram.
  const WeylGroup g(RootSystem::build(Type::E6));
  CHECK(g.order(g.compose(d.orbit_gen[1], d.orbit_gen[2])) == 4);
  CHECK(g.order(g.compose(d.orbit_gen[0], d.orbit_gen[1])) == 3);
}

TEST_CASE("case studies all pass") {
  const auto outcomes = case_studies();
  CHECK(outcomes.size() == 6);
  for (const auto& c : outcomes) {
    INFO(c.name, ": expected ", c.expected.dump(), " got ", c.actual.dump());
    CHECK(c.pass);
  }
}

TEST_CASE("levi parsing and errors") {
  CHECK(parse_levi("a2,a3", 4) == std::vector<int>{1, 2});
  CHECK(parse_levi("2,3", 4) == std::vector<int>{1, 2});
  CHECK_THROWS_AS(parse_levi("a9", 4), std::invalid_argument);
  CHECK_THROWS_AS(parse_levi("", 4), std::invalid_argument);
  CHECK_THROWS_AS(relative_system(Type::F4, {0, 1, 2, 3}), std::invalid_argument);
}
