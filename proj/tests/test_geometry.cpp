#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <set>

#include "test_util.hpp"
#include "vrpstw/geometry.hpp"

using namespace vrpstw;
using testutil::point_instance;
using testutil::Stop;

namespace {

constexpr double kPi = std::numbers::pi;
double deg(double d) { return d * kPi / 180.0; }

Customer at(Point p) { return {1, p, 0, Weight::from_units(1), 300}; }

Point polar(double degrees, double r = 1000.0) {
  return {r * std::cos(deg(degrees)), r * std::sin(deg(degrees))};
}

std::vector<Customer> customers_at(std::initializer_list<double> degrees) {
  std::vector<Customer> out;
  int id = 1;
  for (double d : degrees) out.push_back({id++, polar(d), 0, Weight::from_units(1), 300});
  return out;
}

}  // namespace

TEST(AngleOf, AxisCases) {
  EXPECT_DOUBLE_EQ(angle_of(at({1, 0}), {0, 0}, 0.0, Direction::counterclockwise), 0.0);
  EXPECT_DOUBLE_EQ(angle_of(at({0, 1}), {0, 0}, 0.0, Direction::counterclockwise), kPi / 2);
  EXPECT_DOUBLE_EQ(angle_of(at({0, 1}), {0, 0}, kPi / 2, Direction::counterclockwise), 0.0);
}

TEST(AngleOf, ClockwiseMirrors) {
  EXPECT_NEAR(angle_of(at({0, 1}), {0, 0}, 0.0, Direction::clockwise), 3 * kPi / 2, 1e-12);
  EXPECT_DOUBLE_EQ(angle_of(at({1, 0}), {0, 0}, 0.0, Direction::clockwise), 0.0);
}

TEST(AngleOf, CustomerAtDepotGetsZero) {
  EXPECT_EQ(angle_of(at({5, 5}), {5, 5}, 1.0, Direction::counterclockwise), 0.0);
  EXPECT_EQ(angle_of(at({5, 5}), {5, 5}, 1.0, Direction::clockwise), 0.0);
}

TEST(AngleOf, AlwaysInHalfOpenRange) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> c(-1e4, 1e4);
  std::uniform_real_distribution<double> z(0, 2 * kPi);
  for (int i = 0; i < 5000; ++i) {
    for (auto dir : {Direction::clockwise, Direction::counterclockwise}) {
      const double a = angle_of(at({c(rng), c(rng)}), {c(rng), c(rng)}, z(rng), dir);
      EXPECT_GE(a, 0.0);
      EXPECT_LT(a, kTwoPi);
    }
  }
  EXPECT_LT(normalize_angle(-1e-18), kTwoPi);
}

TEST(ChooseZeroAngle, LargestGapMidpoint) {
  EXPECT_NEAR(choose_zero_angle(customers_at({10, 20, 200}), {0, 0}), deg(110), 1e-12);
}

TEST(ChooseZeroAngle, SingleCustomerFacesAway) {
  EXPECT_NEAR(choose_zero_angle(customers_at({30}), {0, 0}), deg(210), 1e-12);
}

TEST(ChooseZeroAngle, FirstOfTiedGapsWins) {
  EXPECT_NEAR(choose_zero_angle(customers_at({0, 180}), {0, 0}), deg(90), 1e-12);
}

TEST(ChooseZeroAngle, EmptyIsDomainError) {
  EXPECT_THROW(choose_zero_angle(std::vector<Customer>{}, {0, 0}), std::domain_error);
}

TEST(ChooseZeroAngle, RotatesWithTheInput) {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> ang(0, 360);
  std::uniform_real_distribution<double> rad(100, 9000);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<double> degrees;
    for (int i = 0; i < 12; ++i) degrees.push_back(ang(rng));
    const double phi = ang(rng);
    std::vector<Customer> base;
    std::vector<Customer> turned;
    for (double d : degrees) {
      const double r = rad(rng);
      base.push_back(at(polar(d, r)));
      turned.push_back(at(polar(d + phi, r)));
    }
    const double z0 = choose_zero_angle(base, {0, 0});
    const double z1 = choose_zero_angle(turned, {0, 0});
    const double diff = normalize_angle(z1 - z0 - deg(phi) + 1e-9) - 1e-9;
    EXPECT_NEAR(diff, 0.0, 1e-7) << "trial " << trial;
  }
}

TEST(PolarView, SectorExamples) {
  const auto inst = point_instance({{1, 0, 3600}}, {{0, 1, 300, polar(10)},
                                                    {0, 1, 300, polar(20)},
                                                    {0, 1, 300, polar(200)}});
  const PolarView view(inst, 0.0, Direction::counterclockwise);
  EXPECT_TRUE(view.sector(deg(50), deg(50)).empty());
  EXPECT_EQ(view.sector(0.0, kTwoPi).size(), 3u);
  EXPECT_EQ(view.sector(0.0, deg(100)), (std::vector<CustomerIndex>{0, 1}));
  EXPECT_THROW(view.sector(1.0, 0.5), std::domain_error);
  EXPECT_THROW(view.sector(0, 1.0, 0.5), std::domain_error);
}

TEST(PolarView, HalfOpenMembership) {
  const auto inst = point_instance({{1, 0, 3600}}, {{0, 1, 300, polar(0)}, {0, 1, 300, polar(90)}});
  const PolarView view(inst, 0.0, Direction::counterclockwise);
  const double a1 = view.angle(1);
  EXPECT_EQ(view.sector(0.0, a1), (std::vector<CustomerIndex>{0}));
  EXPECT_EQ(view.sector(a1, kTwoPi), (std::vector<CustomerIndex>{1}));
}

TEST(PolarView, TiesOrderedByDistanceThenId) {
  // Three customers on the same ray, ids 1..3 at distances 300, 100, 100.
  const auto inst = point_instance({{1, 0, 3600}}, {{0, 1, 300, {300, 0}},
                                                    {0, 1, 300, {100, 0}},
                                                    {0, 1, 300, {100, 0}}});
  const PolarView view(inst, kPi, Direction::counterclockwise);
  ASSERT_EQ(view.order().size(), 3u);
  EXPECT_EQ(view.order()[0], 1u);
  EXPECT_EQ(view.order()[1], 2u);
  EXPECT_EQ(view.order()[2], 0u);
  // Tied customers still get distinct, increasing angles.
  EXPECT_LT(view.angle(1), view.angle(2));
  EXPECT_LT(view.angle(2), view.angle(0));
  EXPECT_EQ(view.sector(view.angle(1), view.angle(2)), (std::vector<CustomerIndex>{1}));
}

TEST(PolarView, WindowOrdersFollowGlobalOrder) {
  std::vector<Stop> stops;
  for (int i = 0; i < 30; ++i) stops.push_back({static_cast<std::size_t>(i % 3), 1, 300, polar(i * 11.0)});
  const auto inst = point_instance({{1, 0, 100}, {2, 100, 200}, {3, 200, 300}}, stops);
  const PolarView view(inst, Direction::counterclockwise);
  for (std::size_t j = 0; j < 3; ++j) {
    const auto w = view.window_order(j);
    EXPECT_EQ(w.size(), 10u);
    for (std::size_t k = 1; k < w.size(); ++k) EXPECT_LT(view.angle(w[k - 1]), view.angle(w[k]));
    for (auto a : w) EXPECT_EQ(inst.customer(a).window, j);
  }
}

TEST(PolarView, SectorsPartitionCustomers) {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> c(-5000, 5000);
  std::uniform_real_distribution<double> cut(0, kTwoPi);
  std::vector<Stop> stops;
  for (int i = 0; i < 200; ++i) stops.push_back({0, 1, 300, {c(rng), c(rng)}});
  stops.push_back({0, 1, 300, {0, 0}});  // at the depot
  const auto inst = point_instance({{1, 0, 3600}}, stops);
  for (auto dir : {Direction::clockwise, Direction::counterclockwise}) {
    const PolarView view(inst, dir);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> phi{0.0, kTwoPi};
      for (int k = 0; k < 6; ++k) phi.push_back(cut(rng));
      std::sort(phi.begin(), phi.end());
      std::multiset<CustomerIndex> seen;
      for (std::size_t k = 1; k < phi.size(); ++k) {
        for (auto a : view.sector(phi[k - 1], phi[k])) seen.insert(a);
      }
      ASSERT_EQ(seen.size(), inst.size());
      for (CustomerIndex a = 0; a < inst.size(); ++a) EXPECT_EQ(seen.count(a), 1u);
    }
  }
}

TEST(PolarView, ClockwiseEqualsMirroredCounterclockwise) {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> c(-5000, 5000);
  std::vector<Stop> stops;
  std::vector<Stop> mirrored;
  for (int i = 0; i < 100; ++i) {
    const Point p{c(rng), c(rng)};
    stops.push_back({0, 1, 300, p});
    mirrored.push_back({0, 1, 300, {p.x, -p.y}});
  }
  const auto inst = point_instance({{1, 0, 3600}}, stops);
  const auto mirror = point_instance({{1, 0, 3600}}, mirrored);
  const double z = 1.234;
  const PolarView cw(inst, z, Direction::clockwise);
  const PolarView ccw(mirror, kTwoPi - z, Direction::counterclockwise);
  ASSERT_EQ(cw.order().size(), ccw.order().size());
  for (std::size_t k = 0; k < cw.order().size(); ++k) {
    EXPECT_EQ(cw.order()[k], ccw.order()[k]);
    EXPECT_NEAR(cw.angle(cw.order()[k]), ccw.angle(ccw.order()[k]), 1e-9);
  }
}

TEST(PolarView, BoundaryBeforeSeparatesNeighbours) {
  const auto inst = point_instance({{1, 0, 3600}}, {{0, 1, 300, polar(10)},
                                                    {0, 1, 300, polar(20)},
                                                    {0, 1, 300, polar(200)}});
  const PolarView view(inst, 0.0, Direction::counterclockwise);
  const auto order = view.order();
  EXPECT_EQ(view.boundary_before(order, 0), 0.0);
  EXPECT_EQ(view.boundary_before(order, 3), kTwoPi);
  EXPECT_NEAR(view.boundary_before(order, 1), deg(15), 1e-12);
  EXPECT_NEAR(view.boundary_before(order, 2), deg(110), 1e-12);
  for (std::size_t pos = 0; pos <= 3; ++pos) {
    EXPECT_EQ(view.count_below(order, view.boundary_before(order, pos)), pos);
  }
}
