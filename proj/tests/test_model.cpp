#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "vrpstw/model.hpp"

using namespace vrpstw;
using testutil::matrix_instance;
using testutil::Stop;

TEST(TravelTime, IdenticalPointsTakeZero) {
  EXPECT_EQ(travel_time({0, 0}, {0, 0}, 5.5556), 0);
}

TEST(TravelTime, GridSideAtTwentyKmhIsOneHour) {
  EXPECT_EQ(travel_time({0, 0}, {20000, 0}, kmh_to_mps(20.0)), 3600);
}

TEST(TravelTime, FiveHundredMetres) {
  EXPECT_EQ(travel_time({0, 0}, {300, 400}, kmh_to_mps(20.0)), 90);
}

TEST(TravelTime, RoundsToNearestSecond) {
  // 20 km/h is 5.5556 m/s; 8 m takes 1.44 s, 9 m takes 1.62 s.
  EXPECT_EQ(travel_time({0, 0}, {8, 0}, kmh_to_mps(20.0)), 1);
  EXPECT_EQ(travel_time({0, 0}, {9, 0}, kmh_to_mps(20.0)), 2);
}

TEST(TravelTime, NonPositiveSpeedIsConfigError) {
  EXPECT_THROW(travel_time({0, 0}, {1, 1}, 0.0), ConfigError);
  EXPECT_THROW(travel_time({0, 0}, {1, 1}, -3.0), ConfigError);
}

TEST(TravelTime, SymmetricOnRandomPoints) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> coord(-30000, 30000);
  for (int i = 0; i < 2000; ++i) {
    Point p{coord(rng), coord(rng)};
    Point q{coord(rng), coord(rng)};
    EXPECT_EQ(travel_time(p, q, 5.0), travel_time(q, p, 5.0));
  }
}

TEST(Weight, FixedPrecisionSumsCompareExactly) {
  const Weight w = Weight::from_units(0.1) + Weight::from_units(0.2);
  EXPECT_EQ(w, Weight::from_units(0.3));
  EXPECT_EQ(Weight::from_units(14.999).milli(), 14999);
  EXPECT_THROW(Weight::from_units(std::nan("")), ConfigError);
}

TEST(InstanceValidation, RejectsBrokenInput) {
  const std::vector<Customer> one{{1, {1, 1}, 0, Weight::from_units(1), 300}};
  EXPECT_THROW(Instance({{1, 10, 10}}, one, {}, Weight::from_units(5), 20), ConfigError);
  EXPECT_THROW(Instance({{1, 0, 100}, {2, 50, 150}}, one, {}, Weight::from_units(5), 20),
               ConfigError);
  EXPECT_THROW(Instance({{1, 0, 100}}, one, {}, Weight::from_units(5), 0), ConfigError);
  EXPECT_THROW(Instance({{1, 0, 100}}, one, {}, Weight::from_units(0.5), 20), ConfigError);
  auto bad_window = one;
  bad_window[0].window = 3;
  EXPECT_THROW(Instance({{1, 0, 100}}, bad_window, {}, Weight::from_units(5), 20), ConfigError);
  auto no_service = one;
  no_service[0].service = 0;
  EXPECT_THROW(Instance({{1, 0, 100}}, no_service, {}, Weight::from_units(5), 20), ConfigError);
  auto twice = one;
  twice.push_back(one[0]);
  EXPECT_THROW(Instance({{1, 0, 100}}, twice, {}, Weight::from_units(5), 20), ConfigError);
  // Touching windows are allowed.
  EXPECT_NO_THROW(Instance({{1, 0, 100}, {2, 100, 200}}, one, {}, Weight::from_units(5), 20));
}

namespace {

// Customers a (0) and b (1), depot last.
Instance two_stop_instance() {
  return matrix_instance({{1, 0, 3600}, {2, 3600, 7200}},
                         {{0, 1.0, 300}, {1, 1.0, 300}},
                         {{0, 200, 100}, {200, 0, 150}, {100, 150, 0}});
}

}  // namespace

TEST(TourObjectives, SingleCustomer) {
  const auto inst = matrix_instance({{1, 0, 3600}}, {{0, 1.0, 300}}, {{0, 90}, {90, 0}});
  const auto cost = tour_objectives({{0}, {1234}}, inst);
  EXPECT_EQ(cost.duration, 480);
  EXPECT_EQ(cost.travel, 180);
}

TEST(TourObjectives, TwoCustomerFormula) {
  const auto inst = two_stop_instance();
  const auto cost = tour_objectives({{0, 1}, {3600, 4100}}, inst);
  EXPECT_EQ(cost.duration, 1050);
  EXPECT_EQ(cost.travel, 450);
}

TEST(TourObjectives, WaitingLengthensDurationOnly) {
  const auto inst = two_stop_instance();
  const auto tight = tour_objectives({{0, 1}, {3600, 4100}}, inst);
  const auto waiting = tour_objectives({{0, 1}, {3600, 4500}}, inst);
  EXPECT_GT(waiting.duration, tight.duration);
  EXPECT_EQ(waiting.travel, tight.travel);
}

TEST(TourObjectives, EmptyOrMismatchedIsDomainError) {
  const auto inst = two_stop_instance();
  EXPECT_THROW(tour_objectives({}, inst), std::domain_error);
  EXPECT_THROW(tour_objectives({{0, 1}, {3600}}, inst), std::domain_error);
}

TEST(ScheduleObjective, SumsTours) {
  const auto inst = two_stop_instance();
  EXPECT_EQ(schedule_objective({}, inst), (Objective{0, 0, 0}));
  const Tour tour{{0, 1}, {3600, 4100}};
  EXPECT_EQ(schedule_objective({{tour, tour}}, inst), (Objective{2, 2100, 900}));
}

TEST(LexCompare, Examples) {
  EXPECT_EQ(lex_compare({53, 9999, 9999}, {54, 1, 1}), std::strong_ordering::less);
  EXPECT_EQ(lex_compare({54, 480, 999}, {54, 507, 1}), std::strong_ordering::less);
  EXPECT_EQ(lex_compare({54, 480, 330}, {54, 480, 330}), std::strong_ordering::equal);
  EXPECT_EQ(lex_compare({54, 480, 331}, {54, 480, 330}), std::strong_ordering::greater);
}

TEST(LexCompare, TotalOrderOnRandomTriples) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> small(0, 2);
  auto draw = [&] { return Objective{small(rng), small(rng), small(rng)}; };
  for (int i = 0; i < 5000; ++i) {
    const auto a = draw();
    const auto b = draw();
    const auto c = draw();
    const auto ab = lex_compare(a, b);
    const auto ba = lex_compare(b, a);
    // Antisymmetry.
    EXPECT_EQ(ab == std::strong_ordering::less, ba == std::strong_ordering::greater);
    EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
    // Transitivity.
    if (ab == std::strong_ordering::less && lex_compare(b, c) == std::strong_ordering::less) {
      EXPECT_EQ(lex_compare(a, c), std::strong_ordering::less);
    }
    // Agrees with tuple order.
    EXPECT_EQ(ab, std::tuple(a.vehicles, a.duration, a.travel) <=>
                      std::tuple(b.vehicles, b.duration, b.travel));
  }
}

namespace {

bool has(const std::vector<Violation>& vs, Violation::Kind kind) {
  for (const auto& v : vs) {
    if (v.kind == kind) return true;
  }
  return false;
}

}  // namespace

TEST(ValidateSchedule, FeasibleSingleTour) {
  const auto inst = two_stop_instance();
  EXPECT_TRUE(validate_schedule({{{{0, 1}, {3600, 4100}}}}, inst).empty());
}

TEST(ValidateSchedule, CapacityExcessNamesTheTour) {
  const auto inst = matrix_instance({{1, 0, 3600}}, {{0, 6.0, 300}, {0, 5.0, 300}},
                                    {{0, 10, 10}, {10, 0, 10}, {10, 10, 0}}, 10.0);
  const auto vs = validate_schedule({{{{0, 1}, {0, 400}}}}, inst);
  ASSERT_TRUE(has(vs, Violation::Kind::capacity));
  EXPECT_EQ(vs.front().tour, 0u);
  // Exactly at capacity is fine.
  const auto ok = matrix_instance({{1, 0, 3600}}, {{0, 5.0, 300}, {0, 5.0, 300}},
                                  {{0, 10, 10}, {10, 0, 10}, {10, 10, 0}}, 10.0);
  EXPECT_TRUE(validate_schedule({{{{0, 1}, {0, 400}}}}, ok).empty());
}

TEST(ValidateSchedule, DuplicateCustomerIsNamed) {
  const auto inst = two_stop_instance();
  const auto vs = validate_schedule({{{{0, 1}, {3600, 4100}}, {{0}, {3000}}}}, inst);
  ASSERT_TRUE(has(vs, Violation::Kind::duplicate_customer));
  for (const auto& v : vs) {
    if (v.kind == Violation::Kind::duplicate_customer) EXPECT_EQ(v.customer_id, 1);
  }
}

TEST(ValidateSchedule, MissingWindowChainingAndUnknown) {
  const auto inst = two_stop_instance();
  EXPECT_TRUE(has(validate_schedule({{{{0}, {3000}}}}, inst), Violation::Kind::missing_customer));
  EXPECT_TRUE(has(validate_schedule({{{{0, 1}, {3601, 4200}}}}, inst), Violation::Kind::window));
  EXPECT_TRUE(has(validate_schedule({{{{0, 1}, {3500, 3700}}}}, inst), Violation::Kind::chaining));
  EXPECT_TRUE(
      has(validate_schedule({{{{0, 1, 7}, {3000, 4000, 5000}}}}, inst), Violation::Kind::unknown_customer));
  EXPECT_TRUE(has(validate_schedule({{{{0, 1}, {3000}}}}, inst), Violation::Kind::malformed_tour));
  EXPECT_TRUE(has(validate_schedule({{{{}, {}}, {{0, 1}, {3600, 4100}}}}, inst),
                  Violation::Kind::malformed_tour));
}

TEST(ValidateSchedule, ClosedWindowBoundsAreInside) {
  const auto inst = two_stop_instance();
  // Window ends are admissible arrival times.
  EXPECT_TRUE(validate_schedule({{{{0, 1}, {3600, 7200}}}}, inst).empty());
  EXPECT_TRUE(validate_schedule({{{{0}, {0}}, {{1}, {3600}}}}, inst).empty());
}

TEST(ValidateSchedule, PerturbationBreaksExactlyTheTightConstraint) {
  const auto inst = two_stop_instance();
  // Chaining needs a gap of 300 + 200 = 500.
  EXPECT_TRUE(validate_schedule({{{{0, 1}, {3200, 3700}}}}, inst).empty());
  EXPECT_TRUE(has(validate_schedule({{{{0, 1}, {3201, 3700}}}}, inst), Violation::Kind::chaining));
}

TEST(DurationIdentity, MatchesFormulaOnRandomTours) {
  std::mt19937_64 rng(5);
  const auto inst = two_stop_instance();
  std::uniform_int_distribution<Seconds> a1(0, 3600);
  for (int i = 0; i < 200; ++i) {
    const Seconds x = a1(rng);
    const Seconds y = std::max<Seconds>(3600, x + 500);
    const auto cost = tour_objectives({{0, 1}, {x, y}}, inst);
    EXPECT_EQ(cost.duration, 100 + (y - x) + 300 + 150);
  }
}
