#include "doctest.h"
#include "support.hpp"
#include "ulrc/constructions.hpp"
#include "ulrc/simulation.hpp"

using namespace ulrc;

TEST_SUITE_BEGIN("simulation");

TEST_CASE("identical seeds give identical reports") {
  const auto pc = pyramid_unequal(InfoLocalityProfile{{0, 4, 3, 4}}, 3, 16);
  const auto a = run_erasure_simulation(pc.code, 200, 2, 424242);
  const auto b = run_erasure_simulation(pc.code, 200, 2, 424242);
  CHECK(a == b);
  const auto c = run_erasure_simulation(pc.code, 200, 2, 424243);
  CHECK(a != c);
}

TEST_CASE("no erasures decode always") {
  const auto pc = pyramid_unequal(InfoLocalityProfile{{0, 4}}, 3, 16);
  const auto report = run_erasure_simulation(pc.code, 100, 0, 7);
  CHECK(report.decode_successes == 100);
  CHECK(report.pattern_size_histogram.at(0) == 100);
}

TEST_CASE("erasing below the distance always decodes") {
  const auto pc = pyramid_unequal(InfoLocalityProfile{{0, 4, 3, 4}}, 3, 16);
  const int d = min_distance(pc.code);
  const auto report = run_erasure_simulation(pc.code, 300, d - 1, 99);
  CHECK(report.decode_successes == 300);
}

TEST_CASE("erasing everything never decodes") {
  const auto pc = pyramid_unequal(InfoLocalityProfile{{0, 4}}, 2, 16);
  const auto report = run_erasure_simulation(pc.code, 50, pc.code.length(), 3);
  CHECK(report.decode_successes == 0);
  CHECK(report.local_repair_histogram.empty());
  CHECK(report.locally_unrepairable == 50 * pc.code.length());
}

TEST_CASE("repair histogram accounts every erased symbol") {
  const auto pc = pyramid_unequal(InfoLocalityProfile{{0, 4, 3, 4}}, 3, 16);
  const std::uint64_t trials = 150;
  const std::size_t erasures = 3;
  const auto report = run_erasure_simulation(pc.code, trials, erasures, 11);
  std::uint64_t accounted = report.locally_unrepairable;
  for (const auto& [loc, count] : report.local_repair_histogram) {
    CHECK(loc >= 1);
    accounted += count;
  }
  CHECK(accounted == trials * erasures);
}

TEST_CASE("erasing more symbols than the code has is rejected") {
  const auto pc = pyramid_unequal(InfoLocalityProfile{{0, 4}}, 2, 16);
  CHECK_THROWS_AS(run_erasure_simulation(pc.code, 10, pc.code.length() + 1, 1),
                  PreconditionError);
}

TEST_SUITE_END();
