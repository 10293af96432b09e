#include <gtest/gtest.h>

#include <cstdlib>

#include "assoform/report.hpp"
#include "assoform/suites.hpp"

using namespace assoform;

TEST(Suites, EverySuitePassesOnASmallSample) {
  for (Suite s : kAllSuites) {
    auto report = run_suite(s, 3, 6);
    ASSERT_EQ(report.cases.size(), 6U);
    for (const auto& c : report.cases) EXPECT_TRUE(c.pass) << to_string(s) << " #" << c.index << ": " << c.detail;
  }
}

TEST(Suites, CasesSortedAndDeterministic) {
  auto a = run_suite(Suite::Equivariance, 42, 8);
  setenv("ASSOFORM_THREADS", "1", 1);
  auto b = run_suite(Suite::Equivariance, 42, 8);
  unsetenv("ASSOFORM_THREADS");
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    EXPECT_EQ(a.cases[i].index, i);
    EXPECT_EQ(a.cases[i].input, b.cases[i].input);
  }
  EXPECT_EQ(to_json(a).dump(), to_json(b).dump());
  EXPECT_NE(to_json(run_suite(Suite::Quartic, 1, 3)).dump(), to_json(run_suite(Suite::Quartic, 2, 3)).dump());
}

TEST(Suites, ThreadCap) {
  setenv("ASSOFORM_THREADS", "2", 1);
  EXPECT_LE(worker_count(100), 2U);
  setenv("ASSOFORM_THREADS", "junk", 1);
  EXPECT_GE(worker_count(100), 1U);
  unsetenv("ASSOFORM_THREADS");
  EXPECT_EQ(worker_count(1), 1U);
}

TEST(Suites, Names) {
  for (Suite s : kAllSuites) EXPECT_EQ(parse_suite(to_string(s)), s);
  EXPECT_FALSE(parse_suite("nope").has_value());
}

TEST(CompleteIntersection, Coefficients) {
  EXPECT_EQ(complete_intersection_hilbert(2, 3), (std::vector<std::size_t>{1, 2, 1}));
  EXPECT_EQ(complete_intersection_hilbert(3, 4), (std::vector<std::size_t>{1, 3, 6, 7, 6, 3, 1}));
}

TEST(Report, PolyJson) {
  Json j = to_json(parse_poly("1/2*z1^2 - z2^2", 2, Space::Z));
  EXPECT_EQ(j["text"], "1/2*z1^2 - z2^2");
  EXPECT_EQ(j["terms"][0]["coeff"], "1/2");
  EXPECT_EQ(j["terms"][1]["exponents"], Json::array({0, 2}));
}
