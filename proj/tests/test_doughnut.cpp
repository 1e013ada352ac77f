#include <gtest/gtest.h>

#include "sesim/doughnut.hpp"
#include "support.hpp"

namespace sesim {
namespace {

TEST(SocialOutcomes, ReferenceIncomeAdequacy) {
  const auto& bau = test::reference_runs().at("bau");
  EXPECT_LT(bau.at_year(2020).at("social:income_adequacy"), 1.0);
  EXPECT_GE(bau.at_year(2070).at("social:income_adequacy"), 1.0);
}

TEST(SocialOutcomes, JobAvailability) {
  const auto& runs = test::reference_runs();
  EXPECT_GE(runs.at("all_three").at_year(2070).at("social:job_availability"), 1.0);
  const auto& t = test::reference().thresholds;
  const auto best = social_outcomes({0.0, 0.0, 1.0}, t);
  const auto worse = social_outcomes({0.01, 0.0, 1.0}, t);
  auto job = [](const std::vector<SocialOutcome>& v) {
    for (const auto& o : v)
      if (o.id == "job_availability") return o.value;
    return -1.0;
  };
  EXPECT_DOUBLE_EQ(job(best), 1.0 / (1.0 - t.max_unemployment_rate));
  EXPECT_LT(job(worse), job(best));
}

TEST(SocialOutcomes, AllTwelvePresentAndMarked) {
  const auto v = social_outcomes({0.1, 0.2, 5000.0}, test::reference().thresholds);
  ASSERT_EQ(v.size(), kSocialOutcomes.size());
  int simulated = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    EXPECT_EQ(v[i].id, kSocialOutcomes[i]);
    EXPECT_GE(v[i].value, 0.0);
    EXPECT_EQ(v[i].threshold, 1.0);
    simulated += v[i].simulated;
  }
  EXPECT_EQ(simulated, 3);
}

TEST(DoughnutReport, ReferencePattern) {
  const auto& runs = test::reference_runs();
  const auto& bau = runs.at("bau");
  EXPECT_EQ(bau.at_year(2020).at("overshoot_count"), 3.0);
  EXPECT_EQ(bau.at_year(2070).at("overshoot_count"), 5.0);
  EXPECT_LT(runs.at("all_three").at_year(2070).at("co2_overshoot_ratio"),
            bau.at_year(2070).at("co2_overshoot_ratio"));
}

TEST(DoughnutReport, Deterministic) {
  BoundaryRatios r = {1.2, 0.5, 2.0, 0.9, 1.1};
  const SocialDrivers d{0.12, 0.15, 9000.0};
  const auto& t = test::reference().thresholds;
  const auto a = doughnut_report(2040, "x", r, d, t);
  const auto b = doughnut_report(2040, "x", r, d, t);
  ASSERT_EQ(a.social.size(), b.social.size());
  for (std::size_t i = 0; i < a.social.size(); ++i) EXPECT_EQ(a.social[i].value, b.social[i].value);
  EXPECT_EQ(a.overshoots(), 3);
  EXPECT_TRUE(a.outcome("job_availability").shortfall());
  EXPECT_THROW(a.outcome("happiness"), MissingComponent);
}

TEST(DoughnutReport, FairnessRisesDuringPhaseIn) {
  const auto& red = test::reference_runs().at("redistribution");
  for (int y = 2031; y <= 2035; ++y)
    EXPECT_GE(red.at_year(y).at("social:income_fairness"),
              red.at_year(y - 1).at("social:income_fairness"))
        << y;
}

TEST(DoughnutReport, WtrWeaklyRaisesJobAvailability) {
  const auto& runs = test::reference_runs();
  const auto& bau = runs.at("bau");
  for (const auto& y : runs.at("wtr").years)
    EXPECT_GE(y.at("social:job_availability"), bau.at_year(y.year).at("social:job_availability"))
        << y.year;
}

}  // namespace
}  // namespace sesim
