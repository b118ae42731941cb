#include <gtest/gtest.h>

#include "neutralize/gn_verify.hpp"

namespace neutralize {
namespace {

TEST(VerifyGnTest, EngineMatchesUpTo30) {
  EXPECT_EQ(verify_gn_up_to(30), std::nullopt);
}

TEST(VerifyGnTest, MissingSecondPhaseIsCaught) {
  EtaFunction phase1_only = [](const Graph& g) {
    EtaResult r = compute_eta(g);
    r.eta = r.eta_minus;
    return r;
  };
  const auto mismatch = verify_gn_up_to(5, phase1_only);
  ASSERT_TRUE(mismatch.has_value());
  EXPECT_NE(mismatch->find("n=1"), std::string::npos) << *mismatch;
  EXPECT_NE(mismatch->find("x_2"), std::string::npos) << *mismatch;
}

TEST(VerifyGnTest, Range) {
  EXPECT_THROW(verify_gn_up_to(0), RangeError);
  EXPECT_THROW(verify_gn_up_to(38), RangeError);
}

}  // namespace
}  // namespace neutralize
