#include <gtest/gtest.h>

#include "tlsum/selftest.h"

namespace tlsum {
namespace {

SelfTestOptions Small() {
  SelfTestOptions opt;
  opt.instances = 5;
  opt.trials = 2000;
  opt.guarantee_instances = 40;
  return opt;
}

TEST(SelfTestTest, PassesOnShippedComponents) {
  const auto report = RunSelfTest(Small());
  for (const auto& c : report.checks) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  EXPECT_TRUE(report.passed());
}

TEST(SelfTestTest, InjectedFaultIsCaught) {
  auto opt = Small();
  opt.inject_fault = true;
  const auto report = RunSelfTest(opt);
  EXPECT_FALSE(report.passed());
  bool submodular_failed = false;
  for (const auto& c : report.checks) {
    if (!c.passed && c.name.find("submodular") != std::string::npos) submodular_failed = true;
  }
  EXPECT_TRUE(submodular_failed);
}

TEST(SelfTestTest, SupermodularFixtureViolatesDiminishingReturns) {
  const auto f = SupermodularFixture(8);
  EXPECT_FALSE(CheckMonotoneSubmodular(*f, 500, 1).submodular());
}

}  // namespace
}  // namespace tlsum
