#include <gtest/gtest.h>

#include "test_support.hpp"

namespace intension {
namespace {

using testing::Rng;

TEST(ExclusiveParams, Validation) {
  EXPECT_THROW(ExclusiveCaseParams(2, 3, 3), Error);
  EXPECT_THROW(ExclusiveCaseParams(0, 1, 0), Error);
  ExclusiveCaseParams p(4, 3, 2);
  EXPECT_EQ(p.s(), 5u);
  EXPECT_EQ(p.p() * static_cast<double>(p.s()), 1.0);
}

TEST(ExclusiveShannon, Examples) {
  for (std::size_t n = 1; n <= 5; ++n)
    for (std::size_t m = n; m <= 6; ++m) EXPECT_EQ(exclusive_shannon({n, m, n}), 1.0);
  EXPECT_EQ(exclusive_shannon({4, 3, 2}), 0.5);
  EXPECT_EQ(exclusive_shannon({3, 5, 0}), 0.0);
}

TEST(ExclusiveShannon, AgreesWithEnumeration) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t m = 1; m <= 8; ++m)
      for (std::size_t k = 1; k <= std::min(n, m); ++k) {
        auto ex = build_exclusive_world(n, m, k);
        EXPECT_NEAR(exclusive_shannon({n, m, k}), shannon_inheritance(ex.f, ex.w, ex.world).exact_conditional, 1e-12);
      }
}

TEST(ExclusiveAlgorithmic, Examples) {
  auto r = exclusive_algorithmic({4, 3, 2});
  ASSERT_TRUE(r.mutual_information);
  EXPECT_EQ(*r.mutual_information, -1.0);
  EXPECT_EQ(r.conditional, 0.3);

  auto full = exclusive_algorithmic({3, 3, 3});
  EXPECT_EQ(*full.mutual_information, 0.0);
  EXPECT_EQ(full.conditional, 1.0);

  auto third = exclusive_algorithmic({2, 2, 1});
  EXPECT_EQ(*third.mutual_information, -1.0);
  EXPECT_NEAR(third.conditional, 1.0 / 3.0, 1e-15);

  auto none = exclusive_algorithmic({3, 2, 0});
  EXPECT_TRUE(none.no_overlap());
  EXPECT_EQ(none.conditional, 0.0);
}

TEST(ExclusiveAlgorithmic, IsShannonTimesPrior) {
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t m = 1; m <= 8; ++m)
      for (std::size_t k = 1; k <= std::min(n, m); ++k) {
        ExclusiveCaseParams p(n, m, k);
        const double prior = static_cast<double>(m) / static_cast<double>(p.s());
        EXPECT_NEAR(exclusive_algorithmic(p).conditional, exclusive_shannon(p) * prior, 1e-15);
        EXPECT_NEAR(std::exp2(*exclusive_algorithmic(p).mutual_information), exclusive_shannon(p), 1e-15);
      }
}

TEST(FrameworkDiscrepancy, Examples) {
  EXPECT_EQ(framework_discrepancy({4, 3, 2}), 0.2);
  EXPECT_EQ(framework_discrepancy({1, 1, 1}), 0.0);
  EXPECT_EQ(framework_discrepancy({3, 7, 3}), 0.0);
  EXPECT_THROW(framework_discrepancy({3, 7, 0}), Error);
  for (std::size_t n = 1; n <= 8; ++n)
    for (std::size_t m = 1; m <= 8; ++m)
      for (std::size_t k = 1; k <= std::min(n, m); ++k) {
        ExclusiveCaseParams p(n, m, k);
        const double d = framework_discrepancy(p);
        EXPECT_NEAR(d, exclusive_shannon(p) - exclusive_algorithmic(p).conditional, 1e-15);
        EXPECT_EQ(d == 0.0, k == n);
      }
}

TEST(ExtensionalInheritance, Examples) {
  EXPECT_EQ(extensional_inheritance({{1, 2}, {1, 2, 3}, 4}), 1.0);
  EXPECT_EQ(extensional_inheritance({{1, 2, 3, 4}, {3, 4, 5}, 10}), 0.5);
  EXPECT_EQ(extensional_inheritance({{1, 2}, {3}, 3}), 0.0);
  try {
    extensional_inheritance({{}, {1}, 3});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::EmptyAntecedent);
  }
  EXPECT_THROW(extensional_inheritance({{4}, {1}, 3}), Error);
}

TEST(ExtensionalInheritance, MonotoneInOverlap) {
  const std::set<std::size_t> f{1, 2, 3, 4, 5};
  std::set<std::size_t> w{9, 10};
  double last = extensional_inheritance({f, w, 10});
  for (std::size_t id : f) {
    w.insert(id);
    const double now = extensional_inheritance({f, w, 10});
    EXPECT_GE(now, last);
    last = now;
  }
  EXPECT_EQ(last, 1.0);
}

TEST(SingletonReduction, Examples) {
  auto r = singleton_reduction_check({{1, 2}, {2, 3}, 3});
  EXPECT_NEAR(r.extensional, 0.5, 1e-15);
  EXPECT_NEAR(r.intensional_exact, 0.5, 1e-12);
  auto same = singleton_reduction_check({{1, 3}, {1, 3}, 4});
  EXPECT_EQ(same.extensional, 1.0);
  EXPECT_NEAR(same.intensional_exact, 1.0, 1e-12);
  auto disjoint = singleton_reduction_check({{1}, {2}, 2});
  EXPECT_EQ(disjoint.extensional, 0.0);
  EXPECT_EQ(disjoint.intensional_exact, 0.0);
  EXPECT_THROW(singleton_reduction_check({{1}, {2}, 25}), Error);
}

TEST(SingletonReduction, RandomPairs) {
  Rng rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 10;
    ExtensionalPair pair{{}, {}, n};
    for (std::size_t i = 1; i <= n; ++i) {
      if (rng() % 2) pair.f_extension.insert(i);
      if (rng() % 2) pair.w_extension.insert(i);
    }
    if (pair.f_extension.empty()) pair.f_extension.insert(1 + rng() % n);
    const auto r = singleton_reduction_check(pair);
    EXPECT_NEAR(r.extensional, r.intensional_exact, 1e-12);
  }
}

}  // namespace
}  // namespace intension
