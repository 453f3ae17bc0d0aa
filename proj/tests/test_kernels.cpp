#include <gtest/gtest.h>

#include <atomic>
#include <random>

#include "nacalg/kernels.hpp"

using namespace nacalg;

TEST(Kernels, EmptySweepFindsNothing) {
  auto ok = [](std::span<const std::size_t>) { return true; };
  EXPECT_FALSE(kernels::serial::first_violation(5, 3, ok).has_value());
  EXPECT_FALSE(kernels::parallel::first_violation(5, 3, ok).has_value());
  EXPECT_FALSE(kernels::first_violation(0, 2, ok).has_value());
}

TEST(Kernels, ArityZeroVisitsTheEmptyTuple) {
  std::atomic<int> calls{0};
  auto bad = [&](std::span<const std::size_t> t) {
    ++calls;
    return !t.empty();
  };
  auto w = kernels::serial::first_violation(3, 0, bad);
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->empty());
}

TEST(Kernels, LexicographicallyFirstWitness) {
  std::mt19937 rng(17);
  for (int t = 0; t < 50; ++t) {
    const std::size_t range = 2 + t % 5, arity = 1 + t % 4;
    std::vector<std::vector<std::size_t>> bad;
    for (int k = 0; k < 3; ++k) {
      std::vector<std::size_t> v(arity);
      for (auto& x : v) x = std::uniform_int_distribution<std::size_t>(0, range - 1)(rng);
      bad.push_back(v);
    }
    auto holds = [&](std::span<const std::size_t> tup) {
      for (const auto& b : bad)
        if (std::equal(b.begin(), b.end(), tup.begin(), tup.end())) return false;
      return true;
    };
    auto expected = *std::min_element(bad.begin(), bad.end());
    auto s = kernels::serial::first_violation(range, arity, holds);
    auto p = kernels::parallel::first_violation(range, arity, holds);
    ASSERT_TRUE(s && p);
    EXPECT_EQ(*s, expected);
    EXPECT_EQ(*p, expected);
  }
}
