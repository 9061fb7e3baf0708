#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "beurling/errors.hpp"
#include "beurling/number_system.hpp"
#include "brute_force.hpp"

namespace beurling {
namespace {

TEST(NumberSystem, ExplicitPrimesAreSortedWithMultiplicity) {
  const auto s = from_explicit_primes({3.0, 2.0, 2.0}, "t");
  ASSERT_EQ(s.size(), 3u);
  EXPECT_EQ(s.primes()[0], 2.0);
  EXPECT_EQ(s.primes()[1], 2.0);
  EXPECT_EQ(s.primes()[2], 3.0);
  EXPECT_TRUE(s.is_complete());
}

TEST(NumberSystem, RejectsPrimesNotAboveOne) {
  try {
    from_explicit_primes({1.0, 2.0}, "t");
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find('1'), std::string::npos);
  }
  EXPECT_THROW(from_explicit_primes({0.5}, "t"), DomainError);
  EXPECT_THROW(from_explicit_primes({NAN}, "t"), DomainError);
}

TEST(NumberSystem, Sieve) {
  const auto s10 = sieve_classical(10);
  ASSERT_EQ(s10.size(), 4u);
  EXPECT_EQ(s10.primes()[3], 7.0);
  EXPECT_EQ(sieve_classical(100).size(), 25u);
  EXPECT_EQ(sieve_classical(1e6).size(), 78498u);
  EXPECT_FALSE(sieve_classical(100).is_complete());
  EXPECT_THROW(sieve_classical(1.5), DomainError);
}

TEST(NumberSystem, CompletenessIsEnforced) {
  const auto s = sieve_classical(100);
  EXPECT_THROW(counting_functions(s, 101), CompletenessError);
  EXPECT_NO_THROW(counting_functions(s, 100));
}

TEST(NumberSystem, DensitySampling) {
  const auto linear = DensityTarget::function([](double x) { return std::max(0.0, x - 1.0); }, "x-1");
  const auto s = sample_from_density(linear, 5.0);
  ASSERT_EQ(s.size(), 4u);
  for (int k = 0; k < 4; ++k) EXPECT_NEAR(s.primes()[k], k + 2.0, 1e-9);

  const auto zero = DensityTarget::function([](double) { return 0.0; }, "0");
  EXPECT_TRUE(sample_from_density(zero, 100.0).empty());

  // a table reaching 4 at x = 10
  const auto table = DensityTarget::table({1.0, 2.0, 5.0, 10.0}, {0.0, 1.0, 2.5, 4.0}, "li-like");
  const auto t = sample_from_density(table, 10.0);
  EXPECT_EQ(t.size(), 4u);
  EXPECT_LE(t.primes().back(), 10.0);

  EXPECT_THROW(DensityTarget::table({1.0, 2.0, 3.0}, {0.0, 2.0, 1.0}, "bad"), DomainError);
}

TEST(Enumeration, TwoPrimeToTen) {
  auto e = enumerate_integers(from_explicit_primes({2.0, 3.0}, "t"), 10.0);
  std::vector<double> values;
  while (auto atom = e.next()) values.push_back(atom->value);
  EXPECT_EQ(values, (std::vector<double>{1, 2, 3, 4, 6, 8, 9}));
}

TEST(Enumeration, EmptySystemHasOnlyOne) {
  auto e = enumerate_integers(from_explicit_primes({}, "empty"), 10.0);
  auto first = e.next();
  ASSERT_TRUE(first.has_value());
  EXPECT_EQ(first->value, 1.0);
  EXPECT_FALSE(e.next().has_value());
}

TEST(Enumeration, RepeatedPrimeCountsEachExponentVector) {
  auto e = enumerate_integers(from_explicit_primes({2.0, 2.0}, "t"), 4.0);
  std::vector<double> values;
  while (auto atom = e.next()) values.push_back(atom->value);
  EXPECT_EQ(values, (std::vector<double>{1, 2, 2, 4, 4, 4}));
  const auto n = integer_counting_function(from_explicit_primes({2.0, 2.0}, "t"), 4.0);
  EXPECT_EQ(n(4.0), 6.0);
}

TEST(Enumeration, LogValueMatchesExponents) {
  const auto s = from_explicit_primes({1.7, 2.9, 5.3}, "t");
  auto e = enumerate_integers(s, 1e5);
  double previous = -1.0;
  while (auto atom = e.next()) {
    double log_sum = 0.0;
    for (auto [index, mult] : atom->exponents) log_sum += mult * std::log(s.primes()[index]);
    ASSERT_NEAR(atom->log_value, log_sum, 1e-12 * (1.0 + log_sum));
    ASSERT_GE(atom->log_value, previous);
    previous = atom->log_value;
  }
}

TEST(Enumeration, PropertyHeapMatchesBruteForce) {
  std::mt19937_64 rng(20240601);
  std::uniform_int_distribution<int> count(0, 4);
  std::uniform_real_distribution<double> prime(1.3, 20.0);
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<double> primes(count(rng));
    for (double& q : primes) q = prime(rng);
    const auto s = from_explicit_primes(primes, "random");
    const double x_max = 2000.0;
    const auto n = integer_counting_function(s, x_max);
    const auto oracle = testing_oracles::brute_force_integers(primes, x_max);
    for (double x = 1.0; x <= x_max; x += 19.99) {
      ASSERT_EQ(n(x), testing_oracles::count_at_most(oracle, x)) << "trial " << trial << " x " << x;
    }
  }
}

TEST(Counting, TwoPrimeOracle) {
  const auto c = counting_functions(from_explicit_primes({2.0, 3.0}, "t"), 10.0);
  EXPECT_EQ(c.N(10), 7.0);
  EXPECT_EQ(c.pi(10), 2.0);
  EXPECT_NEAR(c.Pi(10), 10.0 / 3.0, 1e-15);
  EXPECT_NEAR(c.psi(10), 4.27666611901605531, 1e-14);  // 3 log 2 + 2 log 3
  EXPECT_EQ(c.N(1), 1.0);
  EXPECT_EQ(c.psi(1), 0.0);
  EXPECT_EQ(c.N.left_limit(1.0), 0.0);
}

TEST(Counting, ClassicalPiOfHundred) {
  const auto c = counting_functions(sieve_classical(100), 100);
  EXPECT_EQ(c.pi(100), 25.0);
  EXPECT_EQ(c.N(100), 100.0);
}

TEST(Counting, PropertyPsiAndPiJumpTogether) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> prime(1.1, 30.0);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<double> primes(5);
    for (double& q : primes) q = prime(rng);
    const auto c = prime_counting_functions(from_explicit_primes(primes, "r"), 1e4);
    ASSERT_EQ(c.psi.size(), c.Pi.size());
    for (std::size_t i = 0; i < c.psi.size(); ++i) ASSERT_EQ(c.psi.jumps()[i], c.Pi.jumps()[i]);
  }
}

TEST(Counting, PropertyPiBounds) {
  const auto c = prime_counting_functions(sieve_classical(1e5), 1e5);
  for (double x = 2.0; x <= 1e5; x *= 1.07) {
    const double pi = c.pi(x);
    const double big_pi = c.Pi(x);
    ASSERT_LE(pi, big_pi + 1e-12);
    ASSERT_LE(big_pi, pi + c.pi(std::sqrt(x)) * std::log2(x) + 1e-12);
  }
}

TEST(Counting, PropertyMonotoneAndVanishBelowOne) {
  const auto c = counting_functions(from_explicit_primes({1.5, 2.5, 7.0}, "t"), 1e4);
  for (const StepFunction* f : {&c.N, &c.pi, &c.Pi, &c.psi}) {
    EXPECT_EQ(f->left_limit(1.0), 0.0);
    for (double w : f->weights()) EXPECT_GT(w, 0.0);
  }
}

TEST(Counting, PsiLogScaleMatchesLinearScale) {
  const auto s = from_explicit_primes({2.0, 3.0}, "t");
  const auto psi = counting_functions(s, 1e6).psi;
  const auto log_psi = psi_log_scale(s, std::log(1e6));
  for (double x = 1.0; x < 1e6; x *= 1.3) EXPECT_NEAR(log_psi(std::log(x)), psi(x), 1e-12 * (1 + psi(x)));
  // far beyond double range for e^x
  const auto far = psi_log_scale(s, 2000.0);
  const double k2 = std::floor(2000.0 / std::log(2.0));
  const double k3 = std::floor(2000.0 / std::log(3.0));
  EXPECT_NEAR(far(2000.0), k2 * std::log(2.0) + k3 * std::log(3.0), 1e-9);
}

}  // namespace
}  // namespace beurling
