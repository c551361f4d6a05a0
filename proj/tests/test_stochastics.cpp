#include "fuzzydepth/simulate.hpp"

#include <cmath>

#include <doctest.h>

#include "fuzzydepth/errors.hpp"
#include "support/random_gen.hpp"

using namespace fuzzydepth;

TEST_CASE("simulation is deterministic under a fixed seed") {
  SimConfig cfg{100, 12345, 10.0, 1};
  Sample s1 = simulate_trapezoids(cfg);
  Sample s2 = simulate_trapezoids(cfg);
  REQUIRE(s1.items().size() == 100);
  for (std::size_t i = 0; i < 100; ++i) {
    const Trapezoid& a = *s1.items()[i].shape;
    const Trapezoid& b = *s2.items()[i].shape;
    CHECK(a.a == b.a);
    CHECK(a.b == b.b);
    CHECK(a.c == b.c);
    CHECK(a.d == b.d);
  }
  SimConfig other = cfg;
  other.seed = 54321;
  Sample s3 = simulate_trapezoids(other);
  CHECK(s3.items()[0].shape->a != s1.items()[0].shape->a);
}

TEST_CASE("generated trapezoids satisfy the model structure") {
  SimConfig cfg{2000, 99, 10.0, 1};
  Sample s = simulate_trapezoids(cfg);
  for (const SampleItem& it : s.items()) {
    const Trapezoid& t = *it.shape;
    CHECK(t.a <= t.b);
    CHECK(t.b <= t.c);
    CHECK(t.c <= t.d);
    // b - a = X3, c - b = 2 X2, d - c = X4, all nonnegative draws.
    CHECK(t.b - t.a >= 0.0);
    CHECK(t.c - t.b >= 0.0);
    CHECK(t.d - t.c >= 0.0);
  }
}

TEST_CASE("generator moments: E[b] = -dof") {
  const std::size_t n = 100000;
  for (unsigned dof : {1u, 3u}) {
    SimConfig cfg{n, 777, 10.0, dof};
    Sample s = simulate_trapezoids(cfg);
    double mean = 0.0;
    for (const SampleItem& it : s.items()) mean += it.shape->b;
    mean /= static_cast<double>(n);
    double var = 0.0;
    for (const SampleItem& it : s.items()) {
      double dev = it.shape->b - mean;
      var += dev * dev;
    }
    var /= static_cast<double>(n - 1);
    double se = std::sqrt(var / static_cast<double>(n));
    CHECK(std::fabs(mean + static_cast<double>(dof)) <= 3.0 * se);
  }
}

TEST_CASE("config validation") {
  CHECK_THROWS_AS(simulate_trapezoids(SimConfig{1, 1, 10.0, 1}), ConfigError);
  CHECK_THROWS_AS(simulate_trapezoids(SimConfig{10, 1, 0.0, 1}), ConfigError);
  CHECK_THROWS_AS(simulate_trapezoids(SimConfig{10, 1, 10.0, 0}), ConfigError);
}

TEST_CASE("F-symmetry of mirrored atoms") {
  DiscreteFuzzyRV rv({FuzzyNumber::singleton(1.0), FuzzyNumber::singleton(-1.0)},
                     {0.5, 0.5});
  CHECK(f_symmetric(rv, FuzzyNumber::singleton(0.0)));
  CHECK_FALSE(f_symmetric(rv, FuzzyNumber::singleton(1.0)));

  DiscreteFuzzyRV solo({FuzzyNumber::crisp(2.0, 5.0)}, {1.0});
  CHECK(f_symmetric(solo, FuzzyNumber::crisp(2.0, 5.0)));

  // Mirrored translates of a trapezoid around a trapezoid center.
  testgen::Gen gen(42);
  FuzzyNumber center = gen.fuzzy();
  DiscreteFuzzyRV mirrored({add(center, FuzzyNumber::singleton(2.0)),
                            add(center, FuzzyNumber::singleton(-2.0)), center},
                           {0.25, 0.25, 0.5});
  CHECK(f_symmetric(mirrored, center));
  CHECK_FALSE(f_symmetric(mirrored, add(center, FuzzyNumber::singleton(0.5))));
}

TEST_CASE("Monte Carlo containment at the edges") {
  DiscreteFuzzyRV solo({FuzzyNumber::crisp(1.0, 2.0)}, {1.0});
  CHECK(mc_containment(solo, FuzzyNumber::crisp(1.0, 2.0), Direction::plus, 0.5,
                       1000, 3) == 1.0);
  CHECK(mc_containment(solo, FuzzyNumber::singleton(50.0), Direction::plus, 0.5,
                       1000, 3) == 0.0);
  CHECK_THROWS_AS(mc_containment(solo, FuzzyNumber::singleton(0.0),
                                 Direction::plus, 0.5, 10, 3),
                  ConfigError);
}

TEST_CASE("Monte Carlo converges to the containment formula") {
  testgen::Gen gen(314);
  const std::size_t trials = 100000;
  int outside = 0;
  for (int c = 0; c < 50; ++c) {
    std::size_t n_atoms = 2 + gen.index(4);
    std::vector<FuzzyNumber> atoms;
    std::vector<double> probs;
    double total = 0.0;
    for (std::size_t k = 0; k < n_atoms; ++k) {
      atoms.push_back(gen.fuzzy());
      double w = 0.2 + gen.uniform(0.0, 1.0);
      probs.push_back(w);
      total += w;
    }
    for (double& p : probs) p /= total;
    DiscreteFuzzyRV rv(atoms, probs);
    FuzzyNumber query = gen.fuzzy();
    Direction u = gen.uniform(0.0, 1.0) < 0.5 ? Direction::minus : Direction::plus;
    double alpha = gen.uniform(0.0, 1.0);
    double exact = containment_probability(rv, query, u, alpha);
    double mc = mc_containment(rv, query, u, alpha, trials, 1000 + c);
    double band =
        3.0 * std::sqrt(std::max(exact * (1.0 - exact), 0.0) / trials);
    if (std::fabs(exact - mc) > band + 1e-12) ++outside;
  }
  CHECK(outside <= 2);
}
