#include "fuzzydepth/pseudosimplex.hpp"

#include <vector>

#include <doctest.h>

#include "fuzzydepth/errors.hpp"
#include "support/random_gen.hpp"

using namespace fuzzydepth;

TEST_CASE("interval pseudosimplex membership") {
  std::vector<Interval> gens{make_interval(0.0, 1.0), make_interval(3.0, 4.0)};
  CHECK(sc_contains(gens, make_interval(2.0, 2.0)));
  CHECK(sc_contains(gens, make_interval(0.0, 4.0)));
  CHECK_FALSE(sc_contains(gens, make_interval(-1.0, 4.0)));

  // The generated set is exactly {[x,y] : x in [0,3], y in [1,4]}.
  CHECK(sc_contains(gens, make_interval(3.0, 4.0)));
  CHECK(sc_contains(gens, make_interval(0.5, 1.0)));
  CHECK_FALSE(sc_contains(gens, make_interval(0.0, 4.5)));

  // A single generator only contains itself.
  std::vector<Interval> solo{make_interval(1.0, 2.0)};
  CHECK(sc_contains(solo, make_interval(1.0, 2.0)));
  CHECK_FALSE(sc_contains(solo, make_interval(1.0, 2.1)));
  CHECK_FALSE(sc_contains(solo, make_interval(1.5, 2.0)));

  CHECK_THROWS_AS(make_interval(2.0, 1.0), OrderingViolation);
}

TEST_CASE("fuzzy pseudosimplex membership") {
  // Singleton generators reduce to one-dimensional betweenness.
  std::vector<FuzzyNumber> singletons{FuzzyNumber::singleton(0.0),
                                      FuzzyNumber::singleton(3.0)};
  CHECK(sf_contains(singletons, FuzzyNumber::singleton(2.0)));
  CHECK_FALSE(sf_contains(singletons, FuzzyNumber::singleton(3.5)));
  // The interval [1,2] sits in the gap between the crisp points.
  CHECK(sf_contains(singletons, FuzzyNumber::crisp(1.0, 2.0)));

  // Every generator belongs to its own pseudosimplex.
  testgen::Gen gen(10);
  for (int rep = 0; rep < 50; ++rep) {
    std::vector<FuzzyNumber> gens{gen.fuzzy(), gen.fuzzy(), gen.fuzzy()};
    for (const FuzzyNumber& g : gens) CHECK(sf_contains(gens, g));
  }
}

TEST_CASE("convex hull members and weights validation") {
  std::vector<FuzzyNumber> gens{FuzzyNumber::crisp(0.0, 1.0),
                                FuzzyNumber::crisp(3.0, 4.0)};
  std::vector<double> w{1.0, 0.0};
  CHECK(convex_hull_member(gens, w) == gens[0]);

  // lambda on the second generator gives [3 lambda, 1 + 3 lambda].
  for (double lambda : {0.0, 0.25, 0.5, 1.0}) {
    std::vector<double> lw{1.0 - lambda, lambda};
    FuzzyNumber combo = convex_hull_member(gens, lw);
    CHECK(combo.level_inf(0.0) == doctest::Approx(3.0 * lambda).epsilon(1e-14));
    CHECK(combo.level_sup(0.0) ==
          doctest::Approx(1.0 + 3.0 * lambda).epsilon(1e-14));
  }

  std::vector<double> bad{0.5, 0.6};
  CHECK_THROWS_AS(convex_hull_member(gens, bad), WeightError);
  std::vector<double> negative{1.5, -0.5};
  CHECK_THROWS_AS(convex_hull_member(gens, negative), WeightError);
}

TEST_CASE("convex combinations always lie in the pseudosimplex") {
  testgen::Gen gen(20);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<FuzzyNumber> gens{gen.fuzzy(), gen.fuzzy()};
    double lambda = gen.uniform(0.0, 1.0);
    std::vector<double> w{1.0 - lambda, lambda};
    CHECK(sf_contains(gens, convex_hull_member(gens, w)));
  }
  // ... while the converse fails: {2} is in S_c[[0,1],[3,4]] but is not a
  // convex combination of the generators.
  std::vector<FuzzyNumber> gens{FuzzyNumber::crisp(0.0, 1.0),
                                FuzzyNumber::crisp(3.0, 4.0)};
  CHECK(sf_contains(gens, FuzzyNumber::singleton(2.0)));
}

TEST_CASE("crisp reduction: singleton generators recover the real simplex") {
  testgen::Gen gen(40);
  for (int rep = 0; rep < 200; ++rep) {
    std::size_t k = 1 + gen.index(4);
    std::vector<FuzzyNumber> gens;
    double lo = 1e9, hi = -1e9;
    for (std::size_t i = 0; i < k; ++i) {
      double x = gen.uniform(-5.0, 5.0);
      lo = std::min(lo, x);
      hi = std::max(hi, x);
      gens.push_back(FuzzyNumber::singleton(x));
    }
    double y = gen.uniform(-6.0, 6.0);
    CHECK(sf_contains(gens, FuzzyNumber::singleton(y)) ==
          (y >= lo - 1e-12 && y <= hi + 1e-12));
  }
}

TEST_CASE("betweenness characterizes two-generator pseudosimplices") {
  FuzzyNumber a1 = FuzzyNumber::crisp(0.0, 1.0);
  FuzzyNumber a2 = FuzzyNumber::crisp(3.0, 4.0);
  CHECK(between(a1, FuzzyNumber::singleton(2.0), a2));
  CHECK_FALSE(between(a1, FuzzyNumber::crisp(-1.0, 0.0), a2));
  CHECK(between(a1, a1, a1));

  CHECK_THROWS_AS(between(a2, a1, a1), NotOrdered);

  testgen::Gen gen(30);
  for (int rep = 0; rep < 200; ++rep) {
    FuzzyNumber lo = gen.fuzzy();
    FuzzyNumber hi = add(lo, gen.fuzzy(0.0, 4.0));  // rr-ordered by shift
    REQUIRE(rr_leq(lo, hi));
    FuzzyNumber candidate = gen.fuzzy(-8.0, 8.0);
    std::vector<FuzzyNumber> gens{lo, hi};
    CHECK(between(lo, candidate, hi) == sf_contains(gens, candidate));
  }
}
