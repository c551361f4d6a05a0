#include "fuzzydepth/depth.hpp"

#include <cmath>
#include <thread>
#include <vector>

#include <doctest.h>

#include "fuzzydepth/errors.hpp"
#include "fuzzydepth/metrics.hpp"
#include "support/random_gen.hpp"
#include "support/reference.hpp"

using namespace fuzzydepth;

namespace {

Sample two_interval_sample() {
  return Sample::from_trapezoids(
      {make_trapezoid(1, 1, 2, 2), make_trapezoid(4, 4, 5, 5)});
}

FuzzyNumber tri(double a, double b, double c, double d) {
  return FuzzyNumber::from_trapezoid(make_trapezoid(a, b, c, d));
}

// The membership counterexample number: B_alpha = [0, 1-2 alpha] up to
// alpha = 1/2 and {0} beyond.
FuzzyNumber counterexample_b() {
  return FuzzyNumber(PLFunction({0.0, 0.5, 1.0}, {1.0, 0.0, 0.0}),
                     PLFunction::constant(0.0));
}

}  // namespace

TEST_CASE("pair measures of the two-interval example") {
  FuzzyNumber r = tri(0.5, 1.5, 1.5, 3.5);
  FuzzyNumber x1 = FuzzyNumber::crisp(1, 2), x2 = FuzzyNumber::crisp(4, 5);
  CHECK(pair_measure(r, x1, x2, Direction::plus) == 0.75);
  CHECK(pair_measure(r, x1, x2, Direction::minus) == 0.5);

  testgen::Gen gen(7);
  FuzzyNumber a = gen.fuzzy();
  CHECK(pair_measure(a, a, a, Direction::plus) == 1.0);
  CHECK(pair_measure(a, a, a, Direction::minus) == 1.0);
}

TEST_CASE("worked example depths, case (i)") {
  Sample sample = two_interval_sample();
  DepthTriple r = empirical_depths(sample, tri(0.5, 1.5, 1.5, 3.5));
  CHECK(r.d_ms == doctest::Approx(5.0 / 8.0).epsilon(1e-14));
  CHECK(r.d_fs == doctest::Approx(0.5).epsilon(1e-14));

  DepthTriple g = empirical_depths(sample, tri(23.0 / 6.0, 4.5, 4.5, 4.5));
  CHECK(g.d_ms == doctest::Approx(5.0 / 8.0).epsilon(1e-14));
  CHECK(g.d_fs == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("worked example depths, case (ii)") {
  Sample sample = two_interval_sample();
  DepthTriple r = empirical_depths(sample, tri(0.5, 0.5, 0.5, 2.5));
  CHECK(r.d_ms == doctest::Approx(1.0 / 8.0).epsilon(1e-14));
  CHECK(r.d_fs == 0.0);

  DepthTriple g = empirical_depths(sample, tri(2, 6, 6, 6));
  CHECK(g.d_ms == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(g.d_fs == 0.0);
}

TEST_CASE("sample too small") {
  Sample one = Sample::from_trapezoids({make_trapezoid(0, 0, 1, 1)});
  CHECK_THROWS_AS(empirical_depths(one, FuzzyNumber::singleton(0.0)),
                  SampleTooSmall);
}

TEST_CASE("empirical depths match the naive double-loop reference") {
  testgen::Gen gen(1001);
  for (int rep = 0; rep < 100; ++rep) {
    std::size_t n = 2 + gen.index(8);
    Sample sample = gen.sample(n);
    FuzzyNumber query = rep % 3 == 0 ? sample.items()[gen.index(n)].value
                                     : gen.fuzzy();
    DepthTriple got = empirical_depths(sample, query);
    reference::Depths want = reference::empirical_depths(sample, query);
    CHECK(got.d_ns == doctest::Approx(want.d_ns).epsilon(1e-12));
    CHECK(got.d_ms == doctest::Approx(want.d_ms).epsilon(1e-12));
    CHECK(got.d_fs == doctest::Approx(want.d_fs).epsilon(1e-12));
  }
}

TEST_CASE("multiplicities expand exactly") {
  testgen::Gen gen(1002);
  std::vector<SampleItem> items;
  std::vector<Trapezoid> flat;
  for (int k = 0; k < 4; ++k) {
    Trapezoid t = gen.trapezoid();
    std::uint32_t count = 1 + static_cast<std::uint32_t>(gen.index(3));
    items.push_back({FuzzyNumber::from_trapezoid(t), t, count, ""});
    for (std::uint32_t c = 0; c < count; ++c) flat.push_back(t);
  }
  Sample grouped(items);
  Sample expanded = Sample::from_trapezoids(flat);
  FuzzyNumber query = gen.fuzzy();
  DepthTriple a = empirical_depths(grouped, query);
  DepthTriple b = empirical_depths(expanded, query);
  CHECK(a.d_ns == doctest::Approx(b.d_ns).epsilon(1e-13));
  CHECK(a.d_ms == doctest::Approx(b.d_ms).epsilon(1e-13));
  CHECK(a.d_fs == doctest::Approx(b.d_fs).epsilon(1e-13));
}

TEST_CASE("ordering chain and range of the three depths") {
  testgen::Gen gen(1003);
  for (int rep = 0; rep < 200; ++rep) {
    Sample sample = gen.sample(2 + gen.index(29));
    FuzzyNumber query =
        rep % 4 == 0 ? sample.items()[gen.index(sample.items().size())].value
                     : gen.fuzzy();
    DepthTriple d = empirical_depths(sample, query);
    CHECK(d.d_ns >= 0.0);
    CHECK(d.d_ms <= 1.0 + 1e-12);
    CHECK(d.d_ns <= d.d_fs + 1e-12);
    CHECK(d.d_fs <= d.d_ms + 1e-12);
  }
}

TEST_CASE("affine invariance of the empirical depths") {
  testgen::Gen gen(1004);
  for (int rep = 0; rep < 100; ++rep) {
    std::size_t n = 2 + gen.index(6);
    Sample sample = gen.sample(n);
    FuzzyNumber query =
        rep % 3 == 0 ? sample.items()[gen.index(n)].value : gen.fuzzy();
    double gamma = gen.uniform(0.2, 3.0) * (rep % 2 == 0 ? 1.0 : -1.0);
    FuzzyNumber shift = gen.fuzzy();

    std::vector<SampleItem> mapped;
    for (const SampleItem& it : sample.items())
      mapped.push_back(
          {add(scale(gamma, it.value), shift), std::nullopt, it.count, ""});
    Sample mapped_sample(mapped);
    FuzzyNumber mapped_query = add(scale(gamma, query), shift);

    DepthTriple before = empirical_depths(sample, query);
    DepthTriple after = empirical_depths(mapped_sample, mapped_query);
    CHECK(after.d_ns == doctest::Approx(before.d_ns).epsilon(1e-9));
    CHECK(after.d_ms == doctest::Approx(before.d_ms).epsilon(1e-9));
    CHECK(after.d_fs == doctest::Approx(before.d_fs).epsilon(1e-9));
  }
}

TEST_CASE("naive depth reduces to univariate simplicial depth on singletons") {
  testgen::Gen gen(1005);
  for (int rep = 0; rep < 50; ++rep) {
    std::size_t n = 2 + gen.index(20);
    std::vector<Trapezoid> shapes;
    std::vector<double> xs;
    for (std::size_t i = 0; i < n; ++i) {
      double x = gen.uniform(-5.0, 5.0);
      xs.push_back(x);
      shapes.push_back(crisp_point(x));
    }
    Sample sample = Sample::from_trapezoids(shapes);
    double x = rep % 2 == 0 ? xs[gen.index(n)] : gen.uniform(-5.0, 5.0);
    DepthTriple d = empirical_depths(sample, FuzzyNumber::singleton(x));
    CHECK(d.d_ns ==
          doctest::Approx(reference::univariate_simplicial(x, xs)).epsilon(1e-12));
  }
}

TEST_CASE("with-diagonal pair rule") {
  Sample sample = two_interval_sample();
  // n = 2: one strict pair plus two diagonal terms, normalizer C(3,2) = 3.
  FuzzyNumber query = FuzzyNumber::crisp(1, 2);  // equals the first item
  DepthTriple strict = empirical_depths(sample, query, PairRule::strict);
  DepthTriple diag = empirical_depths(sample, query, PairRule::with_diagonal);
  CHECK(strict.d_ns == 1.0);  // inside the single pair envelope
  CHECK(diag.d_ns == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
  CHECK(diag.d_ms == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("containment probability formula") {
  CdfOracle half{[](Direction, double, double) { return 0.5; }, {}};
  FuzzyNumber q = FuzzyNumber::singleton(0.0);
  CHECK(containment_probability(half, q, Direction::plus, 0.3) == 0.5);

  CdfOracle zero{[](Direction, double, double) { return 0.0; }, {}};
  CdfOracle one{[](Direction, double, double) { return 1.0; }, {}};
  CHECK(containment_probability(zero, q, Direction::plus, 0.3) == 0.0);
  CHECK(containment_probability(one, q, Direction::plus, 0.3) == 0.0);

  CdfOracle broken{[](Direction, double, double) { return 1.5; }, {}};
  CHECK_THROWS_AS(containment_probability(broken, q, Direction::plus, 0.3),
                  OracleError);

  // Two equiprobable atoms, query strictly between them: enumerating the
  // four iid pairs gives 1/2, matching the formula with zero atom mass.
  DiscreteFuzzyRV rv({FuzzyNumber::crisp(1, 2), FuzzyNumber::crisp(4, 5)},
                     {0.5, 0.5});
  FuzzyNumber mid = FuzzyNumber::singleton(3.0);
  double brute = 0.0;
  const FuzzyNumber* atoms[] = {&rv.atoms()[0], &rv.atoms()[1]};
  for (const FuzzyNumber* x1 : atoms)
    for (const FuzzyNumber* x2 : atoms) {
      double s1 = x1->support(Direction::plus, 0.25);
      double s2 = x2->support(Direction::plus, 0.25);
      double t = mid.support(Direction::plus, 0.25);
      if (std::min(s1, s2) <= t && t <= std::max(s1, s2)) brute += 0.25;
    }
  CHECK(containment_probability(rv, mid, Direction::plus, 0.25) ==
        doctest::Approx(brute).epsilon(1e-14));
  // At an atom's own support value the point mass enters the formula.
  CHECK(containment_probability(rv, FuzzyNumber::crisp(1, 2), Direction::plus,
                                0.25) == doctest::Approx(0.75).epsilon(1e-14));
}

TEST_CASE("population depths of the counterexample sequence") {
  DiscreteFuzzyRV rv({FuzzyNumber::singleton(1.0), FuzzyNumber::singleton(-1.0)},
                     {0.5, 0.5});
  FuzzyNumber a = FuzzyNumber::singleton(0.0);
  FuzzyNumber b = counterexample_b();
  for (double n : {1.0, 10.0, 1000.0, 1000000.0}) {
    FuzzyNumber query = add(a, scale(n, b));
    PopulationDepths d = population_depths(rv, query);
    CHECK(d.d_fs == doctest::Approx(0.5 + 0.5 / n).epsilon(1e-13));
    CHECK(d.d_ms == doctest::Approx(0.75 + 0.25 / n).epsilon(1e-13));
    CHECK(d.d_fs >= 0.5);
    CHECK(d.d_ms >= 0.5);

    // Under iid pairing the same-atom draws halve both numbers.
    PopulationDepths iid = population_depths(rv, query, PairScheme::iid_pairs);
    CHECK(iid.d_fs == doctest::Approx(0.25 + 0.25 / n).epsilon(1e-13));
    CHECK(iid.d_ms == doctest::Approx(0.375 + 0.125 / n).epsilon(1e-13));
  }
}

TEST_CASE("population depth edge cases") {
  DiscreteFuzzyRV solo({FuzzyNumber::crisp(2.0, 3.0)}, {1.0});
  PopulationDepths d = population_depths(solo, FuzzyNumber::crisp(2.0, 3.0));
  CHECK(d.d_ms == 1.0);
  CHECK(d.d_fs == 1.0);

  PopulationDepths far =
      population_depths(solo, FuzzyNumber::singleton(99.0));
  CHECK(far.d_ms == 0.0);
  CHECK(far.d_fs == 0.0);
}

TEST_CASE("restricted vanishing at infinity") {
  // For B with both profiles nonzero almost everywhere the depth decays,
  // under both pair schemes.
  testgen::Gen gen(1006);
  DiscreteFuzzyRV rv({gen.fuzzy(), gen.fuzzy(), gen.fuzzy()},
                     {0.3, 0.3, 0.4});
  FuzzyNumber a = gen.fuzzy();
  FuzzyNumber b = tri(1.0, 2.0, 3.0, 4.0);  // profiles never vanish
  for (PairScheme scheme : {PairScheme::distinct_pairs, PairScheme::iid_pairs}) {
    double prev = 2.0;
    double last = 1.0;
    for (double n : {1.0, 10.0, 100.0, 1000.0}) {
      PopulationDepths d = population_depths(rv, add(a, scale(n, b)), scheme);
      CHECK(d.d_fs <= prev + 1e-12);
      prev = d.d_fs;
      last = d.d_fs;
    }
    CHECK(last <= 0.01);
  }
}

TEST_CASE("population depths against a continuous oracle") {
  // Crisp standard normal: s_X(u, alpha) = u * Z, so F(t) = Phi(t) in both
  // directions and the depth of a crisp point x is 2 Phi(x)(1 - Phi(x)).
  auto phi = [](double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); };
  CdfOracle oracle{[phi](Direction, double, double t) { return phi(t); }, {}};
  for (double x : {0.0, 0.5, -1.25}) {
    PopulationDepths d =
        population_depths(oracle, FuzzyNumber::singleton(x), 512);
    double want = 2.0 * phi(x) * (1.0 - phi(x));
    CHECK(d.d_ms == doctest::Approx(want).epsilon(1e-9));
    CHECK(d.d_fs == doctest::Approx(want).epsilon(1e-9));
  }
  CHECK_THROWS_AS(
      population_depths(oracle, FuzzyNumber::singleton(0.0), 32),
      QuadratureError);
}

TEST_CASE("maximality at the center of an F-symmetric variable") {
  // Mirrored translates of a base trapezoid around a center, center included
  // as an atom.
  testgen::Gen gen(1007);
  for (int rep = 0; rep < 20; ++rep) {
    FuzzyNumber center = gen.fuzzy();
    std::vector<FuzzyNumber> atoms{center};
    std::vector<double> probs{0.2};
    for (int k = 0; k < 2; ++k) {
      double offset = gen.uniform(0.5, 3.0);
      atoms.push_back(add(center, FuzzyNumber::singleton(offset)));
      atoms.push_back(add(center, FuzzyNumber::singleton(-offset)));
      probs.push_back(0.2);
      probs.push_back(0.2);
    }
    DiscreteFuzzyRV rv(atoms, probs);
    for (PairScheme scheme :
         {PairScheme::distinct_pairs, PairScheme::iid_pairs}) {
      PopulationDepths at_center = population_depths(rv, center, scheme);
      for (const FuzzyNumber& atom : rv.atoms()) {
        PopulationDepths at_atom = population_depths(rv, atom, scheme);
        CHECK(at_center.d_ms >= at_atom.d_ms - 1e-12);
        CHECK(at_center.d_fs >= at_atom.d_fs - 1e-12);
      }
    }
  }
}

TEST_CASE("monotone decay along rays from the deepest point") {
  testgen::Gen gen(1008);
  for (int rep = 0; rep < 20; ++rep) {
    FuzzyNumber center = gen.fuzzy();
    std::vector<FuzzyNumber> atoms{center};
    std::vector<double> probs{1.0 / 5.0};
    for (int k = 0; k < 2; ++k) {
      double offset = gen.uniform(0.5, 3.0);
      atoms.push_back(add(center, FuzzyNumber::singleton(offset)));
      atoms.push_back(add(center, FuzzyNumber::singleton(-offset)));
      probs.push_back(1.0 / 5.0);
      probs.push_back(1.0 / 5.0);
    }
    DiscreteFuzzyRV rv(atoms, probs);
    FuzzyNumber b = gen.fuzzy(-8.0, 8.0);
    double prev = 2.0;
    for (int i = 0; i <= 10; ++i) {
      double lambda = i / 10.0;
      PopulationDepths d =
          population_depths(rv, convex_combination(lambda, center, b));
      CHECK(d.d_ms <= prev + 1e-9);
      prev = d.d_ms;
    }
  }
}

TEST_CASE("median trapezoid conventions") {
  std::vector<Trapezoid> one{make_trapezoid(1, 2, 3, 4)};
  Trapezoid m1 = median_trapezoid(one);
  CHECK(m1.a == 1.0);
  CHECK(m1.d == 4.0);

  std::vector<Trapezoid> odd{make_trapezoid(0, 1, 2, 3), make_trapezoid(4, 5, 6, 7),
                             make_trapezoid(8, 9, 10, 11)};
  Trapezoid m2 = median_trapezoid(odd);
  CHECK(m2.a == 4.0);
  CHECK(m2.b == 5.0);
  CHECK(m2.c == 6.0);
  CHECK(m2.d == 7.0);

  std::vector<Trapezoid> even{make_trapezoid(0, 0, 0, 0), make_trapezoid(2, 2, 2, 2)};
  Trapezoid m3 = median_trapezoid(even);
  CHECK(m3.a == 1.0);
  CHECK(m3.d == 1.0);

  CHECK_THROWS_AS(median_trapezoid({}), NotTrapezoidal);
}

TEST_CASE("ranking identical items and chains") {
  Sample equal = Sample::from_trapezoids(
      {make_trapezoid(0, 1, 2, 3), make_trapezoid(0, 1, 2, 3),
       make_trapezoid(0, 1, 2, 3)});
  DepthReport r = rank_sample(equal);
  for (const auto& row : r.rows) {
    CHECK(row.d_ns == 1.0);
    CHECK(row.d_ms == 1.0);
    CHECK(row.d_fs == 1.0);
    CHECK(row.rank_ms == 1);
  }
  CHECK(r.max_ms.size() == 3);
}

TEST_CASE("concurrent evaluation is deterministic") {
  testgen::Gen gen(1009);
  Sample sample = gen.sample(12);
  std::vector<FuzzyNumber> queries;
  for (int i = 0; i < 8; ++i) queries.push_back(gen.fuzzy());

  std::vector<DepthTriple> serial;
  for (const FuzzyNumber& q : queries)
    serial.push_back(empirical_depths(sample, q));

  std::vector<DepthTriple> parallel(queries.size());
  std::vector<std::thread> workers;
  for (std::size_t t = 0; t < 4; ++t)
    workers.emplace_back([&, t] {
      for (std::size_t i = t; i < queries.size(); i += 4)
        parallel[i] = empirical_depths(sample, queries[i]);
    });
  for (auto& w : workers) w.join();

  for (std::size_t i = 0; i < queries.size(); ++i) {
    CHECK(parallel[i].d_ns == serial[i].d_ns);
    CHECK(parallel[i].d_ms == serial[i].d_ms);
    CHECK(parallel[i].d_fs == serial[i].d_fs);
  }
}
