#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "swarmnet/benchmarks.hpp"
#include "swarmnet/errors.hpp"

using namespace swarmnet;

TEST_CASE("sphere is unshifted and unrotated") {
  const auto spec = make_objective_spec(FunctionId::Sphere, 3, 1, 1234);
  const auto data = generate_objective(spec);
  CHECK(data.shift == std::vector<double>{0.0, 0.0, 0.0});
  CHECK(data.rotations.empty());
  const std::vector<double> x{1.0, 2.0, 2.0};
  CHECK(evaluate(spec, data, x) == 9.0);
}

TEST_CASE("generation is deterministic per seed") {
  const auto spec = make_objective_spec(FunctionId::F6, 10, 5, 77);
  CHECK(generate_objective(spec) == generate_objective(spec));
  auto other = spec;
  other.domain_seed = 78;
  CHECK_FALSE(generate_objective(spec) == generate_objective(other));
}

TEST_CASE("F14 has one orthogonal rotation per group") {
  const auto data = generate_objective(make_objective_spec(FunctionId::F14, 10, 5, 3));
  REQUIRE(data.rotations.size() == 2);
  for (const auto& r : data.rotations) {
    CHECK(r.size() == 5);
    // Independent check: explicit R^T R against the identity.
    double worst = 0.0;
    for (std::size_t a = 0; a < 5; ++a)
      for (std::size_t b = 0; b < 5; ++b) {
        double dot = 0.0;
        for (std::size_t k = 0; k < 5; ++k) dot += r(k, a) * r(k, b);
        worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
      }
    CHECK(worst <= 1e-10);
  }
}

TEST_CASE("shift lies strictly inside the bounds and permutation is a bijection") {
  for (auto id : {FunctionId::F2, FunctionId::F6, FunctionId::F14, FunctionId::F19}) {
    const auto spec = make_objective_spec(id, 50, 10, 9);
    const auto data = generate_objective(spec);
    for (double s : data.shift) {
      CHECK(s > spec.bounds.lower);
      CHECK(s < spec.bounds.upper);
    }
    std::vector<bool> hit(50, false);
    for (auto p : data.permutation) {
      REQUIRE(p < 50);
      CHECK_FALSE(hit[p]);
      hit[p] = true;
    }
  }
}

TEST_CASE("base functions at hand-evaluated points") {
  const std::vector<double> r{1.0, 0.0};
  CHECK(base::rastrigin(r) == doctest::Approx(1.0).epsilon(1e-12));
  const std::vector<double> s{1.0, 1.0};
  // 1^2 + (1 + 1)^2
  CHECK(base::schwefel_1_2(s) == 5.0);
  CHECK(base::ackley(std::vector<double>(4, 0.0)) == 0.0);
  CHECK(base::ackley(std::vector<double>{}) == 0.0);
  // elliptic weights 1e6^(i/(n-1)): 1 and 1e6
  CHECK(base::elliptic(std::vector<double>{1.0, 1.0}) == doctest::Approx(1.0 + 1e6));
}

TEST_CASE("optimum at the shift and non-negativity inside the bounds") {
  std::mt19937_64 gen(5);
  for (auto id : {FunctionId::F2, FunctionId::F6, FunctionId::F14, FunctionId::F19}) {
    const Objective f(make_objective_spec(id, 50, 10, 21));
    CHECK(std::abs(f(f.data().shift)) <= 1e-9);
    std::uniform_real_distribution<double> u(f.bounds().lower, f.bounds().upper);
    for (int trial = 0; trial < 200; ++trial) {
      std::vector<double> x(50);
      for (auto& v : x) v = u(gen);
      CHECK(f(x) >= 0.0);
    }
  }
}

TEST_CASE("rotation preserves the euclidean norm") {
  const auto r = random_rotation(20, 11);
  std::mt19937_64 gen(1);
  std::normal_distribution<double> g;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> z(20), out(20);
    for (auto& v : z) v = g(gen);
    r.multiply(z, out);
    double nz = 0.0, no = 0.0;
    for (std::size_t i = 0; i < 20; ++i) {
      nz += z[i] * z[i];
      no += out[i] * out[i];
    }
    CHECK(std::abs(std::sqrt(nz) - std::sqrt(no)) <= 1e-9);
  }
}

TEST_CASE("evaluation is bit-identical across calls") {
  const Objective f(make_objective_spec(FunctionId::F14, 20, 5, 2));
  std::vector<double> x(20, 3.25);
  const double a = f(x);
  const double b = Objective(f.spec())(x);
  CHECK(a == b);
}

TEST_CASE("invalid specs and inputs are rejected") {
  CHECK_THROWS_AS(generate_objective(make_objective_spec(FunctionId::F14, 10, 3, 0)),
                  ConfigError);
  CHECK_THROWS_AS(generate_objective(make_objective_spec(FunctionId::F6, 10, 11, 0)),
                  ConfigError);
  CHECK_THROWS_AS(generate_objective(make_objective_spec(FunctionId::F2, 0, 1, 0)),
                  ConfigError);
  auto spec = make_objective_spec(FunctionId::F2, 3, 1, 0);
  spec.bounds = {1.0, 1.0};
  CHECK_THROWS_AS(spec.validate(), ConfigError);
  const Objective f(make_objective_spec(FunctionId::F2, 3, 1, 0));
  CHECK_THROWS_AS(f(std::vector<double>{1.0, 2.0}), InputError);
  CHECK_THROWS_AS(parse_function_id("F3"), ConfigError);
  CHECK(parse_function_id("sphere") == FunctionId::Sphere);
}
