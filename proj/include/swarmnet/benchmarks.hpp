#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace swarmnet {

// Large-scale benchmark functions in the style of the CEC'2010 suite, plus an
// unshifted sphere used as an analytic control.
enum class FunctionId { F2, F6, F14, F19, Sphere };

std::string_view to_string(FunctionId id);
// Accepts "F2", "F6", "F14", "F19", "SPHERE" (case-insensitive).
FunctionId parse_function_id(std::string_view text);

struct Bounds {
  double lower = 0.0;
  double upper = 0.0;

  friend bool operator==(const Bounds&, const Bounds&) = default;
};

// Search box of each function family: Rastrigin [-5, 5], Ackley [-32, 32],
// elliptic and Schwefel 1.2 [-100, 100]. The sphere uses [-100, 100].
Bounds default_bounds(FunctionId id);

struct ObjectiveSpec {
  FunctionId function = FunctionId::F2;
  std::size_t dimension = 1000;
  // Size of each rotated group (F6: one group, F14: dimension / group_size).
  std::size_t group_size = 50;
  std::uint64_t domain_seed = 0;
  Bounds bounds = default_bounds(FunctionId::F2);

  // Throws ConfigError when the dimension/group combination is infeasible.
  void validate() const;

  friend bool operator==(const ObjectiveSpec&, const ObjectiveSpec&) = default;
};

ObjectiveSpec make_objective_spec(FunctionId function, std::size_t dimension,
                                  std::size_t group_size = 50,
                                  std::uint64_t domain_seed = 0);

// Dense row-major square matrix.
class SquareMatrix {
 public:
  SquareMatrix() = default;
  explicit SquareMatrix(std::size_t n) : n_(n), values_(n * n, 0.0) {}

  std::size_t size() const { return n_; }
  double& operator()(std::size_t r, std::size_t c) { return values_[r * n_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return values_[r * n_ + c]; }

  // out = M * in; in and out must have size() elements and must not alias.
  void multiply(std::span<const double> in, std::span<double> out) const;

  // max |(M^T M - I)_{rc}|
  double orthogonality_error() const;

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<double> values_;
};

// Instance data generated from ObjectiveSpec::domain_seed.
struct ObjectiveData {
  std::vector<double> shift;
  // 0-based permutation of the coordinates; selects the rotated groups.
  std::vector<std::size_t> permutation;
  std::vector<SquareMatrix> rotations;

  friend bool operator==(const ObjectiveData&, const ObjectiveData&) = default;
};

ObjectiveData generate_objective(const ObjectiveSpec& spec);

// Random orthogonal matrix: Gram-Schmidt (applied twice) on a Gaussian matrix.
SquareMatrix random_rotation(std::size_t n, std::uint64_t seed);

// Throws InputError when x.size() != spec.dimension.
double evaluate(const ObjectiveSpec& spec, const ObjectiveData& data,
                std::span<const double> x);

// Unshifted base functions, minimum 0 at the origin.
namespace base {
double sphere(std::span<const double> z);
double rastrigin(std::span<const double> z);
// Empty input evaluates to 0.
double ackley(std::span<const double> z);
double elliptic(std::span<const double> z);
double schwefel_1_2(std::span<const double> z);
}  // namespace base

// An ObjectiveSpec bundled with its generated data.
class Objective {
 public:
  explicit Objective(ObjectiveSpec spec);

  const ObjectiveSpec& spec() const { return spec_; }
  const ObjectiveData& data() const { return data_; }
  std::size_t dimension() const { return spec_.dimension; }
  Bounds bounds() const { return spec_.bounds; }

  double operator()(std::span<const double> x) const {
    return evaluate(spec_, data_, x);
  }

 private:
  ObjectiveSpec spec_;
  ObjectiveData data_;
};

}  // namespace swarmnet
