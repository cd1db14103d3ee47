#include "swarmnet/benchmarks.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "swarmnet/errors.hpp"
#include "swarmnet/rng.hpp"

namespace swarmnet {

namespace {

constexpr double kRotatedAckleyWeight = 1.0e6;
constexpr std::uint32_t kDomainStream = 0x0b1ec7;

SquareMatrix orthonormalize(SquareMatrix m) {
  const std::size_t n = m.size();
  // Modified Gram-Schmidt over columns, two passes for full working precision.
  for (std::size_t c = 0; c < n; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t p = 0; p < c; ++p) {
        double dot = 0.0;
        for (std::size_t r = 0; r < n; ++r) dot += m(r, p) * m(r, c);
        for (std::size_t r = 0; r < n; ++r) m(r, c) -= dot * m(r, p);
      }
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += m(r, c) * m(r, c);
    norm = std::sqrt(norm);
    for (std::size_t r = 0; r < n; ++r) m(r, c) /= norm;
  }
  return m;
}

SquareMatrix draw_rotation(Rng& rng, std::size_t n) {
  SquareMatrix gaussian(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) gaussian(r, c) = rng.normal();
  return orthonormalize(std::move(gaussian));
}

// Gathers z[perm[first .. first + count)] and rotates it.
std::vector<double> rotated_group(std::span<const double> z,
                                  std::span<const std::size_t> perm,
                                  std::size_t first, const SquareMatrix& rot) {
  const std::size_t m = rot.size();
  std::vector<double> gathered(m);
  for (std::size_t j = 0; j < m; ++j) gathered[j] = z[perm[first + j]];
  std::vector<double> out(m);
  rot.multiply(gathered, out);
  return out;
}

}  // namespace

std::string_view to_string(FunctionId id) {
  switch (id) {
    case FunctionId::F2: return "F2";
    case FunctionId::F6: return "F6";
    case FunctionId::F14: return "F14";
    case FunctionId::F19: return "F19";
    case FunctionId::Sphere: return "SPHERE";
  }
  return "?";
}

FunctionId parse_function_id(std::string_view text) {
  std::string upper(text);
  std::transform(upper.begin(), upper.end(), upper.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::toupper(ch)); });
  for (auto id : {FunctionId::F2, FunctionId::F6, FunctionId::F14, FunctionId::F19,
                  FunctionId::Sphere}) {
    if (upper == to_string(id)) return id;
  }
  throw ConfigError("unknown function '" + std::string(text) + "'");
}

Bounds default_bounds(FunctionId id) {
  switch (id) {
    case FunctionId::F2: return {-5.0, 5.0};
    case FunctionId::F6: return {-32.0, 32.0};
    case FunctionId::F14:
    case FunctionId::F19:
    case FunctionId::Sphere: return {-100.0, 100.0};
  }
  return {-100.0, 100.0};
}

void ObjectiveSpec::validate() const {
  if (dimension < 1) throw ConfigError("dimension must be >= 1");
  if (!(bounds.lower < bounds.upper))
    throw ConfigError("bounds: lower must be < upper");
  if (function == FunctionId::F6) {
    if (group_size < 1 || group_size > dimension)
      throw ConfigError("group_size: F6 requires 1 <= group_size <= dimension");
  } else if (function == FunctionId::F14) {
    if (group_size < 1 || dimension % group_size != 0)
      throw ConfigError("group_size: F14 requires group_size to divide dimension");
  }
}

ObjectiveSpec make_objective_spec(FunctionId function, std::size_t dimension,
                                  std::size_t group_size, std::uint64_t domain_seed) {
  ObjectiveSpec spec;
  spec.function = function;
  spec.dimension = dimension;
  spec.group_size = group_size;
  spec.domain_seed = domain_seed;
  spec.bounds = default_bounds(function);
  return spec;
}

void SquareMatrix::multiply(std::span<const double> in, std::span<double> out) const {
  for (std::size_t r = 0; r < n_; ++r) {
    double acc = 0.0;
    for (std::size_t c = 0; c < n_; ++c) acc += (*this)(r, c) * in[c];
    out[r] = acc;
  }
}

double SquareMatrix::orthogonality_error() const {
  double worst = 0.0;
  for (std::size_t a = 0; a < n_; ++a) {
    for (std::size_t b = 0; b < n_; ++b) {
      double dot = 0.0;
      for (std::size_t r = 0; r < n_; ++r) dot += (*this)(r, a) * (*this)(r, b);
      worst = std::max(worst, std::abs(dot - (a == b ? 1.0 : 0.0)));
    }
  }
  return worst;
}

SquareMatrix random_rotation(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return draw_rotation(rng, n);
}

ObjectiveData generate_objective(const ObjectiveSpec& spec) {
  spec.validate();
  const std::size_t d = spec.dimension;
  ObjectiveData data;
  data.shift.assign(d, 0.0);
  data.permutation.resize(d);
  std::iota(data.permutation.begin(), data.permutation.end(), std::size_t{0});
  if (spec.function == FunctionId::Sphere) return data;

  auto rng = Rng::for_stream(spec.domain_seed, kDomainStream);
  const double width = spec.bounds.upper - spec.bounds.lower;
  for (auto& s : data.shift) s = spec.bounds.lower + width * rng.uniform_open();

  // Fisher-Yates; written out so the permutation does not depend on the
  // standard library's shuffle algorithm.
  for (std::size_t i = d; i > 1; --i) {
    const auto j = static_cast<std::size_t>(rng.below(i));
    std::swap(data.permutation[i - 1], data.permutation[j]);
  }

  std::size_t groups = 0;
  if (spec.function == FunctionId::F6) groups = 1;
  if (spec.function == FunctionId::F14) groups = d / spec.group_size;
  data.rotations.reserve(groups);
  for (std::size_t g = 0; g < groups; ++g)
    data.rotations.push_back(draw_rotation(rng, spec.group_size));
  return data;
}

namespace base {

double sphere(std::span<const double> z) {
  double sum = 0.0;
  for (double v : z) sum += v * v;
  return sum;
}

double rastrigin(std::span<const double> z) {
  double sum = 0.0;
  for (double v : z) sum += v * v - 10.0 * std::cos(2.0 * std::numbers::pi * v) + 10.0;
  return sum;
}

double ackley(std::span<const double> z) {
  if (z.empty()) return 0.0;
  const double n = static_cast<double>(z.size());
  double sq = 0.0;
  double cs = 0.0;
  for (double v : z) {
    sq += v * v;
    cs += std::cos(2.0 * std::numbers::pi * v);
  }
  // Grouped so that the origin evaluates to exactly 0 and rounding never
  // drives the value negative.
  const double e = std::exp(1.0);
  return 20.0 * (1.0 - std::exp(-0.2 * std::sqrt(sq / n))) + (e - std::exp(cs / n));
}

double elliptic(std::span<const double> z) {
  const std::size_t n = z.size();
  double sum = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double coeff =
        n == 1 ? 1.0
               : std::pow(1.0e6, static_cast<double>(i) / static_cast<double>(n - 1));
    sum += coeff * z[i] * z[i];
  }
  return sum;
}

double schwefel_1_2(std::span<const double> z) {
  double sum = 0.0;
  double partial = 0.0;
  for (double v : z) {
    partial += v;
    sum += partial * partial;
  }
  return sum;
}

}  // namespace base

double evaluate(const ObjectiveSpec& spec, const ObjectiveData& data,
                std::span<const double> x) {
  const std::size_t d = spec.dimension;
  if (x.size() != d)
    throw InputError("evaluate: expected " + std::to_string(d) + " coordinates, got " +
                     std::to_string(x.size()));
  if (spec.function == FunctionId::Sphere) return base::sphere(x);

  std::vector<double> z(d);
  for (std::size_t i = 0; i < d; ++i) z[i] = x[i] - data.shift[i];

  switch (spec.function) {
    case FunctionId::F2:
      return base::rastrigin(z);
    case FunctionId::F19:
      return base::schwefel_1_2(z);
    case FunctionId::F6: {
      const std::size_t m = spec.group_size;
      const auto rotated = rotated_group(z, data.permutation, 0, data.rotations.front());
      std::vector<double> rest(d - m);
      for (std::size_t j = m; j < d; ++j) rest[j - m] = z[data.permutation[j]];
      return kRotatedAckleyWeight * base::ackley(rotated) + base::ackley(rest);
    }
    case FunctionId::F14: {
      const std::size_t m = spec.group_size;
      double sum = 0.0;
      for (std::size_t g = 0; g < data.rotations.size(); ++g)
        sum += base::elliptic(rotated_group(z, data.permutation, g * m, data.rotations[g]));
      return sum;
    }
    case FunctionId::Sphere:
      break;
  }
  return base::sphere(x);
}

Objective::Objective(ObjectiveSpec spec)
    : spec_(spec), data_(generate_objective(spec_)) {}

}  // namespace swarmnet
