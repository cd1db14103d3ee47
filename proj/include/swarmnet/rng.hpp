#pragma once

#include <cstdint>
#include <random>

namespace swarmnet {

// Seeded random stream. The engine is std::mt19937_64, whose output sequence is
// fixed by the standard; the conversions below avoid the std distributions,
// whose algorithms are implementation-defined, so draws replay bit-exactly.
class Rng {
 public:
  static constexpr const char* kGenerator = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  // Independent stream for a (seed, stream) pair, seeded through std::seed_seq
  // so equal seeds used for different purposes do not share draws.
  static Rng for_stream(std::uint64_t seed, std::uint32_t stream);

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  // Uniform in the open interval (0, 1).
  double uniform_open() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Uniform integer in [0, bound), bound > 0. Rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t bound);

  // Standard normal via Box-Muller; one value per call.
  double normal();

 private:
  std::mt19937_64 engine_;
};

}  // namespace swarmnet
