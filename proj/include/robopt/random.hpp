#pragma once

#include <cstdint>
#include <random>

namespace robopt {

/// Identifies one reproducible random stream. Identical (master_seed,
/// stream_id) pairs yield identical sequences; distinct stream_ids yield
/// statistically independent streams. Substreams are derived by mixing the
/// index into stream_id, which lets bootstrap replicates and experiment
/// replications run concurrently while staying bit-reproducible.
struct RandomSource {
  std::uint64_t master_seed = 0;
  std::uint64_t stream_id = 0;

  RandomSource substream(std::uint64_t k) const;
};

/// Deterministic generator on top of std::mt19937_64 (the engine's output is
/// fully specified by the standard, so sequences are stable across builds).
/// Uniform/normal conversion is done in-house rather than through
/// std::*_distribution, whose output is implementation-defined.
class Rng {
 public:
  explicit Rng(RandomSource source);

  std::uint64_t u64();
  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform();
  /// Standard normal via Box-Muller (one spare cached).
  double normal();
  /// Uniform index in {0, ..., n-1}.
  std::size_t index(std::size_t n);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace robopt
