#pragma once

#include <cstdint>
#include <array>

namespace qwalk {

// Philox4x32-10 counter-based generator. A draw is a pure function of
// (seed, stream, index), so parallel consumers get reproducible values
// regardless of scheduling.
std::array<uint32_t, 4> philox4x32_10(const std::array<uint32_t, 4>& ctr,
                                      const std::array<uint32_t, 2>& key);

// Stream tags. Every module that consumes randomness owns a tag, so draws
// never collide across purposes within one seed.
enum rng_stream : uint64_t {
  stream_q_matrix = 1,
  stream_mc = 2,
  stream_probe = 3,
  stream_test = 9,
};

class CounterRng {
public:
  explicit CounterRng(uint64_t seed) : seed_(seed) {}

  uint64_t u64(uint64_t stream, uint64_t index) const;
  // uniform in [0,1), 53-bit mantissa
  double u01(uint64_t stream, uint64_t index) const;
  // uniform integer in [lo, hi] (inclusive); hi - lo small
  int64_t uniform_int(uint64_t stream, uint64_t index, int64_t lo, int64_t hi) const;

  uint64_t seed() const { return seed_; }

private:
  uint64_t seed_;
};

}  // namespace qwalk
