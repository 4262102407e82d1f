#include "qwalk/rng.hpp"

namespace qwalk {

namespace {
constexpr uint32_t kW32A = 0x9E3779B9u;
constexpr uint32_t kW32B = 0xBB67AE85u;
constexpr uint32_t kM4x32A = 0xD2511F53u;
constexpr uint32_t kM4x32B = 0xCD9E8D57u;

inline void mulhilo(uint32_t a, uint32_t b, uint32_t& hi, uint32_t& lo) {
  uint64_t p = static_cast<uint64_t>(a) * b;
  hi = static_cast<uint32_t>(p >> 32);
  lo = static_cast<uint32_t>(p);
}
}  // namespace

std::array<uint32_t, 4> philox4x32_10(const std::array<uint32_t, 4>& ctr,
                                      const std::array<uint32_t, 2>& key) {
  uint32_t c0 = ctr[0], c1 = ctr[1], c2 = ctr[2], c3 = ctr[3];
  uint32_t k0 = key[0], k1 = key[1];
  for (int round = 0; round < 10; ++round) {
    uint32_t hi0, lo0, hi1, lo1;
    mulhilo(kM4x32A, c0, hi0, lo0);
    mulhilo(kM4x32B, c2, hi1, lo1);
    uint32_t n0 = hi1 ^ c1 ^ k0;
    uint32_t n1 = lo1;
    uint32_t n2 = hi0 ^ c3 ^ k1;
    uint32_t n3 = lo0;
    c0 = n0; c1 = n1; c2 = n2; c3 = n3;
    k0 += kW32A;
    k1 += kW32B;
  }
  return {c0, c1, c2, c3};
}

uint64_t CounterRng::u64(uint64_t stream, uint64_t index) const {
  std::array<uint32_t, 4> ctr = {
      static_cast<uint32_t>(index), static_cast<uint32_t>(index >> 32),
      static_cast<uint32_t>(stream), static_cast<uint32_t>(stream >> 32)};
  std::array<uint32_t, 2> key = {static_cast<uint32_t>(seed_),
                                 static_cast<uint32_t>(seed_ >> 32)};
  auto out = philox4x32_10(ctr, key);
  return static_cast<uint64_t>(out[0]) | (static_cast<uint64_t>(out[1]) << 32);
}

double CounterRng::u01(uint64_t stream, uint64_t index) const {
  return static_cast<double>(u64(stream, index) >> 11) * 0x1.0p-53;
}

int64_t CounterRng::uniform_int(uint64_t stream, uint64_t index, int64_t lo,
                                int64_t hi) const {
  uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int64_t>(u64(stream, index) % span);
}

}  // namespace qwalk
