#pragma once

#include <cmath>
#include <cstdint>

namespace gev {

namespace detail {

inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

}  // namespace detail

// Counter-based generator: the i-th output is a pure function of (key, i), so
// streams keyed on (seed, n, replicate) can run on any thread without shared
// state and still reproduce bit-for-bit.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t key) : key_(key) {}

  // Derive a stream key from up to three components.
  static CounterRng keyed(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0) {
    std::uint64_t k = detail::mix64(seed);
    k = detail::mix64(k ^ (a + 0x632be59bd9b4e019ull));
    k = detail::mix64(k ^ (b + 0xd1b54a32d192ed03ull));
    return CounterRng(k);
  }

  std::uint64_t next_u64() { return detail::mix64(key_ + (++ctr_) * 0x9e3779b97f4a7c15ull); }

  // Uniform on the open interval (0,1); never returns an exact endpoint.
  double next_uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  // Unit exponential via inversion.
  double next_exponential();

 private:
  std::uint64_t key_;
  std::uint64_t ctr_ = 0;
};

inline double CounterRng::next_exponential() { return -std::log(next_uniform()); }

}  // namespace gev
