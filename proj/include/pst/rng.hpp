#ifndef PST_RNG_HPP
#define PST_RNG_HPP

#include <cstdint>
#include <random>

namespace pst {

// SplitMix64 finalizer. Used to derive independent per-trial seeds from a
// master seed without any shared generator state.
constexpr std::uint64_t mix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

enum class Stream : std::uint64_t { Couplings = 0x636f75706c696e67ULL, Bonds = 0x626f6e6473ULL };

constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index,
                                    Stream stream) noexcept {
  return mix64(mix64(mix64(master) + index) ^ static_cast<std::uint64_t>(stream));
}

// mt19937_64 has a standardized output sequence; the two helpers below avoid
// the implementation-defined std distributions so draws are portable.
using Engine = std::mt19937_64;

inline double uniform01(Engine& eng) {
  return static_cast<double>(eng() >> 11) * 0x1.0p-53;
}

// Uniform integer in [0, bound) by rejection.
inline std::uint64_t uniform_below(Engine& eng, std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = eng();
  while (x >= limit) x = eng();
  return x % bound;
}

}  // namespace pst

#endif  // PST_RNG_HPP
