#pragma once

#include <cstdint>
#include <random>

namespace dacad {

// splitmix64 finalizer; used to derive independent sub-stream seeds from a
// master seed so separate concerns (batching, projections, augmentation)
// never share RNG state.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
  return splitmix64(splitmix64(seed) ^ tag);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t counter) {
  return splitmix64(mix_seed(seed, tag) ^ splitmix64(counter));
}

inline std::mt19937_64 make_rng(std::uint64_t seed) { return std::mt19937_64(seed); }

// Stream tags for the training pipeline.
namespace stream {
inline constexpr std::uint64_t kInit = 0x494e4954;       // model initialization
inline constexpr std::uint64_t kBatch = 0x42415443;      // CE minibatch selection
inline constexpr std::uint64_t kAlign = 0x414c4947;      // projection + subsample draws
inline constexpr std::uint64_t kAugment = 0x4155474d;    // augmentation draws
inline constexpr std::uint64_t kData = 0x44415441;       // dataset generation
inline constexpr std::uint64_t kProbe = 0x50524f42;      // convergence probe
}  // namespace stream

// k distinct values drawn uniformly without replacement from [0, n) via a
// partial Fisher-Yates shuffle; order of draws is preserved.
std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k,
                                                    std::mt19937_64& rng);

}  // namespace dacad
