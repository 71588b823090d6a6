#include "dacad/rng.hpp"

#include <numeric>
#include <stdexcept>
#include <vector>

namespace dacad {

std::vector<std::size_t> sample_without_replacement(std::size_t n, std::size_t k,
                                                    std::mt19937_64& rng) {
  if (k > n) throw std::invalid_argument("cannot sample " + std::to_string(k) +
                                         " items from " + std::to_string(n));
  std::vector<std::size_t> pool(n);
  std::iota(pool.begin(), pool.end(), std::size_t{0});
  std::vector<std::size_t> out(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, n - 1);
    const std::size_t j = pick(rng);
    std::swap(pool[i], pool[j]);
    out[i] = pool[i];
  }
  return out;
}

}  // namespace dacad
