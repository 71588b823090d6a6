#pragma once

#include <cstdint>
#include <vector>

#include "dacad/tensor.hpp"

namespace dacad {

struct AdamConfig {
  double learning_rate = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// Per-parameter first/second moment accumulators plus the shared step count.
struct AdamState {
  AdamConfig config;
  std::vector<DenseTensor> first_moment;
  std::vector<DenseTensor> second_moment;
  std::uint64_t step_count = 0;

  static AdamState init(const std::vector<DenseTensor>& params, const AdamConfig& config);
};

// One Adam update with bias correction; increments state.step_count.
void adam_step(std::vector<DenseTensor*> params, const std::vector<DenseTensor>& grads,
               AdamState& state);

}  // namespace dacad
