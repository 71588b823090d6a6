#include "dacad/adam.hpp"

#include <cmath>

namespace dacad {

AdamState AdamState::init(const std::vector<DenseTensor>& params, const AdamConfig& config) {
  AdamState state;
  state.config = config;
  state.first_moment.reserve(params.size());
  state.second_moment.reserve(params.size());
  for (const auto& p : params) {
    state.first_moment.emplace_back(p.shape);
    state.second_moment.emplace_back(p.shape);
  }
  return state;
}

void adam_step(std::vector<DenseTensor*> params, const std::vector<DenseTensor>& grads,
               AdamState& state) {
  if (params.size() != grads.size() || params.size() != state.first_moment.size()) {
    throw ShapeError("adam_step: parameter/gradient/state count mismatch");
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (!params[i]->same_shape(grads[i]) || !params[i]->same_shape(state.first_moment[i])) {
      throw ShapeError("adam_step: shape mismatch at parameter " + std::to_string(i) +
                       ": " + shape_str(params[i]->shape) + " vs " +
                       shape_str(grads[i].shape));
    }
  }
  state.step_count += 1;
  const auto& c = state.config;
  const double bc1 = 1.0 - std::pow(c.beta1, static_cast<double>(state.step_count));
  const double bc2 = 1.0 - std::pow(c.beta2, static_cast<double>(state.step_count));
  for (std::size_t i = 0; i < params.size(); ++i) {
    auto& m = state.first_moment[i].data;
    auto& v = state.second_moment[i].data;
    auto& p = params[i]->data;
    const auto& g = grads[i].data;
    for (std::size_t j = 0; j < p.size(); ++j) {
      m[j] = c.beta1 * m[j] + (1.0 - c.beta1) * g[j];
      v[j] = c.beta2 * v[j] + (1.0 - c.beta2) * g[j] * g[j];
      const double m_hat = m[j] / bc1;
      const double v_hat = v[j] / bc2;
      p[j] -= c.learning_rate * m_hat / (std::sqrt(v_hat) + c.epsilon);
    }
  }
}

}  // namespace dacad
