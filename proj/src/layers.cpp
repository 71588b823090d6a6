#include "dacad/layers.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dacad {

DenseTensor dense_forward(const DenseTensor& x, const DenseTensor& weight,
                          const DenseTensor& bias) {
  if (x.cols() != weight.rows()) {
    throw ShapeError("dense_forward: input " + shape_str(x.shape) +
                     " does not match weight " + shape_str(weight.shape));
  }
  if (bias.size() != weight.cols()) {
    throw ShapeError("dense_forward: bias " + shape_str(bias.shape) +
                     " does not match weight " + shape_str(weight.shape));
  }
  DenseTensor out = matmul(x, weight);
  const std::size_t n = out.rows(), m = out.cols();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) out.data[i * m + j] += bias.data[j];
  return out;
}

LayerGrad dense_backward(const DenseTensor& x, const DenseTensor& weight,
                         const DenseTensor& upstream) {
  if (upstream.rows() != x.rows() || upstream.cols() != weight.cols()) {
    throw ShapeError("dense_backward: upstream " + shape_str(upstream.shape) +
                     " does not match input " + shape_str(x.shape) + " and weight " +
                     shape_str(weight.shape));
  }
  LayerGrad g;
  g.weight_grad = matmul(transpose(x), upstream);
  g.bias_grad = DenseTensor({weight.cols()});
  const std::size_t n = upstream.rows(), m = upstream.cols();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) g.bias_grad.data[j] += upstream.data[i * m + j];
  g.input_grad = matmul(upstream, transpose(weight));
  return g;
}

DenseTensor relu_forward(const DenseTensor& x) {
  DenseTensor out = x;
  for (double& v : out.data) v = v > 0.0 ? v : 0.0;
  return out;
}

DenseTensor relu_backward(const DenseTensor& x, const DenseTensor& upstream) {
  if (!x.same_shape(upstream)) {
    throw ShapeError("relu_backward shape mismatch: " + shape_str(x.shape) + " vs " +
                     shape_str(upstream.shape));
  }
  DenseTensor out = upstream;
  for (std::size_t i = 0; i < out.data.size(); ++i) {
    if (x.data[i] <= 0.0) out.data[i] = 0.0;
  }
  return out;
}

DenseTensor softmax_rows(const DenseTensor& logits) {
  const std::size_t n = logits.rows(), k = logits.cols();
  DenseTensor probs({n, k});
  for (std::size_t i = 0; i < n; ++i) {
    const double* in = logits.data.data() + i * k;
    double* out = probs.data.data() + i * k;
    const double mx = *std::max_element(in, in + k);
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      out[j] = std::exp(in[j] - mx);
      sum += out[j];
    }
    for (std::size_t j = 0; j < k; ++j) out[j] /= sum;
  }
  return probs;
}

CrossEntropyResult softmax_cross_entropy(const DenseTensor& logits,
                                         const std::vector<int>& labels) {
  const std::size_t n = logits.rows(), k = logits.cols();
  if (labels.size() != n) {
    throw ShapeError("softmax_cross_entropy: " + std::to_string(labels.size()) +
                     " labels for " + std::to_string(n) + " rows");
  }
  if (n == 0) throw ShapeError("softmax_cross_entropy: empty batch");
  for (int label : labels) {
    if (label < 0 || static_cast<std::size_t>(label) >= k) {
      throw std::out_of_range("label " + std::to_string(label) + " outside [0, " +
                              std::to_string(k) + ")");
    }
  }
  CrossEntropyResult res;
  res.logit_grad = softmax_rows(logits);
  double total = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double* in = logits.data.data() + i * k;
    const double mx = *std::max_element(in, in + k);
    double sum = 0.0;
    for (std::size_t j = 0; j < k; ++j) sum += std::exp(in[j] - mx);
    // -log softmax in log-sum-exp form: finite even for extreme logits
    total += std::log(sum) - (in[static_cast<std::size_t>(labels[i])] - mx);
  }
  res.loss = total / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    res.logit_grad.data[i * k + static_cast<std::size_t>(labels[i])] -= 1.0;
  }
  scale_inplace(res.logit_grad, 1.0 / static_cast<double>(n));
  return res;
}

}  // namespace dacad
