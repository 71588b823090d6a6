#pragma once

#include <vector>

#include "dacad/tensor.hpp"

namespace dacad {

// Gradients produced by one dense layer's backward pass. Shapes mirror the
// layer's parameters and input exactly.
struct LayerGrad {
  DenseTensor weight_grad;
  DenseTensor bias_grad;
  DenseTensor input_grad;
};

// y = x W + b, bias broadcast over rows. x is [n x d], W is [d x m], b is [m].
DenseTensor dense_forward(const DenseTensor& x, const DenseTensor& weight,
                          const DenseTensor& bias);
LayerGrad dense_backward(const DenseTensor& x, const DenseTensor& weight,
                         const DenseTensor& upstream);

// Elementwise max(0, x); subgradient at exactly 0 is 0.
DenseTensor relu_forward(const DenseTensor& x);
DenseTensor relu_backward(const DenseTensor& x, const DenseTensor& upstream);

DenseTensor softmax_rows(const DenseTensor& logits);

struct CrossEntropyResult {
  double loss;             // mean over the batch of -log softmax(logits)[label]
  DenseTensor logit_grad;  // (softmax - onehot) / n
};

// Numerically stabilized by row-max subtraction; labels index into [0, k).
CrossEntropyResult softmax_cross_entropy(const DenseTensor& logits,
                                         const std::vector<int>& labels);

}  // namespace dacad
