#include "dacad/tensor.hpp"

#include <cmath>
#include <utility>

namespace dacad {

std::size_t shape_product(const std::vector<std::size_t>& shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) n *= d;
  return n;
}

std::string shape_str(const std::vector<std::size_t>& shape) {
  std::string out = "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) out += "x";
    out += std::to_string(shape[i]);
  }
  out += "]";
  return out;
}

DenseTensor::DenseTensor(std::vector<std::size_t> s, double fill)
    : shape(std::move(s)), data(shape_product(shape), fill) {}

DenseTensor::DenseTensor(std::vector<std::size_t> s, std::vector<double> values)
    : shape(std::move(s)), data(std::move(values)) {
  if (data.size() != shape_product(shape)) {
    throw ShapeError("tensor data length " + std::to_string(data.size()) +
                     " does not match shape " + shape_str(shape));
  }
}

DenseTensor DenseTensor::matrix(std::size_t rows, std::size_t cols,
                                std::vector<double> values) {
  return DenseTensor({rows, cols}, std::move(values));
}

DenseTensor DenseTensor::identity(std::size_t n) {
  DenseTensor out({n, n});
  for (std::size_t i = 0; i < n; ++i) out.data[i * n + i] = 1.0;
  return out;
}

std::size_t DenseTensor::rows() const {
  if (rank() != 2) throw ShapeError("rows() requires a rank-2 tensor, got " + shape_str(shape));
  return shape[0];
}

std::size_t DenseTensor::cols() const {
  if (rank() != 2) throw ShapeError("cols() requires a rank-2 tensor, got " + shape_str(shape));
  return shape[1];
}

double& DenseTensor::at(std::size_t i, std::size_t j) {
  return data[i * cols() + j];
}

double DenseTensor::at(std::size_t i, std::size_t j) const {
  return data[i * cols() + j];
}

std::span<double> DenseTensor::row(std::size_t i) {
  const std::size_t c = cols();
  return {data.data() + i * c, c};
}

std::span<const double> DenseTensor::row(std::size_t i) const {
  const std::size_t c = cols();
  return {data.data() + i * c, c};
}

bool DenseTensor::all_finite() const {
  for (double v : data) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

DenseTensor matmul(const DenseTensor& a, const DenseTensor& b) {
  if (a.rank() != 2 || b.rank() != 2) {
    throw ShapeError("matmul expects rank-2 tensors, got " + shape_str(a.shape) +
                     " and " + shape_str(b.shape));
  }
  if (a.cols() != b.rows()) {
    throw ShapeError("matmul inner dimensions disagree: " + shape_str(a.shape) +
                     " x " + shape_str(b.shape));
  }
  const std::size_t m = a.rows(), k = a.cols(), n = b.cols();
  DenseTensor out({m, n});
  for (std::size_t i = 0; i < m; ++i) {
    const double* arow = a.data.data() + i * k;
    double* orow = out.data.data() + i * n;
    for (std::size_t p = 0; p < k; ++p) {
      const double av = arow[p];
      if (av == 0.0) continue;
      const double* brow = b.data.data() + p * n;
      for (std::size_t j = 0; j < n; ++j) orow[j] += av * brow[j];
    }
  }
  return out;
}

DenseTensor transpose(const DenseTensor& a) {
  const std::size_t m = a.rows(), n = a.cols();
  DenseTensor out({n, m});
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out.data[j * m + i] = a.data[i * n + j];
  return out;
}

DenseTensor gather_rows(const DenseTensor& a, std::span<const std::size_t> indices) {
  const std::size_t c = a.cols();
  DenseTensor out({indices.size(), c});
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= a.rows()) {
      throw ShapeError("gather_rows index " + std::to_string(indices[i]) +
                       " out of range for " + shape_str(a.shape));
    }
    const auto src = a.row(indices[i]);
    std::copy(src.begin(), src.end(), out.data.begin() + i * c);
  }
  return out;
}

void add_inplace(DenseTensor& a, const DenseTensor& b) {
  if (!a.same_shape(b)) {
    throw ShapeError("add_inplace shape mismatch: " + shape_str(a.shape) + " vs " +
                     shape_str(b.shape));
  }
  for (std::size_t i = 0; i < a.data.size(); ++i) a.data[i] += b.data[i];
}

void scale_inplace(DenseTensor& a, double factor) {
  for (double& v : a.data) v *= factor;
}

}  // namespace dacad
