#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "dacad/errors.hpp"

namespace dacad {

// Row-major dense array of doubles with an explicit shape. Carries all
// activations, parameters and gradients in the project.
struct DenseTensor {
  std::vector<std::size_t> shape;
  std::vector<double> data;

  DenseTensor() = default;
  explicit DenseTensor(std::vector<std::size_t> s, double fill = 0.0);
  DenseTensor(std::vector<std::size_t> s, std::vector<double> values);

  static DenseTensor matrix(std::size_t rows, std::size_t cols,
                            std::vector<double> values);
  static DenseTensor identity(std::size_t n);

  std::size_t size() const { return data.size(); }
  std::size_t rank() const { return shape.size(); }
  std::size_t rows() const;
  std::size_t cols() const;

  double& at(std::size_t i, std::size_t j);
  double at(std::size_t i, std::size_t j) const;
  std::span<double> row(std::size_t i);
  std::span<const double> row(std::size_t i) const;

  bool same_shape(const DenseTensor& other) const { return shape == other.shape; }
  bool all_finite() const;
};

std::string shape_str(const std::vector<std::size_t>& shape);
std::size_t shape_product(const std::vector<std::size_t>& shape);

DenseTensor matmul(const DenseTensor& a, const DenseTensor& b);
DenseTensor transpose(const DenseTensor& a);

// Rows of `a` selected by `indices`, in order.
DenseTensor gather_rows(const DenseTensor& a, std::span<const std::size_t> indices);

void add_inplace(DenseTensor& a, const DenseTensor& b);
void scale_inplace(DenseTensor& a, double factor);

}  // namespace dacad
