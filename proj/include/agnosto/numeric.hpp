#pragma once

#include <cstddef>
#include <vector>

namespace agnosto {

using Vector = std::vector<double>;

/// Dense row-major matrix.
struct Matrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> data;

  Matrix() = default;
  Matrix(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), data(r * c, fill) {}

  double& at(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  double at(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

/// Softmax with max-subtraction so large logits cannot overflow.
/// Output sums to 1 (within 1e-12) and preserves the argmax.
Vector softmax(const Vector& logits);

/// log(softmax(logits)) computed via the log-sum-exp trick.
Vector log_softmax(const Vector& logits);

/// Shannon entropy in nats of a probability vector, with 0*ln(0) := 0.
/// Requires non-negative entries summing to 1 within 1e-6.
double entropy(const Vector& probabilities);

/// Euclidean norm.
double l2_norm(const Vector& v);

double dot(const Vector& a, const Vector& b);

/// m * v. Throws std::invalid_argument on dimension mismatch.
Vector matvec(const Matrix& m, const Vector& v);

/// transpose(m) * v; the adjoint used during backpropagation.
Vector matvec_transposed(const Matrix& m, const Vector& v);

}  // namespace agnosto
