#include "agnosto/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace agnosto {

namespace {

void require_finite(const Vector& v, const char* op) {
  for (double x : v) {
    if (!std::isfinite(x)) {
      throw std::invalid_argument(std::string(op) + ": non-finite entry");
    }
  }
}

void require_nonempty(const Vector& v, const char* op) {
  if (v.empty()) throw std::invalid_argument(std::string(op) + ": empty input");
}

}  // namespace

Vector softmax(const Vector& logits) {
  require_nonempty(logits, "softmax");
  require_finite(logits, "softmax");
  const double max_logit = *std::max_element(logits.begin(), logits.end());
  Vector out(logits.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < logits.size(); ++i) {
    out[i] = std::exp(logits[i] - max_logit);
    sum += out[i];
  }
  for (double& x : out) x /= sum;
  return out;
}

Vector log_softmax(const Vector& logits) {
  require_nonempty(logits, "log_softmax");
  require_finite(logits, "log_softmax");
  const double max_logit = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (double x : logits) sum += std::exp(x - max_logit);
  const double log_sum_exp = max_logit + std::log(sum);
  Vector out(logits.size());
  for (std::size_t i = 0; i < logits.size(); ++i) out[i] = logits[i] - log_sum_exp;
  return out;
}

double entropy(const Vector& probabilities) {
  require_nonempty(probabilities, "entropy");
  double sum = 0.0;
  for (double p : probabilities) {
    if (!(p >= 0.0)) throw std::invalid_argument("entropy: negative or NaN entry");
    sum += p;
  }
  if (std::abs(sum - 1.0) > 1e-6) {
    throw std::invalid_argument("entropy: probabilities do not sum to 1");
  }
  double h = 0.0;
  for (double p : probabilities) {
    if (p > 0.0) h -= p * std::log(p);
  }
  const double h_max = std::log(static_cast<double>(probabilities.size()));
  return std::clamp(h, 0.0, h_max);
}

double l2_norm(const Vector& v) {
  require_finite(v, "l2_norm");
  double sum = 0.0;
  for (double x : v) sum += x * x;
  return std::sqrt(sum);
}

double dot(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += a[i] * b[i];
  return sum;
}

Vector matvec(const Matrix& m, const Vector& v) {
  if (m.cols != v.size() || m.data.size() != m.rows * m.cols) {
    throw std::invalid_argument("matvec: dimension mismatch");
  }
  Vector out(m.rows, 0.0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    double sum = 0.0;
    const double* row = m.data.data() + r * m.cols;
    for (std::size_t c = 0; c < m.cols; ++c) sum += row[c] * v[c];
    out[r] = sum;
  }
  return out;
}

Vector matvec_transposed(const Matrix& m, const Vector& v) {
  if (m.rows != v.size() || m.data.size() != m.rows * m.cols) {
    throw std::invalid_argument("matvec_transposed: dimension mismatch");
  }
  Vector out(m.cols, 0.0);
  for (std::size_t r = 0; r < m.rows; ++r) {
    const double* row = m.data.data() + r * m.cols;
    for (std::size_t c = 0; c < m.cols; ++c) out[c] += row[c] * v[r];
  }
  return out;
}

}  // namespace agnosto
