#include "qeei/random.hpp"

namespace qeei {

Quaternion random_quaternion(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  const double w = dist(rng);
  const double x = dist(rng);
  const double y = dist(rng);
  const double z = dist(rng);
  return {w, x, y, z};
}

QMatrix random_qmatrix(std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  QMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = random_quaternion(rng);
  return m;
}

HermitianQMatrix random_hermitian(std::size_t n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  QMatrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    m(r, r) = dist(rng);
    for (std::size_t c = r + 1; c < n; ++c) {
      m(r, c) = random_quaternion(rng);
      m(c, r) = conj(m(r, c));
    }
  }
  return validate_hermitian(m);
}

}  // namespace qeei
