#include "qqsa/scalars/qnumbers.hpp"

#include <stdexcept>
#include <vector>

namespace qqsa::scalars {

Coeff q_int(long n, const Coeff& v) {
  if (n < 0) throw std::invalid_argument("q_int of a negative integer");
  Coeff sum;
  Coeff power(1);
  for (long k = 0; k < n; ++k) {
    sum += power;
    power *= v;
  }
  return sum;
}

Coeff q_factorial(long n, const Coeff& v) {
  Coeff prod(1);
  for (long k = 2; k <= n; ++k) prod *= q_int(k, v);
  return prod;
}

Coeff q_binomial(long n, long k, const Coeff& v) {
  if (n < 0 || k < 0 || k > n) {
    throw std::invalid_argument("q_binomial(" + std::to_string(n) + ", " + std::to_string(k) +
                                ") out of range");
  }
  std::vector<Coeff> vpow(static_cast<std::size_t>(k) + 1, Coeff(1));
  for (long j = 1; j <= k; ++j) vpow[j] = vpow[j - 1] * v;
  // row[j] holds binom(m, j); updated in place from the right
  std::vector<Coeff> row(static_cast<std::size_t>(k) + 1);
  row[0] = Coeff(1);
  for (long m = 1; m <= n; ++m) {
    for (long j = std::min(m, k); j >= 1; --j) row[j] = row[j - 1] + vpow[j] * row[j];
  }
  return row[k];
}

}  // namespace qqsa::scalars
