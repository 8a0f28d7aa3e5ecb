#pragma once

#include "qqsa/scalars/coeff.hpp"

namespace qqsa::scalars {

/// (n)_v = 1 + v + ... + v^{n-1}.
Coeff q_int(long n, const Coeff& v);

/// (n)_v! = (1)_v (2)_v ... (n)_v.
Coeff q_factorial(long n, const Coeff& v);

/// Gaussian binomial via the Pascal recurrence, so it is defined at roots of
/// unity as well. Throws std::invalid_argument unless 0 <= k <= n.
Coeff q_binomial(long n, long k, const Coeff& v);

}  // namespace qqsa::scalars
