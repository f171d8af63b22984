#pragma once

#include <gmpxx.h>

#include <vector>

namespace rbmod::detail {

/// All positive divisors of |n| (n != 0), ascending.
std::vector<mpz_class> divisors(const mpz_class& n);

}  // namespace rbmod::detail
