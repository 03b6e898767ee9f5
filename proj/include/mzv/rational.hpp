#pragma once

#include <gmpxx.h>

namespace mzv {

using Integer = mpz_class;
using Rational = mpq_class;

Integer binomial(unsigned long n, unsigned long k);
Integer factorial(unsigned long n);

}  // namespace mzv
