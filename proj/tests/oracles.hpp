#ifndef EUCLID_TESTS_ORACLES_HPP
#define EUCLID_TESTS_ORACLES_HPP

// Independent references the library must agree with.  Each is built from
// a different principle than the implementation it checks: Fibonacci by
// literal recurrence against fast doubling, golden signs by high-precision
// numerics against the integer quadratic test.

#include <euclid/euclid.hpp>

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <utility>

namespace euclid_test {

// F(n) by iterated addition, nothing else.
inline euclid::Natural fib_oracle(unsigned long n)
{
    if (n == 0)
        return euclid::Natural(0);
    euclid::Natural a(0), b(1); // F(0), F(1)
    for (unsigned long i = 1; i < n; ++i) {
        euclid::Natural c = a + b;
        a = std::move(b);
        b = std::move(c);
    }
    return b;
}

// Sign of a + b*phi by 50-significant-digit (~166-bit mantissa) floating
// evaluation.  Sound for |a|, |b| <= 10^6: a nonzero value is at least
// 1/(|a| + |b|) >= 5*10^-7 in magnitude (its conjugate-norm is a nonzero
// integer), far above the evaluation error.
inline int golden_sign_numeric(const euclid::Integer& a, const euclid::Integer& b)
{
    using BigFloat = boost::multiprecision::cpp_bin_float_50;
    static const BigFloat phi = (1 + sqrt(BigFloat(5))) / 2;
    const BigFloat value = BigFloat(a) + BigFloat(b) * phi;
    if (value > 0)
        return 1;
    if (value < 0)
        return -1;
    return 0;
}

} // namespace euclid_test

#endif // EUCLID_TESTS_ORACLES_HPP
