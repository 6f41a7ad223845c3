#ifndef EUCLID_EUCLID_CORE_HPP
#define EUCLID_EUCLID_CORE_HPP

#include <euclid/natural.hpp>

#include <bit>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace euclid {

/* The recursive-step Euclidean algorithm with early exits at y = 0 and
 * y = 1, instrumented so that every invocation -- including the terminal
 * base-case invocation -- is recorded as one iteration.  The early exit at
 * y = 1 is part of the analyzed algorithm and is kept verbatim even though
 * classic presentations recurse down to (1, 0); it changes the iteration
 * count by one on coprime inputs.
 */

// One invocation: the arguments it saw and, when it recursed, the quotient
// and remainder of the division it performed.  Terminal invocations carry
// neither.
template <class I>
struct EuclidStep {
    I x;
    I y;
    std::optional<I> quotient;
    std::optional<I> remainder;
};

// A complete run.  steps.front() holds the normalized inputs (larger
// operand first), steps.size() is the iteration count m, the terminal step
// has y = 0 or y = 1 and no earlier step does.
template <class I>
struct EuclidTrace {
    std::vector<EuclidStep<I>> steps;
    I gcd_value;

    std::size_t iterations() const { return steps.size(); }
    const I& input_x() const { return steps.front().x; }
    const I& input_y() const { return steps.front().y; }
};

namespace detail {

template <class I>
inline void check_operands(const I& x, const I& y)
{
    if (sign_of(x) < 0 || sign_of(y) < 0)
        throw std::domain_error("operands must be non-negative");
    if (x == 0 && y == 0)
        throw std::domain_error("gcd(0,0) undefined");
}

} // namespace detail

// Greatest common divisor.  Operands may arrive in either order (they are
// normalized to x >= y before the run); gcd(0,0) is a domain error.
template <class I>
I gcd(I x, I y)
{
    detail::check_operands(x, y);
    if (x < y)
        std::swap(x, y);
    for (;;) {
        if (y == 0)
            return x;
        if (y == 1)
            return I(1);
        I r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
}

// Same run as gcd, but records every iteration.  Equal inputs are handled
// by the algorithm itself: (1,1) hits the y = 1 exit immediately, while
// (x,x) with x >= 2 performs one counted reduction to (x, 0).
template <class I>
EuclidTrace<I> trace(I x, I y)
{
    detail::check_operands(x, y);
    if (x < y)
        std::swap(x, y);

    EuclidTrace<I> t;
    for (;;) {
        if (y == 0 || y == 1) {
            t.gcd_value = (y == 0) ? x : I(1);
            t.steps.push_back({std::move(x), std::move(y), std::nullopt, std::nullopt});
            return t;
        }
        I q, r;
        detail::divide_with_remainder(x, y, q, r);
        t.steps.push_back({x, y, q, r});
        x = std::move(y);
        y = std::move(r);
    }
}

// u*x + v*y = g with g = gcd(x, y).
template <class I>
struct BezoutCertificate {
    I g;
    I u;
    I v;
};

// Classical iterative extended Euclidean algorithm.  No early exit at
// y = 1 here: the coefficient recurrence needs the full division chain.
// Requires a signed coefficient type.
template <class I>
BezoutCertificate<I> extended_gcd(I x, I y)
{
    detail::check_operands(x, y);
    const bool swapped = x < y;
    if (swapped)
        std::swap(x, y);

    I r0 = std::move(x), r1 = std::move(y);
    I u0(1), u1(0);
    I v0(0), v1(1);
    while (r1 != 0) {
        I q = r0 / r1;
        r0 -= q * r1;
        std::swap(r0, r1);
        u0 -= q * u1;
        std::swap(u0, u1);
        v0 -= q * v1;
        std::swap(v0, v1);
    }
    if (swapped)
        std::swap(u0, v0);
    return {std::move(r0), std::move(u0), std::move(v0)};
}

namespace detail {

// (F(n), F(n+1)) by fast doubling over the bits of n:
//   F(2k)   = F(k) * (2*F(k+1) - F(k))
//   F(2k+1) = F(k)^2 + F(k+1)^2
template <class I>
std::pair<I, I> fib_pair(unsigned long n)
{
    I a(0), b(1); // F(0), F(1)
    if (n == 0)
        return {std::move(a), std::move(b)};
    for (int i = std::bit_width(n) - 1; i >= 0; --i) {
        I c = a * (2 * b - a);
        I d = a * a + b * b;
        if ((n >> i) & 1UL) {
            a = std::move(d);
            b = c + a;
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return {std::move(a), std::move(b)};
}

} // namespace detail

// F(0) = 0, F(1) = F(2) = 1, F(n) = F(n-1) + F(n-2).
template <class I = Natural>
I fib(unsigned long n)
{
    return detail::fib_pair<I>(n).first;
}

// The deepest-running inputs for a given iteration count:
// trace(F(k+2), F(k+1)) performs exactly k iterations.
template <class I = Natural>
std::pair<I, I> fibonacci_pair(unsigned long k)
{
    if (k < 1)
        throw std::domain_error("fibonacci_pair requires k >= 1");
    auto [f_k1, f_k2] = detail::fib_pair<I>(k + 1); // F(k+1), F(k+2)
    return {std::move(f_k2), std::move(f_k1)};
}

} // namespace euclid

#endif // EUCLID_EUCLID_CORE_HPP
