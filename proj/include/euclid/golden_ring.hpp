#ifndef EUCLID_GOLDEN_RING_HPP
#define EUCLID_GOLDEN_RING_HPP

#include <euclid/euclid_core.hpp>
#include <euclid/natural.hpp>

#include <cassert>
#include <cmath>
#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

namespace euclid {

/* Exact arithmetic in Z[phi] = {a + b*phi : a, b integers}, where phi is
 * the golden ratio (1+sqrt(5))/2, the positive root of t^2 - t - 1.
 * phi^2 = phi + 1 keeps multiplication by phi inside the ring, and
 * 1/phi = phi - 1 lets the golden potential live here with integer
 * coefficients only.  Signs and comparisons are decided exactly; no
 * floating point is involved outside the display helpers.
 */

template <class I>
struct GoldenInt {
    I a; // rational part
    I b; // coefficient of phi

    friend bool operator==(const GoldenInt&, const GoldenInt&) = default;
};

template <class I>
GoldenInt<I> golden_make(I a, I b)
{
    return {std::move(a), std::move(b)};
}

template <class I>
GoldenInt<I> golden_add(const GoldenInt<I>& g1, const GoldenInt<I>& g2)
{
    return {g1.a + g2.a, g1.b + g2.b};
}

template <class I>
GoldenInt<I> golden_sub(const GoldenInt<I>& g1, const GoldenInt<I>& g2)
{
    return {g1.a - g2.a, g1.b - g2.b};
}

// phi * (a + b*phi) = b + (a+b)*phi.
template <class I>
GoldenInt<I> golden_mul_phi(const GoldenInt<I>& g)
{
    return {g.b, g.a + g.b};
}

// Exact sign of the real number a + b*phi.  Same-signed coefficients are
// immediate.  In the mixed case the comparison of |a|/|b| against phi is
// settled by the sign of t^2 - t - 1 at that rational point, cleared of
// denominators: a positive rational r satisfies r < phi iff r^2 - r - 1 < 0.
// Zero only at (0, 0), phi being irrational.
template <class I>
int golden_sign(const GoldenInt<I>& g)
{
    const int sa = detail::sign_of(g.a);
    const int sb = detail::sign_of(g.b);
    if (sa == 0)
        return sb;
    if (sb == 0)
        return sa;
    if (sa == sb)
        return sa;
    if (sb > 0) {
        // b > 0 > a: value positive iff |a|/b < phi.
        I t = g.a * g.a - (-g.a) * g.b - g.b * g.b;
        assert(t != 0 && "a^2 - |a|b - b^2 = 0 would make phi rational");
        return t < 0 ? +1 : -1;
    }
    // a > 0 > b: value positive iff a/|b| > phi.
    I t = g.a * g.a - g.a * (-g.b) - g.b * g.b;
    assert(t != 0 && "a^2 - a|b| - b^2 = 0 would make phi rational");
    return t > 0 ? +1 : -1;
}

// Total order of the represented reals.
template <class I>
std::strong_ordering golden_cmp(const GoldenInt<I>& g1, const GoldenInt<I>& g2)
{
    const int s = golden_sign(golden_sub(g1, g2));
    if (s < 0)
        return std::strong_ordering::less;
    if (s > 0)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

// phi^m = F(m-1) + F(m)*phi, exactly.
template <class I>
GoldenInt<I> golden_phi_pow(unsigned long m)
{
    if (m < 1)
        throw std::domain_error("golden_phi_pow requires m >= 1");
    auto [f_prev, f_m] = detail::fib_pair<I>(m - 1); // F(m-1), F(m)
    return {std::move(f_prev), std::move(f_m)};
}

inline double golden_ratio()
{
    return (1.0 + std::sqrt(5.0)) / 2.0;
}

// Display-only floating approximation; never used on a verification path.
// reliable flags whether both coefficients sit in the exactly-representable
// double range; the value is the nearest-double evaluation regardless.
struct GoldenApprox {
    double value = 0.0;
    bool reliable = true;
};

template <class I>
GoldenApprox golden_to_float(const GoldenInt<I>& g)
{
    const I limit(9007199254740992LL); // 2^53
    const bool reliable =
        !(g.a > limit || g.a < -limit || g.b > limit || g.b < -limit);
    const double value =
        detail::to_double(g.a) + detail::to_double(g.b) * golden_ratio();
    return {value, reliable};
}

// "a+b·φ", with the sign folded into the b term when negative.
template <class I>
std::string golden_format(const GoldenInt<I>& g)
{
    std::string out = detail::to_decimal(g.a);
    if (detail::sign_of(g.b) < 0) {
        out += '-';
        I mag = -g.b;
        out += detail::to_decimal(mag);
    } else {
        out += '+';
        out += detail::to_decimal(g.b);
    }
    out += "\xC2\xB7\xCF\x86"; // ·φ
    return out;
}

} // namespace euclid

#endif // EUCLID_GOLDEN_RING_HPP
