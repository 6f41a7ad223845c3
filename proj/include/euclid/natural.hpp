#ifndef EUCLID_NATURAL_HPP
#define EUCLID_NATURAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdio>
#include <optional>
#include <string>
#include <string_view>
#include <type_traits>

namespace euclid {

// Arbitrary-precision integers. Natural values are non-negative by contract
// (enforced at the public entry points); Integer is the same representation
// used where signs occur: Bezout coefficients, golden-ring coefficients,
// check margins.
using Natural = boost::multiprecision::cpp_int;
using Integer = boost::multiprecision::cpp_int;

// Strict decimal parse: digits only, no sign, no whitespace.
inline std::optional<Natural> parse_natural(std::string_view text)
{
    if (text.empty())
        return std::nullopt;
    for (char c : text)
        if (c < '0' || c > '9')
            return std::nullopt;
    return Natural(std::string(text));
}

// Fixed 6-fractional-digit rendering used by every report and CSV column;
// rounding follows the platform default (nearest, ties to even).
inline std::string format_fixed6(double value)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6f", value);
    return buf;
}

namespace detail {

// The analysis is written against a generic signed integer type so that a
// scan over a bounded range can run in machine words; these shims bridge
// the builtin/cpp_int API differences.

template <class I>
inline void divide_with_remainder(const I& x, const I& y, I& q, I& r)
{
    if constexpr (std::is_integral_v<I>) {
        q = x / y;
        r = x % y;
    } else {
        boost::multiprecision::divide_qr(x, y, q, r);
    }
}

template <class I>
inline int sign_of(const I& v)
{
    if constexpr (std::is_integral_v<I>)
        return v > 0 ? 1 : (v < 0 ? -1 : 0);
    else
        return v.sign();
}

template <class I>
inline double to_double(const I& v)
{
    if constexpr (std::is_integral_v<I>)
        return static_cast<double>(v);
    else
        return v.template convert_to<double>();
}

template <class I>
inline std::string to_decimal(const I& v)
{
    if constexpr (std::is_integral_v<I>)
        return std::to_string(v);
    else
        return v.str();
}

template <class I>
inline I ipow(I base, std::size_t exponent)
{
    I result(1);
    for (std::size_t i = 0; i < exponent; ++i)
        result *= base;
    return result;
}

} // namespace detail
} // namespace euclid

#endif // EUCLID_NATURAL_HPP
