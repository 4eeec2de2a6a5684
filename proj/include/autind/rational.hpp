#ifndef AUTIND_RATIONAL_HPP
#define AUTIND_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <string>

#include <boost/multiprecision/gmp.hpp>

#include "errors.hpp"

namespace autind {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;

inline Rational make_rational(std::int64_t p, std::int64_t q = 1)
{
    require(q != 0, ErrorKind::InvalidArgument, "zero denominator");
    return Rational(Integer(p), Integer(q));
}

inline Integer num(const Rational& x) { return boost::multiprecision::numerator(x); }
inline Integer den(const Rational& x) { return boost::multiprecision::denominator(x); }

inline bool is_integer(const Rational& x) { return den(x) == 1; }

inline std::int64_t to_int64(const Integer& z)
{
    require(z >= Integer(INT64_MIN) && z <= Integer(INT64_MAX), ErrorKind::InvalidArgument,
            "integer does not fit in 64 bits: " + z.str());
    return z.convert_to<std::int64_t>();
}

inline Integer floor_div(const Integer& a, const Integer& b)
{
    Integer q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        q -= 1;
    return q;
}

inline Integer floor(const Rational& x) { return floor_div(num(x), den(x)); }

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rational& x)
{
    if (is_integer(x))
        return num(x).str();
    return num(x).str() + "/" + den(x).str();
}

inline std::int64_t lcm64(std::int64_t a, std::int64_t b)
{
    const std::int64_t l = std::lcm(a, b);
    require(l > 0 && l < (std::int64_t(1) << 40), ErrorKind::BudgetExceeded, "cyclotomic conductor overflow");
    return l;
}

} // namespace autind

#endif // AUTIND_RATIONAL_HPP
