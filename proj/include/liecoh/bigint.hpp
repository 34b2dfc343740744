#ifndef LIECOH_BIGINT_HPP
#define LIECOH_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>

namespace liecoh {

using Int = boost::multiprecision::cpp_int;

inline Int gcd(Int a, Int b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// g = gcd(a,b) = x*a + y*b
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y)
{
    if (b == 0) {
        x = a < 0 ? -1 : 1;
        y = 0;
        return a < 0 ? Int(-a) : a;
    }
    Int x1, y1;
    Int g = ext_gcd(b, a % b, x1, y1);
    x = y1;
    y = x1 - (a / b) * y1;
    return g;
}

inline Int binomial(long n, long k)
{
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

// p-adic valuation of binomial(n,k) by carry counting (no factorials)
inline long ord_p_binomial(long n, long k, long p)
{
    long carries = 0;
    long a = k, b = n - k;
    long carry = 0;
    while (a > 0 || b > 0 || carry > 0) {
        long s = a % p + b % p + carry;
        carry = s >= p ? 1 : 0;
        carries += carry;
        a /= p;
        b /= p;
        if (a == 0 && b == 0 && carry == 0) break;
    }
    return carries;
}

inline Int mod_positive(const Int& a, const Int& m)
{
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

// inverse of a mod p (p prime)
inline Int mod_inverse(const Int& a, const Int& p)
{
    Int x, y;
    Int g = ext_gcd(mod_positive(a, p), p, x, y);
    if (g != 1) throw std::domain_error("mod_inverse: not invertible");
    return mod_positive(x, p);
}

} // namespace liecoh

#endif
