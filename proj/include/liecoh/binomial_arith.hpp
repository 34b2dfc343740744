#ifndef LIECOH_BINOMIAL_ARITH_HPP
#define LIECOH_BINOMIAL_ARITH_HPP

#include "liecoh/bigint.hpp"

#include <map>
#include <set>
#include <string>
#include <vector>

namespace liecoh {

// gcd of the leading binomial coefficients C(n,1..k)
Int b_gcd(long n, long k);

struct QPartition {
    std::vector<long> q0;                    // residual block of {2..n}
    std::map<long, std::vector<long>> qp;    // prime -> {p, p^2, ..., p^{r_p}}
};
QPartition q_partition(long n);

// b_{n,k-1} / b_{n,k}; asserted against the prime-power prediction
Int a_ratio(long n, long k);

// p-adic valuation of C(n,s) under the stated preconditions:
// n = p^r n' with (p,n') = 1, p^t <= s < p^{t+1}, t + 1 < r.
long ord_p_binom_checked(long n, long s, long p);

// integer sequence h with C(p^r,p^s) - p^{r-s} = sum h_i C(p^r, p^{s-i})
std::vector<Int> h_sequence(long p, long r, long s);

// Formal Z-combination of monomials omega^a * rho_I with I a set of
// generator degrees (exterior rho's), normalized modulo the omega torsion
// p^{r-t} omega^{p^t} = 0 of the ambient coefficient ring.
struct ThetaExpression {
    struct Term {
        Int coefficient;
        long omega_power = 0;
        std::vector<long> rho_indices; // sorted degrees 2k-1
        bool operator<(const Term& o) const
        {
            if (omega_power != o.omega_power) return omega_power < o.omega_power;
            return rho_indices < o.rho_indices;
        }
        bool operator==(const Term& o) const
        {
            return coefficient == o.coefficient && omega_power == o.omega_power && rho_indices == o.rho_indices;
        }
    };
    long p = 0, r = 0; // ambient PSU(p^r)
    std::vector<Term> terms;

    std::string str() const;
    bool operator==(const ThetaExpression& o) const;
};

// theta(gamma_I) for n = p^r and I a set of p-powers (1 = p^0 allowed),
// via the transfer recurrence; singleton base p^{r-s} omega^{p^s - 1}.
ThetaExpression theta_gamma(long p, long r, const std::vector<long>& index_set);

} // namespace liecoh

#endif
