#include "liecoh/binomial_arith.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace liecoh {

Int b_gcd(long n, long k)
{
    if (k < 1 || k > n) throw std::out_of_range("b_gcd: 1 <= k <= n required");
    Int g = 0;
    for (long i = 1; i <= k; ++i) g = gcd(g, binomial(n, i));
    return g;
}

QPartition q_partition(long n)
{
    if (n < 2) throw std::out_of_range("q_partition: n >= 2");
    QPartition out;
    long m = n;
    std::map<long, long> factor;
    for (long p = 2; p * p <= m; ++p)
        while (m % p == 0) {
            ++factor[p];
            m /= p;
        }
    if (m > 1) ++factor[m];
    std::set<long> covered;
    for (const auto& [p, r] : factor) {
        std::vector<long> block;
        long pw = 1;
        for (long i = 1; i <= r; ++i) {
            pw *= p;
            block.push_back(pw);
            covered.insert(pw);
        }
        out.qp[p] = std::move(block);
    }
    for (long k = 2; k <= n; ++k)
        if (!covered.count(k)) out.q0.push_back(k);
    return out;
}

Int a_ratio(long n, long k)
{
    if (k < 2 || k > n) throw std::out_of_range("a_ratio: 2 <= k <= n");
    Int num = b_gcd(n, k - 1), den = b_gcd(n, k);
    if (num % den != 0) throw std::logic_error("a_ratio: gcd chain broken");
    Int a = num / den;
    // predicted value: p_i when k is a tracked prime power, 1 otherwise
    QPartition qp = q_partition(n);
    Int predicted = 1;
    for (const auto& [p, block] : qp.qp)
        if (std::find(block.begin(), block.end(), k) != block.end()) predicted = p;
    if (a != predicted) throw std::logic_error("a_ratio: value disagrees with the prime-power prediction");
    return a;
}

long ord_p_binom_checked(long n, long s, long p)
{
    long r = 0, m = n;
    while (m % p == 0) {
        m /= p;
        ++r;
    }
    long t = 0, pw = 1;
    while (pw * p <= s) {
        pw *= p;
        ++t;
    }
    if (!(pw <= s && s < pw * p)) throw std::domain_error("ord_p_binom: inconsistent t");
    if (!(t + 1 < r)) throw std::domain_error("ord_p_binom: requires t + 1 < r");
    long v = ord_p_binomial(n, s, p);
    if (v < r - t) throw std::logic_error("ord_p_binom: valuation below the bound");
    if ((v == r - t) != (s == pw)) throw std::logic_error("ord_p_binom: equality case mismatch");
    return v;
}

std::vector<Int> h_sequence(long p, long r, long s)
{
    if (!(1 <= s && s <= r)) throw std::out_of_range("h_sequence: 1 <= s <= r");
    long pr = 1;
    for (long i = 0; i < r; ++i) pr *= p;
    long ps = 1;
    for (long i = 0; i < s; ++i) ps *= p;
    Int target = binomial(pr, ps);
    {
        Int sub = 1;
        for (long i = 0; i < r - s; ++i) sub *= p;
        target -= sub;
    }
    std::vector<Int> cols;
    long q = ps;
    for (long i = 1; i <= s; ++i) {
        q /= p;
        cols.push_back(binomial(pr, q));
    }
    // greedy division, largest column first
    std::vector<Int> h(cols.size(), 0);
    Int rem = target;
    for (std::size_t i = 0; i < cols.size(); ++i) {
        h[i] = rem / cols[i];
        rem -= h[i] * cols[i];
    }
    if (rem != 0) {
        // extended-gcd solve over the column lattice
        Int g = cols[0];
        std::vector<Int> comb(cols.size(), 0);
        comb[0] = 1;
        for (std::size_t i = 1; i < cols.size(); ++i) {
            Int x, y;
            Int g2 = ext_gcd(g, cols[i], x, y);
            for (auto& cfs : comb) cfs *= x;
            comb[i] = y;
            g = g2;
        }
        if (target % g != 0) throw std::logic_error("h_sequence: no integer solution");
        Int f = target / g;
        for (std::size_t i = 0; i < cols.size(); ++i) h[i] = comb[i] * f;
        rem = target;
        for (std::size_t i = 0; i < cols.size(); ++i) rem -= h[i] * cols[i];
        if (rem != 0) throw std::logic_error("h_sequence: certificate failed");
    }
    return h;
}

namespace {

long ipow(long b, long e)
{
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

// reduce a coefficient modulo the omega-power torsion p^{r-t} omega^{p^t} = 0
Int reduce_omega_coef(Int c, long a, long p, long r)
{
    if (a == 0) return c;
    long t = 0, pw = 1;
    while (pw * p <= a) {
        pw *= p;
        ++t;
    }
    if (t >= r) return 0; // omega^{p^r} = 0
    Int modulus = 1;
    for (long i = 0; i < r - t; ++i) modulus *= p;
    return mod_positive(c, modulus);
}

void normalize(ThetaExpression& e)
{
    std::map<std::pair<long, std::vector<long>>, Int> acc;
    for (auto& t : e.terms) {
        std::vector<long> s = t.rho_indices;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue; // rho^2 = 0
        acc[{t.omega_power, s}] += t.coefficient;
    }
    e.terms.clear();
    for (auto& [key, c] : acc) {
        Int cc = reduce_omega_coef(c, key.first, e.p, e.r);
        if (cc == 0) continue;
        ThetaExpression::Term t;
        t.coefficient = cc;
        t.omega_power = key.first;
        t.rho_indices = key.second;
        e.terms.push_back(std::move(t));
    }
    std::sort(e.terms.begin(), e.terms.end());
}

} // namespace

std::string ThetaExpression::str() const
{
    if (terms.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& t : terms) {
        if (!first) os << " + ";
        first = false;
        bool wrote = false;
        if (t.coefficient != 1 || (t.omega_power == 0 && t.rho_indices.empty())) {
            os << t.coefficient;
            wrote = true;
        }
        if (t.omega_power > 0) {
            if (wrote) os << "*";
            os << "w";
            if (t.omega_power > 1) os << "^" << t.omega_power;
            wrote = true;
        }
        for (long d : t.rho_indices) {
            if (wrote) os << "*";
            os << "rho" << d;
            wrote = true;
        }
    }
    return os.str();
}

bool ThetaExpression::operator==(const ThetaExpression& o) const
{
    return p == o.p && r == o.r && terms == o.terms;
}

namespace {

// exact merge without the omega-torsion reduction (kept for the final step
// only, so that the exactness of the division by p is visible)
void merge_exact(ThetaExpression& e)
{
    std::map<std::pair<long, std::vector<long>>, Int> acc;
    for (auto& t : e.terms) {
        std::vector<long> s = t.rho_indices;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end()) continue; // rho^2 = 0
        acc[{t.omega_power, s}] += t.coefficient;
    }
    e.terms.clear();
    for (auto& [key, c] : acc) {
        if (c == 0) continue;
        ThetaExpression::Term t;
        t.coefficient = c;
        t.omega_power = key.first;
        t.rho_indices = key.second;
        e.terms.push_back(std::move(t));
    }
    std::sort(e.terms.begin(), e.terms.end());
}

ThetaExpression raw_theta(long p, long r, const std::vector<long>& I)
{
    ThetaExpression out;
    out.p = p;
    out.r = r;
    if (I.empty()) return out;

    if (I.size() == 1) {
        long s = 0, v = I[0];
        while (v > 1) {
            v /= p;
            ++s;
        }
        ThetaExpression::Term t;
        Int c = 1;
        for (long i = 0; i < r - s; ++i) c *= p;
        t.coefficient = c;
        t.omega_power = I[0] - 1; // p^s - 1
        out.terms.push_back(std::move(t));
        return out;
    }

    long top = I.back();
    std::vector<long> Ie(I.begin(), I.end() - 1);
    std::vector<long> Id = Ie;
    Id.push_back(top / p);
    std::sort(Id.begin(), Id.end());

    auto half = [&](ThetaExpression ex) {
        for (auto& t : ex.terms) {
            if (t.coefficient % p != 0) throw std::logic_error("theta_gamma: division by p not exact");
            t.coefficient /= p;
        }
        return ex;
    };

    ThetaExpression a = half(raw_theta(p, r, Ie));
    for (auto& t : a.terms) t.rho_indices.push_back(2 * top - 1);

    ThetaExpression out2 = a;
    if (std::find(Ie.begin(), Ie.end(), top / p) == Ie.end()) {
        ThetaExpression b = half(raw_theta(p, r, Id));
        for (auto& t : b.terms) t.omega_power += top - top / p;
        out2.terms.insert(out2.terms.end(), b.terms.begin(), b.terms.end());
    }
    out2.p = p;
    out2.r = r;
    merge_exact(out2);
    return out2;
}

} // namespace

ThetaExpression theta_gamma(long p, long r, const std::vector<long>& index_set)
{
    std::vector<long> I = index_set;
    std::sort(I.begin(), I.end());
    if (std::adjacent_find(I.begin(), I.end()) != I.end())
        throw std::invalid_argument("theta_gamma: repeated index");
    for (long v : I) {
        long w = v;
        while (w % p == 0) w /= p;
        if (w != 1 || v > ipow(p, r)) throw std::invalid_argument("theta_gamma: index must be a p-power <= p^r");
    }
    ThetaExpression out = raw_theta(p, r, I);
    normalize(out);
    return out;
}

} // namespace liecoh
