#ifndef LIECOH_STEENROD_HPP
#define LIECOH_STEENROD_HPP

#include "liecoh/charpoly.hpp"

namespace liecoh {

// Steenrod squares on characteristic polynomials, computed through the
// splitting alphabet: Sq is the ring map sending each degree-2 form L to
// L + L^2, so Sq(c_s) is a universal symmetric-function expression in the c's.
// Mod-2 families only.
class SteenrodCalculus {
public:
    // max_half_degree bounds the computed pieces of Sq(c_r); 0 picks the
    // family-wide default 2*top - 1
    explicit SteenrodCalculus(CharPolyContext& ctx, int max_half_degree = 0);

    // total square of a symbol polynomial over F_2 (inhomogeneous)
    Poly total_sq(const Poly& p);
    // Sq^{2k}: the degree (deg p + 2k) component
    Poly sq(const Poly& p, int k);

    // certificate that phi_2 annihilates the class of p: p decomposes as a sum
    // of products (element of ker sigma-hat) x (flag-kernel generator)
    bool phi2_kills(const Poly& p);

private:
    CharPolyContext& ctx_;
    std::map<int, Poly> sq_c_; // total Sq(c_r) as a symbol polynomial
    int max_degree_;
    void build(int max_degree);
};

} // namespace liecoh

#endif
