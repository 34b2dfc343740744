#ifndef LIECOH_BOCKSTEIN_COMPLEX_HPP
#define LIECOH_BOCKSTEIN_COMPLEX_HPP

#include "liecoh/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace liecoh {

// Finite-dimensional graded-commutative F_p algebra with a degree +1
// derivation given on generators: the mod-p cochain complex (H*(X;F_p), delta_p).
class BocksteinComplex {
public:
    struct EvenGen {
        std::string name;
        int degree;
        int nilpotence; // x^nilpotence = 0
    };
    struct OddGen {
        std::string name;
        int degree;
        // square as an exponent vector over the even generators; empty = zero square
        std::vector<int> square;
        // delta value as an exponent vector over the even generators; empty = zero
        std::vector<int> delta;
    };

    BocksteinComplex(long p, std::vector<EvenGen> evens, std::vector<OddGen> odds);

    long p() const { return p_; }
    long total_dim() const;

    // verifies delta^2 = 0 on the whole basis; throws otherwise
    void check_differential() const;

    std::map<int, long> cohomology_dims() const; // H-bar per degree
    std::map<int, long> image_dims() const;      // Im delta per degree

    struct Basis {
        std::vector<int> even;  // exponents, bounded by nilpotence
        std::vector<int> odd;   // 0/1
        bool operator<(const Basis& o) const { return std::tie(even, odd) < std::tie(o.even, o.odd); }
    };
    using Element = std::map<Basis, long>; // coefficients mod p

    int degree(const Basis& b) const;
    Element mul(const Element& a, const Element& b) const;
    Element delta(const Element& a) const;
    Element gen(const std::string& name) const;
    bool is_zero(const Element& a) const;
    Element sub(const Element& a, const Element& b) const;

private:
    long p_;
    std::vector<EvenGen> evens_;
    std::vector<OddGen> odds_;
    std::vector<Basis> basis_;

    Element mul_basis(const Basis& a, const Basis& b) const;
    void enumerate();
    const std::vector<Basis>& basis() const { return basis_; }
    std::map<int, std::vector<Basis>> by_degree_;
    friend struct BocksteinComplexTestAccess;
};

} // namespace liecoh

#endif
