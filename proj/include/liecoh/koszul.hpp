#ifndef LIECOH_KOSZUL_HPP
#define LIECOH_KOSZUL_HPP

#include "liecoh/quotient.hpp"

#include <map>
#include <memory>

namespace liecoh {

// Element of H*(G/T) (x) Lambda(t_1..t_m): base coefficients indexed by
// square-free fiber monomials (bitmask over t's).
struct KoszulElement {
    std::map<std::uint32_t, Poly> comps;

    void add(std::uint32_t mask, const Poly& p)
    {
        auto it = comps.find(mask);
        if (it == comps.end()) {
            if (!p.is_zero()) comps.emplace(mask, p);
        } else {
            it->second = it->second + p;
            if (it->second.is_zero()) comps.erase(it);
        }
    }
    bool is_zero() const { return comps.empty(); }
};

// The second page of the fibration's spectral sequence with its differential
// d2(a (x) t) = tau(t) a (x) 1, extended as a derivation over the fiber.
class KoszulComplex {
public:
    KoszulComplex(std::shared_ptr<QuotientRing> base, std::vector<Poly> tau_images);

    int fiber_rank() const { return static_cast<int>(tau_.size()); }
    QuotientRing& base() { return *base_; }

    KoszulElement d2(const KoszulElement& x) const;

    // homology ker d2 / im d2 at bidegree (base cohomological degree, fiber degree)
    GradedAbelianGroup::Piece homology(int base_degree, int fiber_degree);

    // sum over bidegrees of given total degree (field coefficients: dimensions)
    std::map<int, long> e3_dimension_series(int max_total_degree);

    // cycle/boundary tests in one bidegree (field path suffices for the checks here)
    bool is_cycle(const KoszulElement& x);
    bool is_boundary(const KoszulElement& x);
    bool same_e3_class(const KoszulElement& x, const KoszulElement& y);

private:
    std::shared_ptr<QuotientRing> base_;
    std::vector<Poly> tau_;

    struct Bidegree {
        long base_dim = 0;
        std::vector<std::uint32_t> masks;
        // matrix of d2 out of this bidegree, in lattice coordinates
        IntegerMatrix out;
    };
    std::map<std::pair<int, int>, Bidegree> cache_;
    Bidegree& bidegree(int a, int b);
    std::vector<Int> coords_of(const KoszulElement& x, int a, int b);
};

} // namespace liecoh

#endif
