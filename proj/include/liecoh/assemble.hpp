#ifndef LIECOH_ASSEMBLE_HPP
#define LIECOH_ASSEMBLE_HPP

#include "liecoh/binomial_arith.hpp"
#include "liecoh/bockstein_complex.hpp"
#include "liecoh/charpoly.hpp"
#include "liecoh/tables.hpp"

namespace liecoh {

// ---- mod-p cohomology rings of the adjoint groups ----

struct ModPRing {
    struct EvenGen {
        std::string name;
        int degree;
        int nilpotence;
    };
    struct OddGen {
        std::string name;
        int degree;
        bool delta_flavor;  // square recorded separately instead of forced zero
        std::string square; // rendered even class, "0" when exterior
    };
    GroupSpec spec;
    long p = 0;
    std::vector<EvenGen> even;
    std::vector<OddGen> odd;

    std::map<int, long> series(int max_degree) const;
    Int total_dim() const;
};

// Requires p | q; callers with (p, q) = 1 are covered by the covering-map
// isomorphism with H*(G x S^1; F_p) and rejected here.
ModPRing mod_p_ring(const GroupSpec& spec, long p);

// ---- integral cohomology of the adjoint groups ----

struct ThetaRelation {
    std::vector<long> index_set; // I
    ThetaExpression value;       // theta(gamma_I); the ideal generator is omega * value
};

struct SigmaIdeal {
    long p = 0;
    std::vector<ModPRing::EvenGen> even;                 // truncated even part
    std::vector<std::pair<std::string, int>> rho_factors; // exterior tensor factor
    std::vector<std::string> relations;                   // rendered extra relations
    std::vector<ThetaRelation> theta_relations;           // PSU: omega * theta(gamma_I)
};

struct IntegralRing {
    GroupSpec spec;
    std::vector<std::pair<std::string, int>> free_exterior; // rho generators of F(PG)
    std::vector<std::string> free_squares;                  // e.g. "rho3^2 = x3"
    std::vector<SigmaIdeal> sigma;
    std::vector<std::string> action_relations;
};

IntegralRing integral_ring(const GroupSpec& spec);            // SU and Sp families
IntegralRing adjoint_exceptional_ring(const GroupSpec& spec); // E6 and E7

// dimension series of an exterior algebra on the given degrees
std::map<int, long> exterior_series(const std::vector<int>& degrees, int max_degree);

// ---- Bockstein and Steenrod values on the curated generators ----

// beta_p(zeta_{2s-1}) as a normal-form class in E3^{*,0}(PG) over Z
Poly bockstein_value(CharPolyContext& ctx, int s, long p);
// the paper-shaped integral lifts of the quotient characteristic polynomials
Poly stored_bockstein_lift(CharPolyContext& ctx, int s, long p);

// ---- Bockstein cochain complexes of the exceptional quotients ----

BocksteinComplex pe6_bockstein_complex();
BocksteinComplex pe7_bockstein_complex();

// dimension series of the curated Im delta presentations
std::map<int, long> pe6_im_delta_presentation_series(int max_degree);
std::map<int, long> pe7_im_delta_presentation_series(int max_degree);

} // namespace liecoh

#endif
