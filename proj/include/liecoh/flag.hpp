#ifndef LIECOH_FLAG_HPP
#define LIECOH_FLAG_HPP

#include "liecoh/quotient.hpp"
#include "liecoh/root_data.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace liecoh {

struct RingPresentation {
    Ring ring;
    VarTablePtr vars;
    std::vector<Poly> relations;
    std::map<std::string, std::string> metadata;
};

// the degree-2 linear forms whose elementary symmetric polynomials give c_r
std::vector<Poly> omega_set(const GroupSpec& spec);

// c_r of the family, expanded in the omega variables
Poly chern_class(const GroupSpec& spec, int r);
// admissible r values (1..n for SU/E6/E7 ranges, even 2..2n for Sp)
std::vector<int> chern_range(const GroupSpec& spec);

// variable table of the flag presentation: omegas plus special Schubert classes
VarTablePtr flag_table(const GroupSpec& spec);

// Schubert presentation of H*(G/T) over Z
RingPresentation flag_presentation(const GroupSpec& spec);

// Restriction data for an adjoint quotient: solves tau = 0 over Z by Smith
// normal form. Every omega_i maps to multiplier[i] * z, with q z = 0.
struct RestrictionMap {
    GroupSpec spec;
    std::vector<Int> multipliers; // length m, reduced into [0, q)
    Int q;                        // torsion order of the surviving class
    int survivor;                 // omega index carrying multiplier 1
    VarTablePtr restricted_vars;  // z plus the special Schubert classes
    VarTablePtr flag_vars;

    // substitution omega_i -> multiplier_i * z (x-classes fixed)
    Poly restrict(const Poly& p) const;
    // exact division of restrict(p) by z; throws if not divisible
    Poly restrict_div_z(const Poly& p) const;
};

RestrictionMap restriction_map(const GroupSpec& spec);

// image of c_r under the restriction, as a polynomial in z (and x's)
Poly restricted_chern(const GroupSpec& spec, int r);

// E3^{*,0}(PG) as a quotient of the restricted ring:
// Z[z, x..] / < restricted flag relations, q z >
std::shared_ptr<QuotientRing> e3_base_ring(const GroupSpec& spec, Ring ring);

// H*(G/T) as a quotient ring over Z or F_p
std::shared_ptr<QuotientRing> flag_ring(const GroupSpec& spec, Ring ring);

// exceptional flag relations in the symbol table (w2, c2.., x..), by half-degree
std::map<int, Poly> exceptional_symbol_relations(const GroupSpec& spec, VarTablePtr symbols);

} // namespace liecoh

#endif
