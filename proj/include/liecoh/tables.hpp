#ifndef LIECOH_TABLES_HPP
#define LIECOH_TABLES_HPP

#include "liecoh/charpoly.hpp"

namespace liecoh {

// Degree sets of the primary characteristic polynomial families.
std::vector<int> degree_set_integral(const GroupSpec& spec);          // D(G)
std::vector<int> degree_set_modp(const GroupSpec& spec, long p);      // D(G,p)
std::vector<int> degree_set_modp_quotient(const GroupSpec& spec, long p); // D(PG,p)
int h_degree(const GroupSpec& spec, long p);                          // h(G)

// admissible mod-p pairs: (SU(n), p | n), (Sp(n), 2), (E6, 3), (E7, 2)
bool modp_in_scope(const GroupSpec& spec, long p);

// Stored characteristic polynomial sets (symbol-level polynomials).
// For each entry, characteristic.homogeneous_degree() == 2 * (its D-set value).
std::vector<OneForm> stored_integral_set(CharPolyContext& ctx);           // S(G)
std::vector<OneForm> stored_modp_set(CharPolyContext& ctx, long p);       // S_p(G)
std::vector<OneForm> stored_modp_quotient_set(CharPolyContext& ctx, long p); // S_p(PG)

// Regenerated sets.
std::vector<OneForm> recipe_integral_set(CharPolyContext& ctx);           // from the presentation shape
std::vector<OneForm> recipe_modp_set(CharPolyContext& ctx, long p);       // from modp_presentation
std::vector<OneForm> recipe_modp_quotient_set(CharPolyContext& ctx, long p); // via lift_characteristic

// Stored derivative tables, as polynomials in the restricted variables.
std::vector<Poly> stored_derivatives_integral(CharPolyContext& ctx);      // integral rows
std::vector<Poly> stored_derivatives_modp(CharPolyContext& ctx, long p);  // mod-p rows

} // namespace liecoh

#endif
