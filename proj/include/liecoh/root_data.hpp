#ifndef LIECOH_ROOT_DATA_HPP
#define LIECOH_ROOT_DATA_HPP

#include "liecoh/poly.hpp"
#include "liecoh/smith.hpp"

#include <string>
#include <vector>

namespace liecoh {

enum class Family { SU, Sp, E6, E7 };

enum class LatticeKind { SimplyConnected, Adjoint };

// Which group/quotient is being computed. rank_param is n for SU(n), Sp(n);
// fixed 6/7 for the exceptional families.
struct GroupSpec {
    Family family = Family::SU;
    int rank_param = 2;
    LatticeKind lattice = LatticeKind::SimplyConnected;
    int quotient_order = 1; // center order q for Adjoint, 1 otherwise

    int rank() const; // dim T of the semi-simple part
    int dim_group() const;
    std::string name() const;

    static GroupSpec simply_connected(Family f, int n);
    static GroupSpec adjoint(Family f, int n);
    static GroupSpec parse(const std::string& group, int n); // "SU","PSU","Sp","PSp","E6","PE6","E7","PE7"
};

// center order from the classification table
int center_order(Family f, int n);

// Cartan matrix in the fixed node ordering (chain 1-3-4-5-6(-7) with node 2
// on node 4 for E6/E7; natural chain for A/C types, long root last for Sp).
IntegerMatrix cartan_matrix(const GroupSpec& spec);

// identity for SimplyConnected, transpose of the Cartan matrix for Adjoint
IntegerMatrix transition_matrix(const GroupSpec& spec);

struct TransgressionData {
    std::vector<std::string> basis_names_fiber; // t1..tN (+ t0 when extended)
    std::vector<Poly> images;                   // linear forms in the omega basis
    bool has_circle = false;
    Poly varpi;                                 // tau'(t0); meaningful when has_circle
    VarTablePtr omega_vars;
};

// tau(t_i) = sum_j C(Theta)_{ji} omega_j; with_circle appends tau'(t0) = varpi
// (omega_1 for PSU/PSp/PE6, omega_2 for PE7).
TransgressionData transgression(const GroupSpec& spec, bool with_circle);

// omega variable table of the family (omega_1..omega_m, degree 2 each)
VarTablePtr omega_table(const GroupSpec& spec);

// index (0-based) of the surviving omega under the adjoint restriction
int survivor_index(const GroupSpec& spec);

} // namespace liecoh

#endif
