#ifndef LIECOH_QUOTIENT_HPP
#define LIECOH_QUOTIENT_HPP

#include "liecoh/graded.hpp"
#include "liecoh/poly.hpp"
#include "liecoh/smith.hpp"

#include <map>
#include <optional>
#include <stdexcept>

namespace liecoh {

struct DimensionBudgetExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

long dimension_budget();

// Graded quotient A = R[vars] / <relations>, computed degreewise by exact
// linear algebra: Smith normal form over Z, Gaussian elimination over F_p.
class QuotientRing {
public:
    QuotientRing(VarTablePtr vars, Ring ring, std::vector<Poly> relations);

    const VarTablePtr& vars() const { return vars_; }
    Ring ring() const { return ring_; }
    const std::vector<Poly>& relations() const { return relations_; }

    // additive structure of the degree-d component
    GradedAbelianGroup::Piece group(int degree);
    GradedAbelianGroup groups(int max_degree);

    bool contains(const Poly& p);                 // ideal membership
    Poly normal_form(const Poly& p);              // canonical coset representative
    bool same_class(const Poly& a, const Poly& b);
    Int class_order(const Poly& p);               // 0 = infinite order
    // smallest of: class of p in the quotient localized at prime q (projection
    // of the class to the q-primary part of the degree component)
    Poly primary_part(const Poly& p, long q);

    // find X with k*X == target modulo the ideal (homogeneous target)
    std::optional<Poly> divide_class(const Poly& target, const Int& k);
    // coefficients g_j with p == sum g_j * relations[j] (exact, homogeneous p)
    std::optional<std::vector<Poly>> express_in_ideal(const Poly& p);

    // free-lattice interface (degree component must be torsion-free over Z,
    // or the ring a field): coordinates of a class and basis representatives
    long dim(int degree);
    std::vector<Int> coords(const Poly& p);
    Poly basis_element(int degree, long j);

private:
    VarTablePtr vars_;
    Ring ring_;
    std::vector<Poly> relations_;

    struct DegreeData {
        std::vector<Exps> monomials;
        std::map<Exps, std::size_t> index;
        // Z path
        SNFResult snf;           // of the relation-column matrix
        bool structure_only = false;
        // F_p path: reduced pivot rows over F_p
        std::vector<std::vector<long>> pivot_rows;
        std::vector<long> pivot_col_of_row;
        std::map<std::size_t, std::size_t> pivot_of_col;
        long fp_rank = 0;
        std::vector<long> free_cols; // non-pivot columns (F_p basis)
    };
    std::map<int, DegreeData> cache_;
    bool structure_only_ = false;

    DegreeData& degree_data(int degree);
    std::vector<Int> to_vector(const Poly& p, const DegreeData& dd, int degree) const;
    Poly from_vector(const std::vector<Int>& v, const DegreeData& dd) const;
    std::vector<Int> reduced_coords(const Poly& p, int degree); // canonical (Z path)
};

} // namespace liecoh

#endif
