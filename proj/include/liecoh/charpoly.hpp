#ifndef LIECOH_CHARPOLY_HPP
#define LIECOH_CHARPOLY_HPP

#include "liecoh/flag.hpp"
#include "liecoh/koszul.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>

namespace liecoh {

// A fiber-degree-1 class carried by its characteristic polynomial.
// The polynomial lives in the family's symbol table (c_r symbols for SU/Sp;
// w2, c_r, x_j for E6/E7).
struct OneForm {
    std::string label;
    Poly characteristic;
    int cohomological_degree = 0; // 2 deg(P) - 1
    Ring coefficient_ring;
};

// Working context for one adjoint family: the symbol table, the restriction
// data, the varpi-derivation and the theta machinery.
class CharPolyContext {
public:
    explicit CharPolyContext(const GroupSpec& adjoint_spec);

    const GroupSpec& spec() const { return spec_; }
    const VarTablePtr& symbols() const { return symbols_; }
    const RestrictionMap& restriction() const { return rm_; }
    long default_prime() const { return prime_; }

    // symbol constructors
    Poly csym(int r) const;                 // c_r
    Poly wsym() const;                      // w2 (throws for SU/Sp)
    Poly xsym(const std::string& n) const;  // special Schubert class

    // sigma-hat: restriction of a symbol polynomial into Z[z, x..]
    Poly restrict_symbols(const Poly& p) const;
    // the varpi-derivation: restrict, then exact division by z
    Poly derivative_wrt_varpi(const Poly& p) const;
    // class of the derivation in E3^{*,0}(PG), reduced to normal form
    Poly theta_bar(const Poly& p, Ring ring);
    // additive order of theta_bar(p) in E3^{*,0}(PG) over Z
    Int theta_order(const Poly& p);

    // membership in <Im tau~'> (circle-extended): every term carries an omega
    // (a w2 or c factor at symbol level)
    bool in_im_tau_circle(const Poly& p) const;
    // membership in <Im tau~_p> for the adjoint transgression: sigma-hat = 0 mod p
    bool in_im_tau_modp(const Poly& p, long prime) const;
    // membership in ker f at symbol level (flag relations ideal)
    bool in_ker_f(const Poly& p, Ring ring);

    // expansion certificate p = sum g_i tau~(t_i) (+ h varpi), in omega variables
    std::optional<std::vector<Poly>> expand_in_tau_modp(const Poly& omega_poly, long prime) const;

    // Lemma 3.11: P' = P + (H - dP/dvarpi) varpi with H in <Im tau~_p> solving
    // f(H) = f(dP/dvarpi). Returns P (unchanged) when the derivative already
    // restricts to zero; nullopt when theta_bar does not vanish (no lift).
    std::optional<Poly> lift_characteristic(const Poly& p, long prime);

    QuotientRing& e3(Ring ring);
    QuotientRing& symbol_flag_ideal(Ring ring); // quotient by the flag relations, symbol level

    const std::map<int, Poly>& symbol_relations() const { return symbol_relations_; }

private:
    GroupSpec spec_;
    long prime_;
    VarTablePtr symbols_;
    RestrictionMap rm_;
    std::map<int, Poly> symbol_relations_; // half-degree -> relation (Z coefficients)
    std::map<long, std::shared_ptr<QuotientRing>> e3_;
    std::map<long, std::shared_ptr<QuotientRing>> flag_ideal_;
    std::vector<Int> chern_constants_; // sigma(c_r) = const_r z^r
    Int w2_mult_;
};

// Mod-p presentation data obtained by eliminating special classes with a unit
// coefficient; symbol level.
struct ModPPresentation {
    long p = 0;
    VarTablePtr vars;
    std::vector<Poly> deltas;
    std::vector<Poly> y_relations;
    std::vector<std::string> surviving;
};

ModPPresentation modp_presentation(const GroupSpec& spec, long p);

} // namespace liecoh

#endif
