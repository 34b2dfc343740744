#ifndef LIECOH_POLY_HPP
#define LIECOH_POLY_HPP

#include "liecoh/bigint.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace liecoh {

// Coefficient ring: integers (p == 0) or the prime field F_p.
struct Ring {
    long p = 0;
    bool is_field() const { return p != 0; }
    bool operator==(const Ring& o) const { return p == o.p; }
};

inline Ring ZZ() { return Ring{0}; }
inline Ring FF(long p) { return Ring{p}; }

// Ordered list of variables with cohomological degrees. Shared by reference
// between all polynomials over the same context.
struct VarTable {
    std::vector<std::string> names;
    std::vector<int> degrees;

    std::size_t size() const { return names.size(); }
    int index(const std::string& n) const;
    static std::shared_ptr<const VarTable> make(std::vector<std::string> names, std::vector<int> degrees);
};

using VarTablePtr = std::shared_ptr<const VarTable>;
using Exps = std::vector<std::uint32_t>;

class Poly {
public:
    Poly() = default;
    Poly(VarTablePtr vars, Ring ring) : vars_(std::move(vars)), ring_(ring) {}

    static Poly zero(VarTablePtr vars, Ring ring) { return Poly(std::move(vars), ring); }
    static Poly constant(VarTablePtr vars, Ring ring, Int c);
    static Poly variable(VarTablePtr vars, Ring ring, std::size_t index, Int coef = 1, std::uint32_t power = 1);

    const VarTable& vars() const { return *vars_; }
    const VarTablePtr& vars_ptr() const { return vars_; }
    Ring ring() const { return ring_; }
    const std::map<Exps, Int>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // cohomological degree of a monomial in this context
    int monomial_degree(const Exps& e) const;
    // degree if homogeneous, nullopt for 0, throws for inhomogeneous input
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const;
    int max_degree() const;

    void add_term(const Exps& e, const Int& c);

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator-() const;
    Poly operator*(const Poly& o) const;
    Poly operator*(const Int& c) const;
    bool operator==(const Poly& o) const;

    Poly pow(std::uint32_t k) const;

    // change coefficient ring Z -> F_p (or renormalize)
    Poly to_ring(Ring r) const;

    // ring map determined by variable images (all in one common target context)
    Poly substitute(const std::vector<Poly>& images) const;

    // extract the part of the given cohomological degree
    Poly degree_part(int d) const;

    // pretty-print, deterministic (graded lex, variable order of the table)
    std::string str() const;

private:
    VarTablePtr vars_;
    Ring ring_;
    std::map<Exps, Int> terms_;

    Int normal(const Int& c) const;
    void check_compatible(const Poly& o) const;
};

// all exponent vectors of the given cohomological degree
std::vector<Exps> monomials_of_degree(const VarTable& vars, int degree);

// elementary symmetric polynomial e_r of degree-2 homogeneous forms
Poly elementary_symmetric(const std::vector<Poly>& forms, std::size_t r);

} // namespace liecoh

#endif
