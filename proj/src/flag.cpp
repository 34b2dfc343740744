#include "liecoh/flag.hpp"

#include <algorithm>
#include <stdexcept>

namespace liecoh {

namespace {

Poly w(const VarTablePtr& t, int i, Int c = 1) // omega_i, 1-based
{
    return Poly::variable(t, ZZ(), static_cast<std::size_t>(i - 1), std::move(c));
}

// Lift a polynomial from the omega table into the flag table (same leading vars).
Poly widen(const Poly& p, const VarTablePtr& flag)
{
    Poly out(flag, p.ring());
    std::size_t extra = flag->size() - p.vars().size();
    for (const auto& [e, c] : p.terms()) {
        Exps e2 = e;
        e2.insert(e2.end(), extra, 0);
        out.add_term(e2, c);
    }
    return out;
}

} // namespace

std::vector<Poly> omega_set(const GroupSpec& spec)
{
    auto t = omega_table(spec);
    int n = spec.rank_param;
    std::vector<Poly> out;
    switch (spec.family) {
        case Family::SU:
            out.push_back(w(t, 1));
            for (int k = 2; k <= n - 1; ++k) out.push_back(w(t, k) - w(t, k - 1));
            out.push_back(-w(t, n - 1));
            break;
        case Family::Sp:
            out.push_back(w(t, 1));
            out.push_back(-w(t, 1));
            for (int k = 2; k <= n; ++k) {
                Poly d = w(t, k) - w(t, k - 1);
                out.push_back(d);
                out.push_back(-d);
            }
            break;
        case Family::E6:
            out = {w(t, 6), w(t, 5) - w(t, 6), w(t, 4) - w(t, 5), w(t, 2) + w(t, 3) - w(t, 4),
                   w(t, 1) + w(t, 2) - w(t, 3), w(t, 2) - w(t, 1)};
            break;
        case Family::E7:
            out = {w(t, 7), w(t, 6) - w(t, 7), w(t, 5) - w(t, 6), w(t, 4) - w(t, 5),
                   w(t, 2) + w(t, 3) - w(t, 4), w(t, 1) + w(t, 2) - w(t, 3), w(t, 2) - w(t, 1)};
            break;
    }
    return out;
}

std::vector<int> chern_range(const GroupSpec& spec)
{
    std::vector<int> r;
    int top = 0;
    switch (spec.family) {
        case Family::SU: top = spec.rank_param; break;
        case Family::Sp: top = 2 * spec.rank_param; break;
        case Family::E6: top = 6; break;
        case Family::E7: top = 7; break;
    }
    for (int k = 1; k <= top; ++k) r.push_back(k);
    return r;
}

Poly chern_class(const GroupSpec& spec, int r)
{
    auto range = chern_range(spec);
    if (std::find(range.begin(), range.end(), r) == range.end())
        throw std::out_of_range("chern_class: r out of range for the family");
    return elementary_symmetric(omega_set(spec), static_cast<std::size_t>(r));
}

VarTablePtr flag_table(const GroupSpec& spec)
{
    auto om = omega_table(spec);
    std::vector<std::string> names = om->names;
    std::vector<int> degs = om->degrees;
    auto add = [&](const std::string& n, int halfdeg) {
        names.push_back(n);
        degs.push_back(2 * halfdeg);
    };
    if (spec.family == Family::E6) {
        add("x3", 3);
        add("x4", 4);
    } else if (spec.family == Family::E7) {
        add("x3", 3);
        add("x4", 4);
        add("x5", 5);
        add("x9", 9);
    }
    return VarTable::make(std::move(names), std::move(degs));
}

std::map<int, Poly> exceptional_symbol_relations(const GroupSpec& spec, VarTablePtr symbols)
{
    if (spec.family != Family::E6 && spec.family != Family::E7)
        throw std::invalid_argument("exceptional_symbol_relations: E6/E7 only");
    std::map<int, Poly> out;
    const auto& T = symbols;
    Ring Z = ZZ();
    auto V = [&](const std::string& n) { return Poly::variable(T, Z, static_cast<std::size_t>(T->index(n))); };
    auto C = [&](int r) { return V("c" + std::to_string(r)); };
    Poly w2 = V("w2");
    Poly x3 = V("x3");
    Poly x4 = V("x4");
    Poly w2_2 = w2 * w2, w2_3 = w2 * w2 * w2, w2_4 = w2 * w2 * w2 * w2;

    out[2] = w2_2 * 4 - C(2);
    out[3] = x3 * 2 + w2_3 * 2 - C(3);
    out[4] = x4 * 3 + w2_4 - C(4);
    out[6] = x3 * x3 - w2 * C(5) + C(6) * 2;

    if (spec.family == Family::E6) {
        out[5] = w2_2 * x3 * 2 - w2 * C(4) + C(5);
        out[8] = x4 * (C(4) - w2_4) - C(5) * x3 * 2 - w2_2 * C(6) + w2_3 * C(5);
        out[9] = x3 * C(6) * 2 - w2_3 * C(6);
        out[12] = x4 * x4 * x4 - C(6) * C(6);
    } else {
        Poly x5 = V("x5");
        Poly x9 = V("x9");
        Poly A = w2_2 * x3 * 2 - w2 * C(4) + C(5); // recurring block
        Poly B = w2_3 * 2 - C(3);
        out[5] = x5 * 2 - w2_2 * x3 * 2 + w2 * C(4) - C(5);
        out[8] = x4 * x4 * 3 - x5 * B - x3 * C(5) * 2 + w2 * C(7) * 2 - w2_2 * C(6) + w2_3 * C(5);
        out[9] = x9 * 2 + x4 * A - x3 * C(6) * 2 - w2_2 * C(7) + w2_3 * C(6);
        out[10] = x5 * x5 - x3 * C(7) * 2 + w2_3 * C(7);
        out[12] = x4 * x4 * x4 - x5 * C(7) * 4 - C(6) * C(6) + B * (x9 + x4 * x5) + w2 * x5 * C(6) * 2 +
                  w2 * x4 * C(7) * 3 + C(5) * C(7);
        out[14] = C(7) * C(7) - A * x9 + x3 * x4 * C(7) * 2 - w2_3 * x4 * C(7);
        out[18] = x9 * x9 + x5 * C(6) * C(7) * 2 - x4 * C(7) * C(7) - A * x4 * x9 - B * x5 * x5 * x5 -
                  w2 * x5 * x5 * C(7) * 5;
    }
    for (const auto& [d, r] : out)
        if (r.homogeneous_degree() != std::optional<int>(2 * d))
            throw std::logic_error("exceptional_symbol_relations: degree mismatch at " + std::to_string(d));
    return out;
}

namespace {

// symbol table for the exceptional relation data
VarTablePtr exceptional_symbols(const GroupSpec& spec)
{
    if (spec.family == Family::E6)
        return VarTable::make({"w2", "c2", "c3", "c4", "c5", "c6", "x3", "x4"},
                              {2, 4, 6, 8, 10, 12, 6, 8});
    return VarTable::make({"w2", "c2", "c3", "c4", "c5", "c6", "c7", "x3", "x4", "x5", "x9"},
                          {2, 4, 6, 8, 10, 12, 14, 6, 8, 10, 18});
}

// substitute symbol polynomials into the flag table
Poly expand_symbols(const GroupSpec& spec, const Poly& p)
{
    auto flag = flag_table(spec);
    Ring ring = p.ring();
    std::vector<Poly> images;
    for (const auto& nm : p.vars().names) {
        if (nm == "w2") {
            images.push_back(Poly::variable(flag, ring, static_cast<std::size_t>(flag->index("w2"))));
        } else if (nm[0] == 'c') {
            int r = std::stoi(nm.substr(1));
            images.push_back(widen(chern_class(spec, r), flag).to_ring(ring));
        } else {
            images.push_back(Poly::variable(flag, ring, static_cast<std::size_t>(flag->index(nm))));
        }
    }
    return p.substitute(images);
}

} // namespace

RingPresentation flag_presentation(const GroupSpec& spec)
{
    RingPresentation pres;
    pres.ring = ZZ();
    pres.vars = flag_table(spec);
    pres.metadata["group"] = spec.name();
    switch (spec.family) {
        case Family::SU:
            for (int k = 2; k <= spec.rank_param; ++k) pres.relations.push_back(chern_class(spec, k));
            break;
        case Family::Sp:
            for (int k = 1; k <= spec.rank_param; ++k) pres.relations.push_back(chern_class(spec, 2 * k));
            break;
        case Family::E6:
        case Family::E7: {
            auto rel = exceptional_symbol_relations(spec, exceptional_symbols(spec));
            for (const auto& [d, r] : rel) pres.relations.push_back(expand_symbols(spec, r));
            break;
        }
    }
    for (const auto& r : pres.relations)
        if (!r.is_homogeneous()) throw std::logic_error("flag_presentation: inhomogeneous relation");
    return pres;
}

Poly RestrictionMap::restrict(const Poly& p) const
{
    Ring ring = p.ring();
    std::vector<Poly> images;
    std::size_t m = multipliers.size();
    for (std::size_t i = 0; i < p.vars().size(); ++i) {
        if (i < m) {
            images.push_back(Poly::variable(restricted_vars, ring, 0, multipliers[i]));
        } else {
            // special Schubert classes pass through (offset by the collapsed omegas)
            images.push_back(Poly::variable(restricted_vars, ring, i - m + 1));
        }
    }
    return p.substitute(images);
}

Poly RestrictionMap::restrict_div_z(const Poly& p) const
{
    Poly r = restrict(p);
    Poly out(restricted_vars, r.ring());
    for (const auto& [e, c] : r.terms()) {
        if (e[0] == 0) throw std::domain_error("restrict_div_z: restriction not divisible by the survivor");
        Exps e2 = e;
        e2[0] -= 1;
        out.add_term(e2, c);
    }
    return out;
}

RestrictionMap restriction_map(const GroupSpec& spec)
{
    if (spec.lattice != LatticeKind::Adjoint)
        throw std::invalid_argument("restriction_map: adjoint spec required");
    RestrictionMap out;
    out.spec = spec;
    out.flag_vars = flag_table(spec);

    // rows of the Cartan matrix span Im tau; quotient Z^m / rows via SNF
    IntegerMatrix A = cartan_matrix(spec);
    SNFResult s = smith_normal_form(A, SnfTransforms::Both);
    int m = spec.rank();
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i)
        if (s.diagonal[i] != 1) throw std::logic_error("restriction_map: quotient not cyclic");
    out.q = s.diagonal.empty() ? Int(1) : s.diagonal.back();
    if (out.q != spec.quotient_order) throw std::logic_error("restriction_map: center order mismatch");

    // multipliers = last column of the right transform, reduced mod q and
    // normalized so the designated survivor carries coefficient 1
    const IntegerMatrix& V = *s.right;
    std::vector<Int> mult(m);
    for (int i = 0; i < m; ++i) mult[i] = mod_positive(V.at(i, m - 1), out.q);
    out.survivor = survivor_index(spec);
    Int unit = mult[out.survivor];
    if (gcd(unit, out.q) != 1) throw std::logic_error("restriction_map: designated survivor not a unit");
    Int scale = mod_inverse(unit, out.q);
    for (auto& v : mult) v = mod_positive(v * scale, out.q);
    out.multipliers = std::move(mult);

    std::vector<std::string> names = {"z"};
    std::vector<int> degs = {2};
    auto flag = out.flag_vars;
    for (std::size_t i = static_cast<std::size_t>(m); i < flag->size(); ++i) {
        names.push_back(flag->names[i]);
        degs.push_back(flag->degrees[i]);
    }
    out.restricted_vars = VarTable::make(std::move(names), std::move(degs));

    // sanity: every tau image restricts into <q z>
    TransgressionData tau = transgression(spec, false);
    for (const Poly& img : tau.images) {
        Poly r = out.restrict(widen(img, out.flag_vars));
        for (const auto& [e, c] : r.terms())
            if (mod_positive(c, out.q) != 0) throw std::logic_error("restriction_map: tau image does not vanish mod q");
    }
    return out;
}

Poly restricted_chern(const GroupSpec& spec, int r)
{
    // restriction is a ring map, so e_r may be computed after restricting the
    // forms; each form becomes an integer multiple of z
    RestrictionMap rm = restriction_map(spec);
    std::vector<Poly> forms;
    for (const Poly& f : omega_set(spec)) forms.push_back(rm.restrict(widen(f, rm.flag_vars)));
    return elementary_symmetric(forms, static_cast<std::size_t>(r));
}

std::shared_ptr<QuotientRing> e3_base_ring(const GroupSpec& spec, Ring ring)
{
    RestrictionMap rm = restriction_map(spec);
    std::vector<Poly> rels;
    if (spec.family == Family::SU) {
        for (int k = 2; k <= spec.rank_param; ++k) rels.push_back(restricted_chern(spec, k).to_ring(ring));
    } else if (spec.family == Family::Sp) {
        for (int k = 1; k <= spec.rank_param; ++k) rels.push_back(restricted_chern(spec, 2 * k).to_ring(ring));
    } else {
        auto symbols = exceptional_symbols(spec);
        auto relsym = exceptional_symbol_relations(spec, symbols);
        // restrict symbols: w2 -> mult * z, c_r -> restricted chern, x -> x
        std::vector<Poly> images;
        for (const auto& nm : symbols->names) {
            if (nm == "w2") {
                images.push_back(Poly::variable(rm.restricted_vars, ring, 0,
                                                rm.multipliers[static_cast<std::size_t>(rm.flag_vars->index("w2"))]));
            } else if (nm[0] == 'c') {
                images.push_back(restricted_chern(spec, std::stoi(nm.substr(1))).to_ring(ring));
            } else {
                images.push_back(
                    Poly::variable(rm.restricted_vars, ring, static_cast<std::size_t>(rm.restricted_vars->index(nm))));
            }
        }
        for (const auto& [d, r] : relsym) rels.push_back(r.to_ring(ring).substitute(images));
    }
    rels.push_back(Poly::variable(rm.restricted_vars, ring, 0, rm.q));
    return std::make_shared<QuotientRing>(rm.restricted_vars, ring, std::move(rels));
}

std::shared_ptr<QuotientRing> flag_ring(const GroupSpec& spec, Ring ring)
{
    RingPresentation pres = flag_presentation(spec);
    std::vector<Poly> rels;
    for (const Poly& r : pres.relations) rels.push_back(r.to_ring(ring));
    return std::make_shared<QuotientRing>(pres.vars, ring, std::move(rels));
}

} // namespace liecoh
