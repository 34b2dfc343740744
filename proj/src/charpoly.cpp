#include "liecoh/charpoly.hpp"

#include <algorithm>

namespace liecoh {

namespace {

VarTablePtr symbol_table_for(const GroupSpec& spec)
{
    std::vector<std::string> names;
    std::vector<int> degs;
    switch (spec.family) {
        case Family::SU:
            names = {"w1"};
            degs = {2};
            for (int k = 2; k <= spec.rank_param; ++k) {
                names.push_back("c" + std::to_string(k));
                degs.push_back(2 * k);
            }
            break;
        case Family::Sp:
            names = {"w1"};
            degs = {2};
            for (int k = 1; k <= spec.rank_param; ++k) {
                names.push_back("c" + std::to_string(2 * k));
                degs.push_back(4 * k);
            }
            break;
        case Family::E6:
            names = {"w2", "c2", "c3", "c4", "c5", "c6", "x3", "x4"};
            degs = {2, 4, 6, 8, 10, 12, 6, 8};
            break;
        case Family::E7:
            names = {"w2", "c2", "c3", "c4", "c5", "c6", "c7", "x3", "x4", "x5", "x9"};
            degs = {2, 4, 6, 8, 10, 12, 14, 6, 8, 10, 18};
            break;
    }
    return VarTable::make(std::move(names), std::move(degs));
}

} // namespace

CharPolyContext::CharPolyContext(const GroupSpec& adjoint_spec)
    : spec_([&] {
          GroupSpec s = adjoint_spec;
          if (s.lattice != LatticeKind::Adjoint) s = GroupSpec::adjoint(s.family, s.rank_param);
          return s;
      }()),
      rm_(restriction_map(spec_))
{
    prime_ = 0;
    symbols_ = symbol_table_for(spec_);
    if (spec_.family == Family::E6 || spec_.family == Family::E7) {
        symbol_relations_ = exceptional_symbol_relations(spec_, symbols_);
    } else {
        // SU/Sp: the flag relations are the chern symbols themselves
        for (std::size_t i = 1; i < symbols_->size(); ++i) {
            int half = symbols_->degrees[i] / 2;
            symbol_relations_[half] = Poly::variable(symbols_, ZZ(), i);
        }
    }
    // exact restriction constants of the chern classes
    for (int r : chern_range(spec_)) {
        Poly rc = restricted_chern(spec_, r);
        Int c = 0;
        for (const auto& [e, cf] : rc.terms()) {
            bool pure_z = true;
            for (std::size_t i = 1; i < e.size(); ++i) pure_z = pure_z && e[i] == 0;
            if (!pure_z || e[0] != static_cast<std::uint32_t>(r))
                throw std::logic_error("chern restriction not a z power");
            c = cf;
        }
        chern_constants_.push_back(c);
    }
    if (spec_.family == Family::SU || spec_.family == Family::Sp)
        w2_mult_ = 1; // w1 symbol is the survivor itself
    else
        w2_mult_ = rm_.multipliers[static_cast<std::size_t>(rm_.flag_vars->index("w2"))];
}

Poly CharPolyContext::csym(int r) const
{
    return Poly::variable(symbols_, ZZ(), static_cast<std::size_t>(symbols_->index("c" + std::to_string(r))));
}

Poly CharPolyContext::wsym() const
{
    // the distinguished degree-2 symbol: w1 for SU/Sp, w2 for E6/E7
    return Poly::variable(symbols_, ZZ(), 0);
}

Poly CharPolyContext::xsym(const std::string& n) const
{
    return Poly::variable(symbols_, ZZ(), static_cast<std::size_t>(symbols_->index(n)));
}

Poly CharPolyContext::restrict_symbols(const Poly& p) const
{
    Ring ring = p.ring();
    std::vector<Poly> images;
    for (const auto& nm : symbols_->names) {
        if (nm == "w1" || nm == "w2") {
            Int mult = (nm == "w1") ? Int(1) : w2_mult_;
            images.push_back(Poly::variable(rm_.restricted_vars, ring, 0, mult));
        } else if (nm[0] == 'c') {
            int r = std::stoi(nm.substr(1));
            images.push_back(Poly::variable(rm_.restricted_vars, ring, 0,
                                            chern_constants_[static_cast<std::size_t>(r - 1)],
                                            static_cast<std::uint32_t>(r)));
        } else {
            images.push_back(Poly::variable(rm_.restricted_vars, ring,
                                            static_cast<std::size_t>(rm_.restricted_vars->index(nm))));
        }
    }
    return p.substitute(images);
}

Poly CharPolyContext::derivative_wrt_varpi(const Poly& p) const
{
    if (!in_im_tau_circle(p))
        throw std::domain_error("derivative_wrt_varpi: polynomial not in <Im tau~'>");
    Poly r = restrict_symbols(p);
    Poly out(rm_.restricted_vars, r.ring());
    for (const auto& [e, c] : r.terms()) {
        if (e[0] == 0) throw std::domain_error("derivative_wrt_varpi: restriction not divisible by varpi");
        Exps e2 = e;
        e2[0] -= 1;
        out.add_term(e2, c);
    }
    return out;
}

QuotientRing& CharPolyContext::e3(Ring ring)
{
    auto it = e3_.find(ring.p);
    if (it == e3_.end()) it = e3_.emplace(ring.p, e3_base_ring(spec_, ring)).first;
    return *it->second;
}

QuotientRing& CharPolyContext::symbol_flag_ideal(Ring ring)
{
    auto it = flag_ideal_.find(ring.p);
    if (it == flag_ideal_.end()) {
        std::vector<Poly> rels;
        for (const auto& [d, r] : symbol_relations_) rels.push_back(r.to_ring(ring));
        it = flag_ideal_.emplace(ring.p, std::make_shared<QuotientRing>(symbols_, ring, std::move(rels))).first;
    }
    return *it->second;
}

Poly CharPolyContext::theta_bar(const Poly& p, Ring ring)
{
    return e3(ring).normal_form(derivative_wrt_varpi(p.to_ring(ring)));
}

Int CharPolyContext::theta_order(const Poly& p)
{
    return e3(ZZ()).class_order(derivative_wrt_varpi(p.to_ring(ZZ())));
}

bool CharPolyContext::in_im_tau_circle(const Poly& p) const
{
    // <Im tau~'> is the ideal generated by all omegas; at symbol level a term
    // qualifies iff it carries an omega or chern factor
    for (const auto& [e, c] : p.terms()) {
        bool has = false;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            const std::string& nm = symbols_->names[i];
            if (nm[0] == 'w' || nm[0] == 'c') {
                has = true;
                break;
            }
        }
        if (!has) return false;
    }
    return true;
}

bool CharPolyContext::in_im_tau_modp(const Poly& p, long prime) const
{
    return restrict_symbols(p.to_ring(FF(prime))).is_zero();
}

bool CharPolyContext::in_ker_f(const Poly& p, Ring ring)
{
    return symbol_flag_ideal(ring).contains(p.to_ring(ring));
}

std::optional<std::vector<Poly>> CharPolyContext::expand_in_tau_modp(const Poly& omega_poly, long prime) const
{
    // expansion over F_p with respect to the adjoint tau images, solved by a
    // linear change of coordinates turning independent tau forms into variables
    TransgressionData tau = transgression(spec_, false);
    int m = spec_.rank();
    Ring F = FF(prime);
    IntegerMatrix M(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        for (const auto& [e, c] : tau.images[static_cast<std::size_t>(i)].terms())
            for (int j = 0; j < m; ++j)
                if (e[static_cast<std::size_t>(j)] == 1)
                    M.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c;

    std::vector<int> chosen;
    {
        std::vector<std::vector<long>> rows;
        std::vector<long> piv;
        for (int i = 0; i < m; ++i) {
            std::vector<long> r(static_cast<std::size_t>(m));
            for (int j = 0; j < m; ++j)
                r[static_cast<std::size_t>(j)] =
                    static_cast<long>(mod_positive(M.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)), prime));
            for (std::size_t k = 0; k < rows.size(); ++k)
                if (r[static_cast<std::size_t>(piv[k])]) {
                    long f = r[static_cast<std::size_t>(piv[k])];
                    for (std::size_t t = 0; t < r.size(); ++t)
                        if (rows[k][t]) r[t] = ((r[t] - f * rows[k][t]) % prime + prime) % prime;
                }
            long nz = -1;
            for (std::size_t t = 0; t < r.size(); ++t)
                if (r[t]) { nz = static_cast<long>(t); break; }
            if (nz < 0) continue;
            long inv = static_cast<long>(mod_inverse(Int(r[static_cast<std::size_t>(nz)]), Int(prime)));
            for (auto& x : r) x = x * inv % prime;
            rows.push_back(std::move(r));
            piv.push_back(nz);
            chosen.push_back(i);
        }
    }
    if (static_cast<int>(chosen.size()) != m - 1) return std::nullopt;

    // new coordinates: v_k = tau(t_{chosen[k]}), v_{m-1} = survivor omega
    IntegerMatrix S(static_cast<std::size_t>(m), static_cast<std::size_t>(m));
    for (int k = 0; k < m - 1; ++k)
        for (int j = 0; j < m; ++j)
            S.at(static_cast<std::size_t>(k), static_cast<std::size_t>(j)) = mod_positive(
                M.at(static_cast<std::size_t>(chosen[static_cast<std::size_t>(k)]), static_cast<std::size_t>(j)), prime);
    S.at(static_cast<std::size_t>(m - 1), static_cast<std::size_t>(rm_.survivor)) = 1;

    IntegerMatrix Sinv = IntegerMatrix::identity(static_cast<std::size_t>(m));
    {
        IntegerMatrix W = S;
        for (int col = 0; col < m; ++col) {
            int pr = -1;
            for (int r2 = col; r2 < m; ++r2)
                if (mod_positive(W.at(static_cast<std::size_t>(r2), static_cast<std::size_t>(col)), prime) != 0) {
                    pr = r2;
                    break;
                }
            if (pr < 0) return std::nullopt;
            for (int j = 0; j < m; ++j) {
                std::swap(W.at(static_cast<std::size_t>(col), static_cast<std::size_t>(j)),
                          W.at(static_cast<std::size_t>(pr), static_cast<std::size_t>(j)));
                std::swap(Sinv.at(static_cast<std::size_t>(col), static_cast<std::size_t>(j)),
                          Sinv.at(static_cast<std::size_t>(pr), static_cast<std::size_t>(j)));
            }
            Int inv = mod_inverse(W.at(static_cast<std::size_t>(col), static_cast<std::size_t>(col)), Int(prime));
            for (int j = 0; j < m; ++j) {
                W.at(static_cast<std::size_t>(col), static_cast<std::size_t>(j)) =
                    mod_positive(W.at(static_cast<std::size_t>(col), static_cast<std::size_t>(j)) * inv, prime);
                Sinv.at(static_cast<std::size_t>(col), static_cast<std::size_t>(j)) =
                    mod_positive(Sinv.at(static_cast<std::size_t>(col), static_cast<std::size_t>(j)) * inv, prime);
            }
            for (int r2 = 0; r2 < m; ++r2) {
                if (r2 == col) continue;
                Int f = mod_positive(W.at(static_cast<std::size_t>(r2), static_cast<std::size_t>(col)), prime);
                if (f == 0) continue;
                for (int j = 0; j < m; ++j) {
                    W.at(static_cast<std::size_t>(r2), static_cast<std::size_t>(j)) = mod_positive(
                        W.at(static_cast<std::size_t>(r2), static_cast<std::size_t>(j)) -
                            f * W.at(static_cast<std::size_t>(col), static_cast<std::size_t>(j)),
                        prime);
                    Sinv.at(static_cast<std::size_t>(r2), static_cast<std::size_t>(j)) = mod_positive(
                        Sinv.at(static_cast<std::size_t>(r2), static_cast<std::size_t>(j)) -
                            f * Sinv.at(static_cast<std::size_t>(col), static_cast<std::size_t>(j)),
                        prime);
                }
            }
        }
    }

    auto om = omega_table(spec_);
    std::vector<std::string> vnames;
    for (int k = 0; k < m; ++k) vnames.push_back("v" + std::to_string(k));
    auto vt = VarTable::make(vnames, std::vector<int>(static_cast<std::size_t>(m), 2));

    std::vector<Poly> to_v;
    for (int j = 0; j < m; ++j) {
        Poly img(vt, F);
        for (int k = 0; k < m; ++k) {
            Int c = mod_positive(Sinv.at(static_cast<std::size_t>(j), static_cast<std::size_t>(k)), prime);
            if (c != 0) img = img + Poly::variable(vt, F, static_cast<std::size_t>(k), c);
        }
        to_v.push_back(img);
    }
    Poly in_v = omega_poly.to_ring(F).substitute(to_v);

    std::vector<Poly> g(static_cast<std::size_t>(m - 1), Poly::zero(vt, F));
    for (const auto& [e, c] : in_v.terms()) {
        int split = -1;
        for (int k = 0; k < m - 1; ++k)
            if (e[static_cast<std::size_t>(k)] > 0) {
                split = k;
                break;
            }
        if (split < 0) return std::nullopt; // pure survivor residue: not in the ideal
        Exps e2 = e;
        e2[static_cast<std::size_t>(split)] -= 1;
        Poly t(vt, F);
        t.add_term(e2, c);
        g[static_cast<std::size_t>(split)] = g[static_cast<std::size_t>(split)] + t;
    }
    std::vector<Poly> back;
    for (int k = 0; k < m; ++k) {
        Poly img(om, F);
        for (int j = 0; j < m; ++j) {
            Int c = mod_positive(S.at(static_cast<std::size_t>(k), static_cast<std::size_t>(j)), prime);
            if (c != 0) img = img + Poly::variable(om, F, static_cast<std::size_t>(j), c);
        }
        back.push_back(img);
    }
    std::vector<Poly> out(static_cast<std::size_t>(m), Poly::zero(om, F));
    for (int k = 0; k < m - 1; ++k)
        out[static_cast<std::size_t>(chosen[static_cast<std::size_t>(k)])] = g[static_cast<std::size_t>(k)].substitute(back);
    return out;
}

std::optional<Poly> CharPolyContext::lift_characteristic(const Poly& p, long prime)
{
    Ring F = FF(prime);
    Poly P = p.to_ring(F);
    Poly D = derivative_wrt_varpi(P);
    if (D.is_zero()) return P;
    if (!e3(F).contains(D)) return std::nullopt; // theta_bar nonzero: no lift exists

    if (spec_.family == Family::E6)
        throw std::logic_error("lift_characteristic: unexpected correction needed for E6");

    // Correction Delta = t * R_h * w^a with sigma(Delta) = sigma(D); the h(G)-degree
    // flag relation is the unique one restricting onto a unit multiple of z^h.
    if (D.term_count() != 1) return std::nullopt;
    const auto& [de, mu] = *D.terms().begin();
    for (std::size_t i = 1; i < de.size(); ++i)
        if (de[i] != 0) return std::nullopt;
    for (const auto& [half, rel] : symbol_relations_) {
        Poly relp = rel.to_ring(F);
        Poly rrest = restrict_symbols(relp);
        if (rrest.is_zero() || rrest.term_count() != 1) continue;
        const auto& [re, lambda] = *rrest.terms().begin();
        if (re[0] != static_cast<std::uint32_t>(half)) continue;
        int a = static_cast<int>(de[0]) - half;
        if (a < 0) continue;
        Int t = mod_positive(mu * mod_inverse(lambda, Int(prime)), prime);
        Poly corr = relp * wsym().to_ring(F).pow(static_cast<std::uint32_t>(a + 1)) * t;
        Poly lifted = P - corr;
        if (!derivative_wrt_varpi(lifted).is_zero())
            throw std::logic_error("lift_characteristic: correction did not cancel the derivative");
        return lifted;
    }
    return std::nullopt;
}

ModPPresentation modp_presentation(const GroupSpec& spec, long p)
{
    ModPPresentation out;
    out.p = p;
    Ring F = FF(p);
    CharPolyContext ctx(spec);

    if (spec.family == Family::SU || spec.family == Family::Sp) {
        out.vars = ctx.symbols();
        for (const auto& [d, r] : ctx.symbol_relations()) out.deltas.push_back(r.to_ring(F));
        return out;
    }

    auto symbols = ctx.symbols();
    auto rels = ctx.symbol_relations();

    struct Special {
        std::string name;
        int f_deg, g_deg;
        long coef;
    };
    std::vector<Special> specials;
    if (spec.family == Family::E6)
        specials = {{"x3", 3, 6, 2}, {"x4", 4, 12, 3}};
    else
        specials = {{"x3", 3, 6, 2}, {"x4", 4, 12, 3}, {"x5", 5, 10, 2}, {"x9", 9, 18, 2}};

    std::vector<Special> eliminated, surviving;
    for (const auto& s : specials) (s.coef % p == 0 ? surviving : eliminated).push_back(s);

    std::vector<Poly> images;
    for (std::size_t i = 0; i < symbols->size(); ++i) images.push_back(Poly::variable(symbols, F, i));
    for (const auto& s : eliminated) {
        int yi = symbols->index(s.name);
        Poly f = rels.at(s.f_deg).to_ring(F);
        Poly alpha(symbols, F);
        for (const auto& [e, c] : f.terms())
            if (e[static_cast<std::size_t>(yi)] == 0) alpha.add_term(e, c);
        images[static_cast<std::size_t>(yi)] = -alpha * mod_inverse(Int(s.coef), Int(p));
    }

    out.vars = symbols;
    for (const auto& s : surviving) out.surviving.push_back(s.name);
    std::vector<int> f_deg_used, g_degs;
    for (const auto& s : eliminated) f_deg_used.push_back(s.f_deg);
    for (const auto& s : surviving) g_degs.push_back(s.g_deg);
    std::vector<std::size_t> yix;
    for (const auto& s : surviving) yix.push_back(static_cast<std::size_t>(symbols->index(s.name)));

    std::vector<Poly> deltas;
    for (const auto& [d, r0] : rels) {
        if (std::find(f_deg_used.begin(), f_deg_used.end(), d) != f_deg_used.end()) continue;
        Poly r = r0.to_ring(F).substitute(images);
        if (std::find(g_degs.begin(), g_degs.end(), d) != g_degs.end()) {
            out.y_relations.push_back(r);
            continue;
        }
        // clear surviving-y terms; the cofactor must already lie in <deltas>
        bool again = true;
        while (again) {
            again = false;
            for (std::size_t yi : yix) {
                Poly cof(symbols, F);
                for (const auto& [e, c] : r.terms()) {
                    if (e[yi] == 0) continue;
                    Exps e2 = e;
                    e2[yi] -= 1;
                    cof.add_term(e2, c);
                }
                if (cof.is_zero()) continue;
                QuotientRing probe(symbols, F, deltas);
                if (!probe.contains(cof))
                    throw std::logic_error("modp_presentation: y-cofactor not reducible at degree " + std::to_string(d));
                r = r - Poly::variable(symbols, F, yi) * cof;
                again = true;
            }
        }
        if (!r.is_zero()) deltas.push_back(r);
    }
    out.deltas = std::move(deltas);
    return out;
}

} // namespace liecoh
