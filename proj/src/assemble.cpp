#include "liecoh/assemble.hpp"

#include <algorithm>
#include <sstream>

namespace liecoh {

namespace {

long ord_p(long n, long p)
{
    long r = 0;
    while (n % p == 0) {
        n /= p;
        ++r;
    }
    return r;
}

long ipow(long b, long e)
{
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

} // namespace

std::map<int, long> exterior_series(const std::vector<int>& degrees, int max_degree)
{
    std::map<int, long> s{{0, 1}};
    for (int d : degrees) {
        std::map<int, long> ns = s;
        for (const auto& [k, v] : s)
            if (k + d <= max_degree) ns[k + d] += v;
        s = std::move(ns);
    }
    return s;
}

std::map<int, long> ModPRing::series(int max_degree) const
{
    std::map<int, long> s{{0, 1}};
    auto fold = [&](int d, int copies) {
        // truncated polynomial factor 1 + t^d + ... + t^{d(copies-1)}
        std::map<int, long> ns;
        for (const auto& [k, v] : s)
            for (int e = 0; e < copies; ++e) {
                if (k + e * d > max_degree) break;
                ns[k + e * d] += v;
            }
        s = std::move(ns);
    };
    for (const auto& g : even) fold(g.degree, g.nilpotence);
    for (const auto& g : odd) fold(g.degree, 2);
    return s;
}

Int ModPRing::total_dim() const
{
    Int d = 1;
    for (const auto& g : even) d *= g.nilpotence;
    for (const auto& g : odd) d *= 2;
    return d;
}

ModPRing mod_p_ring(const GroupSpec& spec, long p)
{
    if (!modp_in_scope(spec, p))
        throw std::domain_error("mod_p_ring: (p, q) = 1; use the covering isomorphism with H*(G x S^1)");
    ModPRing ring;
    ring.spec = spec;
    ring.p = p;
    int n = spec.rank_param;
    int h = h_degree(spec, p);

    auto odd_zetas = [&](auto square_of) {
        for (int s : degree_set_modp_quotient(spec, p)) {
            ModPRing::OddGen g;
            g.degree = 2 * s - 1;
            g.name = "zeta" + std::to_string(g.degree);
            g.square = square_of(s);
            g.delta_flavor = g.square != "0";
            ring.odd.push_back(g);
        }
    };

    switch (spec.family) {
        case Family::SU: {
            long r = ord_p(n, p);
            ring.even.push_back({"w", 2, static_cast<int>(ipow(p, r))});
            ModPRing::OddGen iota{"iota", 1, false, "0"};
            if (p == 2) {
                iota.delta_flavor = true;
                iota.square = (r == 1) ? "w" : "0";
            }
            ring.odd.push_back(iota);
            odd_zetas([&](int) { return std::string("0"); });
            break;
        }
        case Family::Sp: {
            ring.even.push_back({"w", 2, h}); // omega^{2^{r+1}} = 0
            ring.odd.push_back({"iota", 1, true, "w"});
            odd_zetas([&](int) { return std::string("0"); });
            break;
        }
        case Family::E6: {
            ring.even.push_back({"w", 2, 9});
            ring.even.push_back({"x4", 8, 3});
            ring.odd.push_back({"iota", 1, false, "0"});
            odd_zetas([&](int) { return std::string("0"); });
            break;
        }
        case Family::E7: {
            ring.even.push_back({"w", 2, 2});
            ring.even.push_back({"x3", 6, 2});
            ring.even.push_back({"x5", 10, 2});
            ring.even.push_back({"x9", 18, 2});
            ring.odd.push_back({"iota", 1, true, "w"});
            odd_zetas([&](int s) {
                if (s == 3) return std::string("x5");
                if (s == 5) return std::string("x9");
                return std::string("0");
            });
            break;
        }
    }
    return ring;
}

namespace {

std::string render_theta(const ThetaExpression& t) { return t.str(); }

} // namespace

IntegralRing integral_ring(const GroupSpec& spec)
{
    if (spec.family != Family::SU && spec.family != Family::Sp)
        throw std::domain_error("integral_ring: SU/Sp families; use adjoint_exceptional_ring for E6/E7");
    IntegralRing out;
    out.spec = spec;
    int n = spec.rank_param;

    for (int s : degree_set_integral(spec))
        out.free_exterior.emplace_back("rho" + std::to_string(2 * s - 1), 2 * s - 1);

    if (spec.family == Family::Sp) {
        long r = ord_p(n, 2);
        int h = static_cast<int>(ipow(2, r + 1));
        SigmaIdeal sig;
        sig.p = 2;
        sig.even.push_back({"w", 2, h});
        for (const auto& [nm, d] : out.free_exterior) sig.rho_factors.emplace_back(nm, d);
        sig.relations.push_back("2*w = 0");
        sig.relations.push_back("w^" + std::to_string(h) + " = 0");
        sig.relations.push_back("w*rho" + std::to_string(2 * h - 1) + " = 0");
        out.sigma.push_back(std::move(sig));
        return out;
    }

    QPartition qp = q_partition(n);
    for (const auto& [p, block] : qp.qp) {
        long r = ord_p(n, p);
        SigmaIdeal sig;
        sig.p = p;
        sig.even.push_back({"w", 2, static_cast<int>(ipow(p, r))});
        for (const auto& [nm, d] : out.free_exterior) sig.rho_factors.emplace_back(nm, d);
        // relations omega * theta(gamma_I), I subsets of {1} + Q_p(n); theta values
        // computed at PSU(p^r) where the block coincides
        std::vector<long> pool = {1};
        for (long v : block) pool.push_back(v);
        for (std::uint32_t mask = 1; mask < (1u << pool.size()); ++mask) {
            std::vector<long> I;
            for (std::size_t i = 0; i < pool.size(); ++i)
                if (mask & (1u << i)) I.push_back(pool[i]);
            ThetaRelation tr;
            tr.index_set = I;
            tr.value = theta_gamma(p, r, I);
            sig.theta_relations.push_back(std::move(tr));
        }
        for (const auto& tr : sig.theta_relations) {
            std::ostringstream os;
            os << "w*(" << render_theta(tr.value) << ") = 0";
            sig.relations.push_back(os.str());
        }
        out.sigma.push_back(std::move(sig));
    }
    return out;
}

IntegralRing adjoint_exceptional_ring(const GroupSpec& spec)
{
    if (spec.family != Family::E6 && spec.family != Family::E7)
        throw std::domain_error("adjoint_exceptional_ring: E6/E7 families only");
    IntegralRing out;
    out.spec = spec;

    // free part and a_s values, recomputed from theta-bar orders
    CharPolyContext ctx(spec);
    auto forms = stored_integral_set(ctx);
    auto degs = degree_set_integral(spec);
    for (std::size_t i = 0; i < degs.size(); ++i) {
        int s = degs[i];
        out.free_exterior.emplace_back("rho" + std::to_string(2 * s - 1), 2 * s - 1);
        Int order = ctx.theta_order(forms[i].characteristic);
        Int expected = 1;
        if (spec.family == Family::E6 && s == 9) expected = 3;
        if (spec.family == Family::E7 && s == 2) expected = 2;
        if (order != expected) throw std::logic_error("adjoint_exceptional_ring: a_s mismatch at degree " + std::to_string(s));
    }

    if (spec.family == Family::E6) {
        out.free_squares.push_back("rho3^2 = x3");
        SigmaIdeal s2;
        s2.p = 2;
        s2.even.push_back({"x3", 6, 2});
        s2.rho_factors = {{"rho3", 3}, {"rho9", 9}, {"rho15", 15}, {"rho17", 17}, {"rho23", 23}};
        s2.relations = {"2*x3 = 0", "x3^2 = 0", "rho3^2 = x3"};
        out.sigma.push_back(std::move(s2));

        SigmaIdeal s3;
        s3.p = 3;
        s3.even.push_back({"w", 2, 9});
        s3.even.push_back({"x4", 8, 3});
        s3.even.push_back({"C14", 9, 2});
        s3.rho_factors = {{"rho3", 3}, {"rho9", 9}, {"rho11", 11}, {"rho15", 15}, {"rho17", 17}};
        s3.relations = {"3*w = 0", "3*x4 = 0", "3*C14 = 0", "w^9 = 0", "x4^3 = 0",
                        "C14^2 = 0", "w^8*x4^2*C14 = 0", "w*rho17 = 0"};
        out.sigma.push_back(std::move(s3));

        out.action_relations = {"rho3^2 = x3", "x3*rho11 = 0", "x4*rho23 = 0",
                                "w*rho23 = x4^2*C14", "C14*rho23 = 0"};
        return out;
    }

    SigmaIdeal s2;
    s2.p = 2;
    s2.even.push_back({"w", 2, 2});
    s2.even.push_back({"x3", 6, 2});
    s2.even.push_back({"x5", 10, 2});
    s2.even.push_back({"x9", 18, 2});
    // the eleven torsion classes C_I, I subset of {1,3,5,9}, |I| >= 2
    const std::vector<std::pair<std::string, int>> cgens = {
        {"C13", 7},  {"C15", 11}, {"C19", 19}, {"C35", 15}, {"C39", 23}, {"C59", 27},
        {"C135", 16}, {"C139", 24}, {"C159", 28}, {"C359", 32}, {"C1359", 33}};
    for (const auto& [nm, d] : cgens) s2.even.push_back({nm, d, 2});
    s2.rho_factors = {{"rho15", 15}, {"rho23", 23}, {"rho27", 27}};
    s2.relations = {"2*(all generators) = 0", "w^2 = x3^2 = x5^2 = x9^2 = 0",
                    "D_I, R_I, S_{I,J} as in the Bockstein-image presentation"};
    out.sigma.push_back(std::move(s2));

    SigmaIdeal s3;
    s3.p = 3;
    s3.even.push_back({"x4", 8, 3});
    s3.rho_factors = {{"rho3", 3}, {"rho11", 11}, {"rho15", 15}, {"rho19", 19}, {"rho27", 27}, {"rho35", 35}};
    s3.relations = {"3*x4 = 0", "x4^3 = 0"};
    out.sigma.push_back(std::move(s3));

    out.action_relations = {"x4*rho23 = 0", "rho_{2s-1}*C_K = 0 (s in K)",
                            "rho_{2s-1}*C_K = x_{s/2}*C_{K + {s}} (s not in K), s in {2,6,10,18}"};
    return out;
}

Poly stored_bockstein_lift(CharPolyContext& ctx, int s, long p)
{
    const GroupSpec& spec = ctx.spec();
    auto c = [&](int r) { return ctx.csym(r); };
    if (spec.family == Family::SU || spec.family == Family::Sp) {
        // table polynomial with its exact sigma-constant subtracted
        for (const auto& f : stored_modp_quotient_set(ctx, p)) {
            if ((f.cohomological_degree + 1) / 2 != s) continue;
            // canonical integral preimage with coefficients in [0, p)
            Poly H(ctx.symbols(), ZZ());
            for (const auto& [e, cf] : f.characteristic.terms()) H.add_term(e, cf);
            Poly rest = ctx.restrict_symbols(H);
            // rest = mu * z^s; subtract mu * w1^s
            Int mu = 0;
            for (const auto& [e, cf] : rest.terms()) mu = cf;
            return H - ctx.wsym().pow(static_cast<std::uint32_t>(s)) * mu;
        }
        throw std::out_of_range("stored_bockstein_lift: no such degree");
    }
    Poly w = ctx.wsym();
    if (spec.family == Family::E6) {
        switch (s) {
            case 2: return w * w - c(2);
            case 4: return c(2) * c(2) - c(4);
            case 5: return c(5) + c(2) * c(3);
            case 6: return c(6) - c(2) * c(4) - c(3) * c(3);
            case 8: return -(c(3) * c(5)) - c(2) * c(6);
        }
        throw std::out_of_range("stored_bockstein_lift: E6 degree");
    }
    switch (s) {
        case 3: return c(3) - c(2) * w;
        case 5: return c(5) + w * c(4);
        case 8: return c(4) * c(4) + w.pow(2) * c(6) + w.pow(3) * c(5) + w.pow(8);
        case 9: return w.pow(2) * c(7) + w.pow(3) * c(6);
        case 12: return c(6) * c(6) + c(4) * c(4) * c(4);
        case 14: return c(7) * c(7) + c(4) * c(4) * c(6) + w.pow(2) * c(6) * c(6) - c(2) * w.pow(12);
    }
    throw std::out_of_range("stored_bockstein_lift: E7 degree");
}

Poly bockstein_value(CharPolyContext& ctx, int s, long p)
{
    const GroupSpec& spec = ctx.spec();
    Poly H = stored_bockstein_lift(ctx, s, p);
    // the lift must restrict into <q z> (membership in <Im tau~>) and reduce to
    // the stored mod-p characteristic polynomial
    {
        Poly rest = ctx.restrict_symbols(H);
        for (const auto& [e, cf] : rest.terms())
            if (mod_positive(cf, ctx.restriction().q) != 0)
                throw std::logic_error("bockstein_value: lift not in <Im tau~>");
    }

    Poly X(ctx.symbols(), ZZ());
    if (spec.family == Family::SU || spec.family == Family::Sp) {
        // every chern term of H lies in the flag ideal, so f(H) = -mu f(w^s)
        Poly wpow = ctx.wsym().pow(static_cast<std::uint32_t>(s));
        Int mu = 0;
        for (const auto& [e, cf] : H.terms()) {
            bool pure_w = true;
            for (std::size_t i = 1; i < e.size(); ++i) pure_w = pure_w && e[i] == 0;
            if (pure_w && e[0] == static_cast<std::uint32_t>(s)) mu = -cf;
        }
        if (mod_positive(mu, p) != 0) throw std::logic_error("bockstein_value: constant not divisible by p");
        X = -(wpow * (mu / p));
    } else {
        auto x = ctx.symbol_flag_ideal(ZZ()).divide_class(H, Int(p));
        if (!x) throw std::logic_error("bockstein_value: division by p failed in the flag quotient");
        X = *x;
    }
    return ctx.e3(ZZ()).normal_form(ctx.restrict_symbols(X));
}

BocksteinComplex pe6_bockstein_complex()
{
    std::vector<BocksteinComplex::EvenGen> evens = {{"w", 2, 9}, {"x4", 8, 3}};
    auto ev = [&](int a, int b) { return std::vector<int>{a, b}; };
    std::vector<BocksteinComplex::OddGen> odds = {
        {"s1", 1, {}, ev(1, 0)}, {"s7", 7, {}, ev(0, 1)},  {"s3", 3, {}, {}},
        {"s9", 9, {}, {}},       {"s11", 11, {}, {}},       {"s15", 15, {}, {}}};
    return BocksteinComplex(3, std::move(evens), std::move(odds));
}

BocksteinComplex pe7_bockstein_complex()
{
    std::vector<BocksteinComplex::EvenGen> evens = {{"w", 2, 2}, {"x3", 6, 2}, {"x5", 10, 2}, {"x9", 18, 2}};
    auto ev = [&](int a, int b, int c, int d) { return std::vector<int>{a, b, c, d}; };
    std::vector<BocksteinComplex::OddGen> odds = {
        {"s1", 1, ev(1, 0, 0, 0), ev(1, 0, 0, 0)},
        {"s5", 5, ev(0, 0, 1, 0), ev(0, 1, 0, 0)},
        {"s9", 9, ev(0, 0, 0, 1), ev(0, 0, 1, 0)},
        {"s17", 17, {}, ev(0, 0, 0, 1)},
        {"s15", 15, {}, {}},
        {"s23", 23, {}, {}},
        {"s27", 27, {}, {}}};
    return BocksteinComplex(2, std::move(evens), std::move(odds));
}

std::map<int, long> pe6_im_delta_presentation_series(int max_degree)
{
    // F3[w, x4, C14]^+ / <w^9, x4^3, C14^2, w^8 x4^2 C14> (x) Lambda(3, 9, 11, 15)
    std::map<int, long> base;
    for (int a = 0; a <= 8; ++a)
        for (int b = 0; b <= 2; ++b)
            for (int e = 0; e <= 1; ++e) {
                if (a == 0 && b == 0 && e == 0) continue;
                if (a == 8 && b == 2 && e == 1) continue;
                base[2 * a + 8 * b + 9 * e] += 1;
            }
    auto lam = exterior_series({3, 9, 11, 15}, max_degree);
    std::map<int, long> out;
    for (const auto& [d1, c1] : base)
        for (const auto& [d2, c2] : lam)
            if (d1 + d2 <= max_degree) out[d1 + d2] += c1 * c2;
    return out;
}

std::map<int, long> pe7_im_delta_presentation_series(int max_degree)
{
    // even part: F2[w, x3, x5, x9, C_I] modulo squares of w/x's and the
    // product relations of the Bockstein image; computed degreewise
    struct CInfo {
        std::vector<int> I;
        std::string name;
    };
    const std::vector<int> tvals = {1, 3, 5, 9};
    auto xdeg = [](int t) { return t == 1 ? 2 : 2 * t; };      // x_1 = w
    auto sdeg = [](int t) { return 2 * t - 1; };               // deg sigma_{2t-1}
    std::vector<CInfo> cs;
    for (std::uint32_t mask = 1; mask < 16; ++mask) {
        if (__builtin_popcount(mask) < 2) continue;
        CInfo ci;
        std::string nm = "C";
        for (std::size_t i = 0; i < 4; ++i)
            if (mask & (1u << i)) {
                ci.I.push_back(tvals[i]);
                nm += std::to_string(tvals[i]);
            }
        ci.name = nm;
        cs.push_back(ci);
    }
    std::vector<std::string> names = {"w", "x3", "x5", "x9"};
    std::vector<int> degs = {2, 6, 10, 18};
    for (const auto& ci : cs) {
        names.push_back(ci.name);
        int d = 1;
        for (int t : ci.I) d += sdeg(t);
        degs.push_back(d);
    }
    auto vt = VarTable::make(names, degs);
    Ring F = FF(2);
    auto var = [&](const std::string& n) { return Poly::variable(vt, F, static_cast<std::size_t>(vt->index(n))); };
    auto cvar = [&](const std::vector<int>& I) -> Poly {
        if (I.empty()) return Poly::zero(vt, F);
        if (I.size() == 1) return var(I[0] == 1 ? "w" : "x" + std::to_string(I[0]));
        std::string nm = "C";
        for (int t : I) nm += std::to_string(t);
        return var(nm);
    };
    auto square_of = [&](int t) -> Poly {
        // squares of sigma_1, sigma_5, sigma_9, sigma_17
        if (t == 1) return var("w");
        if (t == 3) return var("x5");
        if (t == 5) return var("x9");
        return Poly::zero(vt, F);
    };

    std::vector<Poly> rels;
    for (const auto& nm : {"w", "x3", "x5", "x9"}) rels.push_back(var(nm) * var(nm));
    for (const auto& ci : cs) {
        const auto& I = ci.I;
        // D_I
        Poly D(vt, F);
        for (int t : I) {
            std::vector<int> It;
            for (int u : I)
                if (u != t) It.push_back(u);
            D = D + var(t == 1 ? "w" : "x" + std::to_string(t)) * cvar(It);
        }
        if (!D.is_zero()) rels.push_back(D);
        // R_I
        Poly R = cvar(I);
        for (int t : I) R = R * var(t == 1 ? "w" : "x" + std::to_string(t));
        rels.push_back(R);
    }
    for (const auto& ci : cs)
        for (const auto& cj : cs) {
            const auto& I = ci.I;
            const auto& J = cj.I;
            Poly S = cvar(I) * cvar(J);
            for (int t : I) {
                std::vector<int> It;
                for (int u : I)
                    if (u != t) It.push_back(u);
                Poly term = var(t == 1 ? "w" : "x" + std::to_string(t));
                bool dead = false;
                std::vector<int> sym;
                for (int u : It)
                    if (std::find(J.begin(), J.end(), u) != J.end()) {
                        Poly sq = square_of(u);
                        if (sq.is_zero()) {
                            dead = true;
                            break;
                        }
                        term = term * sq;
                    } else {
                        sym.push_back(u);
                    }
                if (dead) continue;
                for (int u : J)
                    if (std::find(It.begin(), It.end(), u) == It.end()) sym.push_back(u);
                std::sort(sym.begin(), sym.end());
                Poly cS = cvar(sym);
                if (cS.is_zero()) continue;
                S = S + term * cS;
            }
            if (!S.is_zero()) rels.push_back(S);
        }

    QuotientRing qr(vt, F, rels);
    std::map<int, long> base;
    for (int d = 1; d <= max_degree; ++d) {
        long dim = qr.group(d).free_rank;
        if (dim) base[d] = dim;
    }
    auto lam = exterior_series({15, 23, 27}, max_degree);
    std::map<int, long> out;
    for (const auto& [d1, c1] : base)
        for (const auto& [d2, c2] : lam)
            if (d1 + d2 <= max_degree) out[d1 + d2] += c1 * c2;
    return out;
}

} // namespace liecoh
