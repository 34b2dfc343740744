#include "liecoh/tables.hpp"

#include <algorithm>

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

OneForm make_form(std::string label, Poly ch, Ring ring)
{
    OneForm f;
    f.label = std::move(label);
    f.coefficient_ring = ring;
    f.cohomological_degree = 2 * (ch.homogeneous_degree().value() / 2) - 1;
    f.characteristic = std::move(ch);
    return f;
}

} // namespace

std::vector<int> degree_set_integral(const GroupSpec& spec)
{
    std::vector<int> d;
    switch (spec.family) {
        case Family::SU:
            for (int k = 2; k <= spec.rank_param; ++k) d.push_back(k);
            break;
        case Family::Sp:
            for (int k = 1; k <= spec.rank_param; ++k) d.push_back(2 * k);
            break;
        case Family::E6: d = {2, 5, 6, 8, 9, 12}; break;
        case Family::E7: d = {2, 6, 8, 10, 12, 14, 18}; break;
    }
    return d;
}

std::vector<int> degree_set_modp(const GroupSpec& spec, long p)
{
    std::vector<int> d;
    switch (spec.family) {
        case Family::SU:
            for (int k = 2; k <= spec.rank_param; ++k) d.push_back(k);
            break;
        case Family::Sp:
            for (int k = 1; k <= spec.rank_param; ++k) d.push_back(2 * k);
            break;
        case Family::E6: d = {2, 4, 5, 6, 8, 9}; break;
        case Family::E7: d = {2, 3, 5, 8, 9, 12, 14}; break;
    }
    (void)p;
    return d;
}

int h_degree(const GroupSpec& spec, long p)
{
    switch (spec.family) {
        case Family::SU: {
            long r = ord_p(spec.rank_param, p);
            int h = 1;
            for (long i = 0; i < r; ++i) h *= static_cast<int>(p);
            return h; // p^r
        }
        case Family::Sp: {
            long r = ord_p(spec.rank_param, 2);
            return 2 << r; // 2^{r+1}
        }
        case Family::E6: return 9;
        case Family::E7: return 2;
    }
    throw std::logic_error("h_degree");
}

std::vector<int> degree_set_modp_quotient(const GroupSpec& spec, long p)
{
    std::vector<int> d = degree_set_modp(spec, p);
    int h = h_degree(spec, p);
    d.erase(std::remove(d.begin(), d.end(), h), d.end());
    return d;
}

bool modp_in_scope(const GroupSpec& spec, long p)
{
    switch (spec.family) {
        case Family::SU: return spec.rank_param % p == 0;
        case Family::Sp: return p == 2;
        case Family::E6: return p == 3;
        case Family::E7: return p == 2;
    }
    return false;
}

std::vector<OneForm> stored_integral_set(CharPolyContext& ctx)
{
    const GroupSpec& spec = ctx.spec();
    std::vector<OneForm> out;
    Ring Z = ZZ();
    auto c = [&](int r) { return ctx.csym(r); };
    if (spec.family == Family::SU) {
        for (int k = 2; k <= spec.rank_param; ++k) out.push_back(make_form("c" + std::to_string(k), c(k), Z));
        return out;
    }
    if (spec.family == Family::Sp) {
        for (int k = 1; k <= spec.rank_param; ++k) out.push_back(make_form("c" + std::to_string(2 * k), c(2 * k), Z));
        return out;
    }
    const auto& R = ctx.symbol_relations();
    Poly x3 = ctx.xsym("x3"), x4 = ctx.xsym("x4");
    if (spec.family == Family::E6) {
        out.push_back(make_form("S2", R.at(2), Z));
        out.push_back(make_form("S5", R.at(5), Z));
        out.push_back(make_form("S6", R.at(6) * 2 - x3 * R.at(3), Z));
        out.push_back(make_form("S8", R.at(8), Z));
        out.push_back(make_form("S9", R.at(9), Z));
        out.push_back(make_form("S12", R.at(12) * 3 - x4 * x4 * R.at(4), Z));
        return out;
    }
    Poly x5 = ctx.xsym("x5"), x9 = ctx.xsym("x9");
    out.push_back(make_form("S2", R.at(2), Z));
    out.push_back(make_form("S6", R.at(6) * 2 - x3 * R.at(3), Z));
    // the degree-8 entry needs the x4 f-relation folded in so that every term
    // carries an omega factor
    out.push_back(make_form("S8", R.at(8) - x4 * R.at(4), Z));
    out.push_back(make_form("S10", R.at(10) * 2 - x5 * R.at(5), Z));
    out.push_back(make_form("S12", R.at(12) * 3 - x4 * x4 * R.at(4), Z));
    out.push_back(make_form("S14", R.at(14), Z));
    out.push_back(make_form("S18", R.at(18) * 2 - x9 * R.at(9), Z));
    return out;
}

std::vector<OneForm> recipe_integral_set(CharPolyContext& ctx)
{
    // Presentation-shape recipe: the h-relations pass through; each special
    // class pair (f_j, g_j) with f_j = p_j y_j + alpha contributes
    // p_j g_j - y_j^{k_j - 1} f_j, and an h-relation with a stray pure-y term
    // absorbs the matching multiple of f_j.
    const GroupSpec& spec = ctx.spec();
    if (spec.family == Family::SU || spec.family == Family::Sp) return stored_integral_set(ctx);

    struct Pair {
        std::string y;
        int f_deg, g_deg, k;
        long pj;
    };
    std::vector<Pair> pairs;
    if (spec.family == Family::E6)
        pairs = {{"x3", 3, 6, 2, 2}, {"x4", 4, 12, 3, 3}};
    else
        pairs = {{"x3", 3, 6, 2, 2}, {"x4", 4, 12, 3, 3}, {"x5", 5, 10, 2, 2}, {"x9", 9, 18, 2, 2}};

    const auto& R = ctx.symbol_relations();
    std::vector<int> fdegs, gdegs;
    for (const auto& pr : pairs) {
        fdegs.push_back(pr.f_deg);
        gdegs.push_back(pr.g_deg);
    }
    std::vector<OneForm> out;
    for (const auto& [d, rel] : R) {
        if (std::find(fdegs.begin(), fdegs.end(), d) != fdegs.end()) continue;
        auto git = std::find(gdegs.begin(), gdegs.end(), d);
        Poly entry = rel;
        if (git != gdegs.end()) {
            const Pair& pr = pairs[static_cast<std::size_t>(git - gdegs.begin())];
            entry = rel * pr.pj - ctx.xsym(pr.y).pow(static_cast<std::uint32_t>(pr.k - 1)) * R.at(pr.f_deg);
        } else {
            // absorb pure-y terms (terms without any omega factor) via f-relations
            for (const auto& pr : pairs) {
                Poly y = ctx.xsym(pr.y);
                // find pure terms divisible by y with no w/c factor
                while (true) {
                    Poly bad(ctx.symbols(), ZZ());
                    for (const auto& [e, cf] : entry.terms()) {
                        bool omega = false;
                        for (std::size_t i = 0; i < e.size(); ++i)
                            if (e[i] && (ctx.symbols()->names[i][0] == 'w' || ctx.symbols()->names[i][0] == 'c'))
                                omega = true;
                        if (!omega && e[static_cast<std::size_t>(ctx.symbols()->index(pr.y))] > 0)
                            bad.add_term(e, cf);
                    }
                    if (bad.is_zero()) break;
                    // bad = m * p_j y^t ...: divide the leading pure term by p_j * y and
                    // subtract that multiple of f_j
                    const auto& [e, cf] = *bad.terms().begin();
                    if (cf % pr.pj != 0) throw std::logic_error("recipe_integral_set: cannot absorb pure term");
                    Exps e2 = e;
                    e2[static_cast<std::size_t>(ctx.symbols()->index(pr.y))] -= 1;
                    Poly cofac(ctx.symbols(), ZZ());
                    cofac.add_term(e2, cf / pr.pj);
                    entry = entry - cofac * R.at(pr.f_deg);
                }
            }
        }
        if (!ctx.in_im_tau_circle(entry)) throw std::logic_error("recipe_integral_set: entry escapes <Im tau~'>");
        out.push_back(make_form("S" + std::to_string(d), entry, ZZ()));
    }
    return out;
}

std::vector<OneForm> stored_modp_set(CharPolyContext& ctx, long p)
{
    const GroupSpec& spec = ctx.spec();
    Ring F = FF(p);
    std::vector<OneForm> out;
    auto c = [&](int r) { return ctx.csym(r).to_ring(F); };
    if (spec.family == Family::SU) {
        for (int k = 2; k <= spec.rank_param; ++k)
            out.push_back(make_form("c" + std::to_string(k), c(k), F));
        return out;
    }
    if (spec.family == Family::Sp) {
        for (int k = 1; k <= spec.rank_param; ++k)
            out.push_back(make_form("c" + std::to_string(2 * k), c(2 * k), F));
        return out;
    }
    if (spec.family == Family::E6) {
        Poly w = ctx.wsym().to_ring(F);
        out.push_back(make_form("d2", w * w - c(2), F));
        out.push_back(make_form("d4", c(2) * c(2) - c(4), F));
        out.push_back(make_form("d5", c(5) + c(2) * c(3), F));
        out.push_back(make_form("d6", c(6) - c(2) * c(4) - c(3) * c(3), F));
        out.push_back(make_form("d8", -(c(3) * c(5)) - c(2) * c(6), F));
        out.push_back(make_form("d9", c(6) * c(3), F));
        return out;
    }
    Poly w = ctx.wsym().to_ring(F);
    Poly w2 = w * w, w3 = w * w * w;
    out.push_back(make_form("d2", c(2), F));
    out.push_back(make_form("d3", c(3), F));
    out.push_back(make_form("d5", c(5) + w * c(4), F));
    out.push_back(make_form("d8", c(4) * c(4) + w2 * c(6) + w3 * c(5) + w.pow(8), F));
    out.push_back(make_form("d9", w2 * c(7) + w3 * c(6), F));
    out.push_back(make_form("d12", c(6) * c(6) + c(4) * c(4) * c(4), F));
    out.push_back(make_form("d14", c(7) * c(7) + c(4) * c(4) * c(6) + w2 * c(6) * c(6), F));
    return out;
}

std::vector<OneForm> recipe_modp_set(CharPolyContext& ctx, long p)
{
    ModPPresentation mp = modp_presentation(ctx.spec(), p);
    std::vector<OneForm> out;
    for (const Poly& d : mp.deltas)
        out.push_back(make_form("d" + std::to_string(*d.homogeneous_degree() / 2), d, FF(p)));
    std::sort(out.begin(), out.end(),
              [](const OneForm& a, const OneForm& b) { return a.cohomological_degree < b.cohomological_degree; });
    return out;
}

std::vector<OneForm> stored_modp_quotient_set(CharPolyContext& ctx, long p)
{
    const GroupSpec& spec = ctx.spec();
    Ring F = FF(p);
    std::vector<OneForm> out;
    auto c = [&](int r) { return ctx.csym(r).to_ring(F); };
    if (spec.family == Family::SU || spec.family == Family::Sp) {
        int n = spec.rank_param;
        int h = h_degree(spec, p);
        Poly w1 = ctx.wsym().to_ring(F);
        for (int s : degree_set_modp_quotient(spec, p)) {
            // s is the polynomial degree; for Sp it is even and equals 2k
            Int cns = spec.family == Family::SU ? binomial(n, s) : binomial(n, s / 2);
            Poly base = c(s);
            if (mod_positive(cns, p) == 0 || s < h) {
                out.push_back(make_form("q" + std::to_string(s), base, F));
            } else {
                Int chp = spec.family == Family::SU ? binomial(n, h) : binomial(n, h / 2);
                Int t = mod_positive(cns * mod_inverse(chp, Int(p)), p);
                Poly corr = c(h) * w1.pow(static_cast<std::uint32_t>(s - h)) * t;
                out.push_back(make_form("q" + std::to_string(s), base - corr, F));
            }
        }
        return out;
    }
    if (spec.family == Family::E6) {
        auto all = stored_modp_set(ctx, p);
        all.pop_back(); // drop the h(E6) = 9 entry
        return all;
    }
    // E7, p = 2: degree-3 and degree-14 entries corrected
    Poly w = ctx.wsym().to_ring(F);
    Poly w2 = w * w, w3 = w * w * w;
    out.push_back(make_form("q3", c(3) - c(2) * w, F));
    out.push_back(make_form("q5", c(5) + w * c(4), F));
    out.push_back(make_form("q8", c(4) * c(4) + w2 * c(6) + w3 * c(5) + w.pow(8), F));
    out.push_back(make_form("q9", w2 * c(7) + w3 * c(6), F));
    out.push_back(make_form("q12", c(6) * c(6) + c(4) * c(4) * c(4), F));
    out.push_back(make_form("q14", c(7) * c(7) + c(4) * c(4) * c(6) + w2 * c(6) * c(6) - c(2) * w.pow(12), F));
    return out;
}

std::vector<OneForm> recipe_modp_quotient_set(CharPolyContext& ctx, long p)
{
    std::vector<OneForm> out;
    auto base = stored_modp_set(ctx, p);
    int h = h_degree(ctx.spec(), p);
    for (const auto& f : base) {
        int s = (f.cohomological_degree + 1) / 2;
        if (s == h) continue;
        auto lifted = ctx.lift_characteristic(f.characteristic, p);
        if (!lifted) throw std::logic_error("recipe_modp_quotient_set: lift failed at degree " + std::to_string(s));
        out.push_back(make_form("q" + std::to_string(s), *lifted, FF(p)));
    }
    return out;
}

std::vector<Poly> stored_derivatives_integral(CharPolyContext& ctx)
{
    const GroupSpec& spec = ctx.spec();
    auto rv = ctx.restriction().restricted_vars;
    Ring Z = ZZ();
    auto zpow = [&](Int c, int k) { return Poly::variable(rv, Z, 0, std::move(c), static_cast<std::uint32_t>(k)); };
    auto x = [&](const std::string& n) { return Poly::variable(rv, Z, static_cast<std::size_t>(rv->index(n))); };
    std::vector<Poly> out;
    if (spec.family == Family::SU) {
        for (int s = 2; s <= spec.rank_param; ++s) out.push_back(zpow(binomial(spec.rank_param, s), s - 1));
        return out;
    }
    if (spec.family == Family::Sp) {
        for (int s = 1; s <= spec.rank_param; ++s) out.push_back(zpow(binomial(spec.rank_param, s), 2 * s - 1));
        return out;
    }
    if (spec.family == Family::E6) {
        Poly zero = Poly::zero(rv, Z);
        return {zero, zero, zero, zero, zpow(1, 8), zero};
    }
    // E7 row, in the order of D(E7) = {2,6,8,10,12,14,18}
    Poly zero = Poly::zero(rv, Z);
    std::vector<Poly> row;
    row.push_back(zpow(1, 1));
    row.push_back(zpow(1, 2) * x("x3"));
    row.push_back(zpow(1, 2) * x("x5"));
    row.push_back(zero);
    row.push_back(zpow(1, 2) * x("x9") + zpow(1, 2) * x("x4") * x("x5") + zpow(1, 7) * x("x4"));
    row.push_back(zpow(1, 9) * x("x4") + zpow(1, 13));
    row.push_back(zero);
    return row;
}

std::vector<Poly> stored_derivatives_modp(CharPolyContext& ctx, long p)
{
    const GroupSpec& spec = ctx.spec();
    auto rv = ctx.restriction().restricted_vars;
    Ring F = FF(p);
    auto zpow = [&](Int c, int k) { return Poly::variable(rv, F, 0, std::move(c), static_cast<std::uint32_t>(k)); };
    std::vector<Poly> out;
    if (spec.family == Family::SU) {
        for (int k = 2; k <= spec.rank_param; ++k) out.push_back(zpow(binomial(spec.rank_param, k), k - 1));
        return out;
    }
    if (spec.family == Family::Sp) {
        for (int k = 1; k <= spec.rank_param; ++k) out.push_back(zpow(binomial(spec.rank_param, k), 2 * k - 1));
        return out;
    }
    if (spec.family == Family::E6) {
        Poly zero = Poly::zero(rv, F);
        return {zero, zero, zero, zero, zero, zpow(1, 8)};
    }
    Poly zero = Poly::zero(rv, F);
    return {zpow(1, 1), zpow(1, 2), zero, zero, zero, zero, zpow(1, 13)};
}

} // namespace liecoh
