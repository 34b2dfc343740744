#include "liecoh/steenrod.hpp"

#include "liecoh/tables.hpp"

#include <algorithm>

namespace liecoh {

namespace {

// sparse polynomial in e_1..e_N with integer coefficients, weight(e_i) = i;
// Newton's identities keep every intermediate integral here
struct EPoly {
    int N;
    std::map<std::vector<int>, Int> t;

    static EPoly zero(int N) { return EPoly{N, {}}; }
    static EPoly one(int N)
    {
        EPoly p{N, {}};
        p.t[std::vector<int>(static_cast<std::size_t>(N), 0)] = 1;
        return p;
    }
    static EPoly e(int N, int i)
    {
        EPoly p{N, {}};
        std::vector<int> ex(static_cast<std::size_t>(N), 0);
        ex[static_cast<std::size_t>(i - 1)] = 1;
        p.t[ex] = 1;
        return p;
    }
    static int weight(const std::vector<int>& ex)
    {
        int w = 0;
        for (std::size_t i = 0; i < ex.size(); ++i) w += ex[i] * static_cast<int>(i + 1);
        return w;
    }
    void add(const std::vector<int>& ex, const Int& c)
    {
        auto it = t.find(ex);
        if (it == t.end()) {
            if (c != 0) t.emplace(ex, c);
        } else {
            it->second += c;
            if (it->second == 0) t.erase(it);
        }
    }
    EPoly plus(const EPoly& o) const
    {
        EPoly r = *this;
        for (const auto& [e, c] : o.t) r.add(e, c);
        return r;
    }
    EPoly minus(const EPoly& o) const
    {
        EPoly r = *this;
        for (const auto& [e, c] : o.t) r.add(e, -c);
        return r;
    }
    EPoly times(const EPoly& o, int maxw) const
    {
        EPoly r = zero(N);
        for (const auto& [e1, c1] : t)
            for (const auto& [e2, c2] : o.t) {
                std::vector<int> e(e1.size());
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = e1[i] + e2[i];
                if (weight(e) > maxw) continue;
                r.add(e, c1 * c2);
            }
        return r;
    }
    EPoly scale(const Int& c) const
    {
        EPoly r = zero(N);
        for (const auto& [e, cf] : t) r.add(e, cf * c);
        return r;
    }
    EPoly divide_exact(long k) const
    {
        EPoly r = zero(N);
        for (const auto& [e, cf] : t) {
            if (cf % k != 0) throw std::logic_error("steenrod: non-integral symmetric coefficient");
            r.t.emplace(e, cf / k);
        }
        return r;
    }
};

} // namespace

SteenrodCalculus::SteenrodCalculus(CharPolyContext& ctx, int max_half_degree) : ctx_(ctx), max_degree_(0)
{
    int top = 0;
    switch (ctx_.spec().family) {
        case Family::SU: top = ctx_.spec().rank_param; break;
        case Family::Sp: top = 2 * ctx_.spec().rank_param; break;
        case Family::E6: top = 6; break;
        case Family::E7: top = 7; break;
    }
    build(max_half_degree > 0 ? max_half_degree : 2 * top - 1);
}

void SteenrodCalculus::build(int max_degree)
{
    max_degree_ = max_degree;
    const GroupSpec& spec = ctx_.spec();
    int N = 0;
    switch (spec.family) {
        case Family::SU: N = spec.rank_param; break;
        case Family::Sp: N = 2 * spec.rank_param; break;
        case Family::E6: N = 6; break;
        case Family::E7: N = 7; break;
    }
    const int maxw = max_degree;

    // power sums of the alphabet via Newton's identities
    int K = 2 * maxw;
    std::vector<EPoly> pw(static_cast<std::size_t>(K + 1), EPoly::zero(N));
    for (int k = 1; k <= K; ++k) {
        EPoly acc = EPoly::zero(N);
        for (int i = 1; i <= std::min(k, N); ++i) {
            EPoly term = (k - i >= 1) ? EPoly::e(N, i).times(pw[static_cast<std::size_t>(k - i)], maxw)
                                      : EPoly::e(N, i).scale(k);
            acc = (i % 2 == 1) ? acc.plus(term) : acc.minus(term);
        }
        pw[static_cast<std::size_t>(k)] = acc;
    }
    // power sums of the squared-shift alphabet {L + L^2}
    std::vector<EPoly> pn(static_cast<std::size_t>(maxw + 1), EPoly::zero(N));
    for (int k = 1; k <= maxw; ++k) {
        EPoly acc = EPoly::zero(N);
        for (int j = 0; j <= k; ++j)
            if (k + j <= K) acc = acc.plus(pw[static_cast<std::size_t>(k + j)].scale(binomial(k, j)));
        pn[static_cast<std::size_t>(k)] = acc;
    }
    // elementary symmetric of the new alphabet; only r <= N matter
    int rtop = std::min(maxw, N);
    std::vector<EPoly> En;
    En.push_back(EPoly::one(N));
    for (int r = 1; r <= rtop; ++r) {
        EPoly acc = EPoly::zero(N);
        for (int i = 1; i <= r; ++i) {
            EPoly term = En[static_cast<std::size_t>(r - i)].times(pn[static_cast<std::size_t>(i)], maxw);
            acc = (i % 2 == 1) ? acc.plus(term) : acc.minus(term);
        }
        En.push_back(acc.divide_exact(r));
    }

    // convert E_new[s] to symbol polynomials over F_2
    Ring F = FF(2);
    auto symbols = ctx_.symbols();
    auto to_symbols = [&](const EPoly& ep) {
        Poly out(symbols, F);
        for (const auto& [e, c] : ep.t) {
            const Int& num = c;
            if (mod_positive(num, 2) == 0) continue;
            // e_1 handling: 0 for SU/Sp, 3*w2 for E6/E7; e_odd = 0 for Sp
            Poly term = Poly::constant(symbols, F, num);
            bool dead = false;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (!e[i]) continue;
                int idx = static_cast<int>(i + 1);
                if (idx == 1) {
                    if (ctx_.spec().family == Family::SU || ctx_.spec().family == Family::Sp) {
                        dead = true; // e_1 of the alphabet vanishes identically
                        break;
                    }
                    // e_1 = 3*w2; the scalar is a unit mod 2
                    term = term * ctx_.wsym().to_ring(F).pow(static_cast<std::uint32_t>(e[i]));
                } else if (ctx_.spec().family == Family::Sp && idx % 2 == 1) {
                    dead = true; // odd elementary symmetric of a plus-minus alphabet
                    break;
                } else {
                    term = term * ctx_.csym(idx).to_ring(F).pow(static_cast<std::uint32_t>(e[i]));
                }
            }
            if (!dead) out = out + term;
        }
        return out;
    };
    for (int r : chern_range(spec)) {
        if (spec.family == Family::Sp && r % 2 == 1) continue;
        if (r > rtop) break;
        sq_c_[r] = to_symbols(En[static_cast<std::size_t>(r)]);
    }
}

Poly SteenrodCalculus::total_sq(const Poly& p)
{
    Ring F = FF(2);
    auto symbols = ctx_.symbols();
    Poly q = p.to_ring(F);
    Poly out(symbols, F);
    for (const auto& [e, c] : q.terms()) {
        Poly term = Poly::constant(symbols, F, c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (!e[i]) continue;
            const std::string& nm = symbols->names[i];
            Poly factor(symbols, F);
            if (nm[0] == 'w') {
                Poly v = Poly::variable(symbols, F, i);
                factor = v + v * v;
            } else if (nm[0] == 'c') {
                factor = sq_c_.at(std::stoi(nm.substr(1)));
            } else {
                throw std::domain_error("total_sq: x-classes have no symbol-level squares here");
            }
            term = term * factor.pow(e[i]);
        }
        out = out + term;
    }
    return out;
}

Poly SteenrodCalculus::sq(const Poly& p, int k)
{
    Poly q = p.to_ring(FF(2));
    auto d = q.homogeneous_degree();
    if (!d) return q;
    return total_sq(q).degree_part(*d + 2 * k);
}

bool SteenrodCalculus::phi2_kills(const Poly& p)
{
    Poly q = p.to_ring(FF(2));
    if (q.is_zero()) return true;
    auto dopt = q.homogeneous_degree();
    if (!dopt) throw std::invalid_argument("phi2_kills: inhomogeneous");
    int d = *dopt;
    auto symbols = ctx_.symbols();

    // monomials in the omega/chern symbols only
    std::vector<std::size_t> wc;
    for (std::size_t i = 0; i < symbols->size(); ++i)
        if (symbols->names[i][0] == 'w' || symbols->names[i][0] == 'c') wc.push_back(i);
    auto wc_monomials = [&](int deg) {
        std::vector<Exps> out;
        Exps cur(symbols->size(), 0);
        auto rec = [&](auto&& self, std::size_t pos, int rem) -> void {
            if (pos == wc.size()) {
                if (rem == 0) out.push_back(cur);
                return;
            }
            int wdeg = symbols->degrees[wc[pos]];
            for (int x = rem / wdeg; x >= 0; --x) {
                cur[wc[pos]] = static_cast<std::uint32_t>(x);
                self(self, pos + 1, rem - x * wdeg);
            }
            cur[wc[pos]] = 0;
        };
        rec(rec, 0, deg);
        return out;
    };

    // certificate rows: u * delta with u in ker sigma-hat, delta in S_2(G)
    CharPolyContext& ctx = ctx_;
    std::vector<OneForm> deltas = stored_modp_set(ctx, 2);
    std::vector<Exps> mons = wc_monomials(d);
    std::map<Exps, std::size_t> mix;
    for (std::size_t i = 0; i < mons.size(); ++i) mix.emplace(mons[i], i);
    std::size_t words = (mons.size() + 63) / 64;
    auto mask_of = [&](const Poly& pp) {
        std::vector<std::uint64_t> m(words, 0);
        for (const auto& [e, c] : pp.terms()) {
            if (mod_positive(c, 2) == 0) continue;
            auto it = mix.find(e);
            if (it == mix.end()) throw std::logic_error("phi2_kills: monomial outside the wc space");
            m[it->second / 64] ^= (1ull << (it->second % 64));
        }
        return m;
    };

    std::vector<std::vector<std::uint64_t>> pivots(mons.size());
    std::vector<bool> has_pivot(mons.size(), false);
    auto top_bit = [&](const std::vector<std::uint64_t>& m) -> long {
        for (std::size_t w = words; w-- > 0;)
            if (m[w]) return static_cast<long>(w * 64 + (63 - __builtin_clzll(m[w])));
        return -1;
    };
    auto insert_row = [&](std::vector<std::uint64_t> row) {
        while (true) {
            long tb = top_bit(row);
            if (tb < 0) return;
            if (has_pivot[static_cast<std::size_t>(tb)]) {
                const auto& pv = pivots[static_cast<std::size_t>(tb)];
                for (std::size_t w = 0; w < words; ++w) row[w] ^= pv[w];
            } else {
                has_pivot[static_cast<std::size_t>(tb)] = true;
                pivots[static_cast<std::size_t>(tb)] = std::move(row);
                return;
            }
        }
    };

    for (const auto& delta : deltas) {
        int dd = (delta.cohomological_degree + 1); // 2*deg
        if (dd > d) continue;
        // kernel basis of sigma-hat on (w,c)-monomials of degree d - dd:
        // monomials with zero image, plus pairwise sums of equal-image monomials
        int rem = d - dd;
        std::vector<Exps> umons = wc_monomials(rem);
        std::map<std::string, std::vector<Exps>> by_image;
        for (const auto& u : umons) {
            Poly up(symbols, FF(2));
            up.add_term(u, 1);
            Poly img = ctx.restrict_symbols(up);
            by_image[img.str()].push_back(u);
        }
        auto push_product = [&](const Poly& u) { insert_row(mask_of(u * delta.characteristic.to_ring(FF(2)))); };
        for (const auto& [img, us] : by_image) {
            if (img == "0") {
                for (const auto& u : us) {
                    Poly up(symbols, FF(2));
                    up.add_term(u, 1);
                    push_product(up);
                }
            } else {
                for (std::size_t i = 1; i < us.size(); ++i) {
                    Poly up(symbols, FF(2));
                    up.add_term(us[0], 1);
                    up.add_term(us[i], 1);
                    push_product(up);
                }
            }
        }
    }

    std::vector<std::uint64_t> target = mask_of(q);
    while (true) {
        long tb = top_bit(target);
        if (tb < 0) return true;
        if (!has_pivot[static_cast<std::size_t>(tb)]) return false;
        const auto& pv = pivots[static_cast<std::size_t>(tb)];
        for (std::size_t w = 0; w < words; ++w) target[w] ^= pv[w];
    }
}

} // namespace liecoh
